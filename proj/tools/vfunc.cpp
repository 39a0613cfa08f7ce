#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "vfunc/commands.hpp"
#include "vfunc/error.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path);
    if (!in) throw vfunc::Error(vfunc::ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int emit(const vfunc::cli::CommandResult& r) {
    std::cout << r.output;
    if (!r.error.empty()) std::cerr << "vfunc: " << r.error << '\n';
    return r.exit_code;
}

std::optional<std::vector<int>> modulus_option(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return vfunc::parse_modulus(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact v-function and ramification filtrations of (Z/p)^2 Artin-Schreier extensions"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "json";
    int p = 2;
    int n = 2;
    std::string modulus;
    int max_degree = 5;
    std::uint64_t seed = 42;
    int count = 100;
    unsigned threads = 0;

    auto* v = app.add_subcommand("v", "evaluate the v-function by the closed formula and the tuning-module oracle");
    v->add_option("--input", input, "job file (\"-\" for stdin)")->required();
    v->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* filt = app.add_subcommand("filtration", "upper and lower ramification filtrations");
    filt->add_option("--input", input, "job file (\"-\" for stdin)")->required();

    auto* counter = app.add_subcommand("counterexample", "sweep c over F_q minus F_p for g2 = c t^-(p^2-1) + t^-1");
    auto* sweep = app.add_subcommand("sweep", "random formula-vs-oracle cross-check as CSV");
    for (auto* sub : {counter, sweep}) {
        sub->add_option("--p", p, "characteristic")->required();
        sub->add_option("--n", n, "extension degree of F_q over F_p")->required();
        sub->add_option("--modulus", modulus, "irreducible modulus \"c0,c1,...,cn\" (low degree first)");
        sub->add_option("--threads", threads, "worker threads (0 = hardware concurrency)");
    }
    sweep->add_option("--max-degree", max_degree, "exponents drawn from [-max-degree, -1]");
    sweep->add_option("--seed", seed, "random seed");
    sweep->add_option("--count", count, "number of pairs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e);
        return status == 0 ? vfunc::cli::kOk : vfunc::cli::kParse;
    }

    try {
        if (v->parsed()) return emit(vfunc::cli::cmd_v(read_input(input), format));
        if (filt->parsed()) return emit(vfunc::cli::cmd_filtration(read_input(input)));
        if (counter->parsed()) return emit(vfunc::cli::cmd_counterexample(p, n, modulus_option(modulus), threads));
        if (sweep->parsed())
            return emit(vfunc::cli::cmd_sweep(p, n, max_degree, seed, count, modulus_option(modulus), threads));
    } catch (const vfunc::Error& e) {
        std::cerr << "vfunc: " << e.what() << '\n';
        return vfunc::cli::exit_code_for(e.kind());
    }
    return vfunc::cli::kInternal;
}
