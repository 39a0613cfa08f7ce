#include "vfunc/commands.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "vfunc/error.hpp"
#include "vfunc/sampling.hpp"

namespace vfunc::cli {

namespace {

// Evaluates fn(0..count-1) on a worker pool; results keep index order.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t count, unsigned threads, Fn fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    std::vector<R> out(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t k = next++; k < count; k = next++) {
            try {
                out[k] = fn(k);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

struct Evaluation {
    VResult formula;
    VResult oracle;
    std::string fingerprint;
    bool agree() const { return formula.value == oracle.value; }
};

Evaluation evaluate(const PairPtr& pair) {
    return Evaluation{v_formula(*pair), v_oracle(pair), filtration_fingerprint(upper_filtration(*pair))};
}

std::string csv_row(const ExtensionPair& pair, const Evaluation& ev) {
    std::ostringstream row;
    row << csv_field(laurent_to_json(pair.g1()).dump()) << ',' << csv_field(laurent_to_json(pair.g2()).dump()) << ','
        << format_rational(ev.formula.value) << ',' << format_rational(ev.oracle.value) << ','
        << (ev.agree() ? "true" : "false") << ',' << ev.formula.s << ',' << csv_field(ev.fingerprint) << '\n';
    return row.str();
}

CommandResult failure(const Error& e) { return CommandResult{exit_code_for(e.kind()), "", e.what()}; }

PairPtr validated(const std::string& job_text) {
    JobSpec job = parse_job_text(job_text);
    return ExtensionPair::validate(job.field, job.a, std::move(job.g1), std::move(job.g2));
}

FieldPtr sweep_field(int p, int n, std::optional<std::vector<int>> modulus) {
    if (n < 2) throw Error(ErrorKind::InvalidField, "n must be at least 2 so that a outside F_p exists");
    return FiniteField::create(p, n, std::move(modulus));
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ParseError: return kParse;
        case ErrorKind::InvalidField:
        case ErrorKind::NotInJ:
        case ErrorKind::G1Zero:
        case ErrorKind::G2DependentOnG1:
        case ErrorKind::AInPrimeField:
        case ErrorKind::NontrivialUnramifiedPart: return kValidation;
        default: return kInternal;
    }
}

std::string csv_header() { return "g1,g2,v_formula,v_oracle,agree,s,fingerprint\n"; }

CommandResult cmd_v(const std::string& job_text, const std::string& format) {
    try {
        if (format != "json" && format != "csv")
            throw Error(ErrorKind::ParseError, "unknown format \"" + format + "\"");
        const PairPtr pair = validated(job_text);
        const Evaluation ev = evaluate(pair);
        CommandResult result;
        if (format == "csv") {
            result.output = csv_header() + csv_row(*pair, ev);
        } else {
            const json out{{"formula", vresult_to_json(ev.formula)},
                           {"oracle", vresult_to_json(ev.oracle)},
                           {"agree", ev.agree()}};
            result.output = out.dump(2) + "\n";
        }
        if (!ev.agree()) {
            result.exit_code = kDisagreement;
            result.error = "formula and oracle disagree";
        }
        return result;
    } catch (const Error& e) {
        return failure(e);
    }
}

CommandResult cmd_filtration(const std::string& job_text) {
    try {
        const PairPtr pair = validated(job_text);
        const Filtration upper = upper_filtration(*pair);
        const Filtration lower = lower_filtration(*pair);
        const json out{{"upper", filtration_to_json(upper)},
                       {"lower", filtration_to_json(lower)},
                       {"fingerprint", filtration_fingerprint(upper)},
                       {"quotient_compat", quotient_compat_check(*pair)}};
        return CommandResult{kOk, out.dump(2) + "\n", ""};
    } catch (const Error& e) {
        return failure(e);
    }
}

SweepReport counterexample_report(int p, int n, std::optional<std::vector<int>> modulus, unsigned threads) {
    const FieldPtr field = sweep_field(p, n, std::move(modulus));
    const FiniteField& F = *field;
    const FqElem a = F.generator();
    const int top = p * p - 1;
    const LaurentPoly g1 = LaurentPoly::t_power(field, -top);

    std::vector<FqElem> cs;
    for (std::uint32_t code = static_cast<std::uint32_t>(p); code < F.order(); ++code) cs.push_back(FqElem{code});

    SweepReport report;
    report.p = p;
    report.n = n;
    report.modulus = F.modulus();
    report.a = a;
    report.rows = parallel_map<SweepRow>(cs.size(), threads, [&](std::size_t k) {
        const LaurentPoly g2 = LaurentPoly::monomial(field, cs[k], -top) + LaurentPoly::t_power(field, -1);
        const PairPtr pair = ExtensionPair::validate(field, a, g1, g2);
        const Evaluation ev = evaluate(pair);
        return SweepRow{F.format(cs[k]), ev.formula, ev.oracle, ev.agree(), ev.fingerprint};
    });

    report.filtration_constant = true;
    report.v_constant = true;
    for (const auto& row : report.rows) {
        if (row.fingerprint != report.rows.front().fingerprint) report.filtration_constant = false;
        if (row.formula.value != report.rows.front().formula.value) report.v_constant = false;
        if (row.formula.value != Rational(p)) report.exceptional_c.push_back(row.c);
    }
    report.minus_a_to_the_p = F.format(F.neg(F.frobenius(a)));
    report.minus_a_squared = F.format(F.neg(F.mul(a, a)));
    return report;
}

json sweep_report_to_json(const SweepReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back(json{{"c", row.c},
                            {"v_formula", format_rational(row.formula.value)},
                            {"v_oracle", format_rational(row.oracle.value)},
                            {"s", row.formula.s},
                            {"agree", row.agree},
                            {"fingerprint", row.fingerprint}});
    std::ostringstream modulus;
    for (std::size_t i = 0; i < report.modulus.size(); ++i) modulus << (i ? "," : "") << report.modulus[i];
    const bool single = report.exceptional_c.size() == 1;
    return json{{"p", report.p},
                {"n", report.n},
                {"modulus", modulus.str()},
                {"a", "w"},
                {"g1", "t^-(p^2-1)"},
                {"g2", "c*t^-(p^2-1) + t^-1"},
                {"rows", rows},
                {"filtration_constant", report.filtration_constant},
                {"v_constant", report.v_constant},
                {"exceptional_c", report.exceptional_c},
                {"minus_a_to_the_p", report.minus_a_to_the_p},
                {"minus_a_squared", report.minus_a_squared},
                {"exceptional_is_minus_a_to_the_p", single && report.exceptional_c.front() == report.minus_a_to_the_p},
                {"exceptional_is_minus_a_squared", single && report.exceptional_c.front() == report.minus_a_squared}};
}

CommandResult cmd_counterexample(int p, int n, std::optional<std::vector<int>> modulus, unsigned threads) {
    try {
        const SweepReport report = counterexample_report(p, n, std::move(modulus), threads);
        CommandResult result{kOk, sweep_report_to_json(report).dump(2) + "\n", ""};
        if (std::any_of(report.rows.begin(), report.rows.end(), [](const SweepRow& r) { return !r.agree; })) {
            result.exit_code = kDisagreement;
            result.error = "formula and oracle disagree";
        }
        return result;
    } catch (const Error& e) {
        return failure(e);
    }
}

CommandResult cmd_sweep(int p, int n, int max_degree, std::uint64_t seed, int count,
                        std::optional<std::vector<int>> modulus, unsigned threads) {
    try {
        if (max_degree < 1) throw Error(ErrorKind::InvalidField, "max-degree must be at least 1");
        if (count < 0) throw Error(ErrorKind::InvalidField, "count must be nonnegative");
        const FieldPtr field = sweep_field(p, n, std::move(modulus));
        struct Row {
            std::string text;
            bool agree = true;
        };
        const auto rows = parallel_map<Row>(static_cast<std::size_t>(count), threads, [&](std::size_t k) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(k)};
            std::mt19937_64 rng(seq);
            const PairPtr pair = random_pair(field, max_degree, rng);
            const Evaluation ev = evaluate(pair);
            return Row{csv_row(*pair, ev), ev.agree()};
        });
        CommandResult result{kOk, csv_header(), ""};
        for (const auto& row : rows) {
            result.output += row.text;
            if (!row.agree) {
                result.exit_code = kDisagreement;
                result.error = "formula and oracle disagree";
            }
        }
        return result;
    } catch (const Error& e) {
        return failure(e);
    }
}

}  // namespace vfunc::cli
