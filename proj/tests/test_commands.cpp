#include <sstream>

#include "doctest.h"
#include "vfunc/commands.hpp"

using namespace vfunc;
using namespace vfunc::cli;

namespace {

const char* kFamilyW = R"({"p": 2, "n": 2, "a": "0,1", "g1": [[-3, "1,0"]], "g2": [[-3, "0,1"], [-1, "1,0"]]})";
const char* kFamilyW1 = R"({"p": 2, "n": 2, "a": "0,1", "g1": [[-3, "1,0"]], "g2": [[-3, "1,1"], [-1, "1,0"]]})";
const char* kJumps = R"({"p": 2, "n": 2, "a": "0,1", "g1": [[-1, "1,0"]], "g2": [[-3, "0,1"]]})";

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("v command, json") {
    const CommandResult r = cmd_v(kFamilyW);
    REQUIRE(r.exit_code == kOk);
    CHECK(r.error.empty());
    const json out = json::parse(r.output);
    CHECK(out["agree"] == true);
    CHECK(out["formula"]["value"] == "2");
    CHECK(out["formula"]["s"] == 6);
    CHECK(out["formula"]["route"] == "formula");
    CHECK(out["oracle"]["value"] == "2");
    CHECK(out["oracle"]["route"] == "oracle");

    const json out1 = json::parse(cmd_v(kFamilyW1).output);
    CHECK(out1["formula"]["value"] == "1");
    CHECK(out1["oracle"]["s"] == 3);
}

TEST_CASE("v command, csv") {
    const CommandResult r = cmd_v(kFamilyW, "csv");
    REQUIRE(r.exit_code == kOk);
    const auto lines = split_lines(r.output);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] + "\n" == csv_header());
    CHECK(lines[1].find(",2,2,true,6,") != std::string::npos);
    CHECK(cmd_v(kFamilyW, "xml").exit_code == kParse);
}

TEST_CASE("v command error codes") {
    CHECK(cmd_v("{\"p\": 2,").exit_code == kParse);
    CHECK(cmd_v("[]").exit_code == kParse);
    CHECK(cmd_v(R"({"p": 2, "n": 2, "a": "0,1", "g1": [], "g2": [[-1, "1,0"]]})").exit_code == kValidation);
    CHECK(cmd_v(R"({"p": 2, "n": 2, "a": "0,1", "g1": [[-2, "1,0"]], "g2": [[-1, "1,0"]]})").exit_code ==
          kValidation);
    CHECK(cmd_v(R"({"p": 2, "n": 2, "a": "1,0", "g1": [[-1, "1,0"]], "g2": [[-3, "1,0"]]})").exit_code ==
          kValidation);
    CHECK(cmd_v(R"({"p": 2, "n": 2, "a": "0,1", "g1": [[-1, "1,0"]], "g2": [[-1, "1,0"]]})").exit_code ==
          kValidation);
    CHECK(cmd_v(R"({"p": 4, "n": 2, "a": "0,1", "g1": [[-1, "1,0"]], "g2": [[-3, "1,0"]]})").exit_code ==
          kValidation);
    // Exponents out of order are malformed input.
    CHECK(cmd_v(R"({"p": 2, "n": 2, "a": "0,1", "g1": [[-1, "1,0"], [-3, "1,0"]], "g2": [[-5, "1,0"]]})").exit_code ==
          kParse);
    const CommandResult bad = cmd_v(R"({"p": 2, "n": 2, "a": "0,1", "g1": [], "g2": [[-1, "1,0"]]})");
    CHECK(bad.output.empty());
    CHECK_FALSE(bad.error.empty());
}

TEST_CASE("exit code mapping") {
    CHECK(exit_code_for(ErrorKind::ParseError) == 3);
    CHECK(exit_code_for(ErrorKind::NotInJ) == 2);
    CHECK(exit_code_for(ErrorKind::NontrivialUnramifiedPart) == 2);
    CHECK(exit_code_for(ErrorKind::LatticeAssertionFailed) == 1);
    CHECK(exit_code_for(ErrorKind::DivisionByZero) == 1);
}

TEST_CASE("filtration command") {
    const CommandResult r = cmd_filtration(kJumps);
    REQUIRE(r.exit_code == kOk);
    const json out = json::parse(r.output);
    CHECK(out["fingerprint"] == "upper|1:2@(1;0),3:1");
    CHECK(out["quotient_compat"] == true);
    REQUIRE(out["upper"]["breaks"].size() == 2);
    CHECK(out["upper"]["breaks"][0]["at"] == "1");
    CHECK(out["upper"]["breaks"][1]["at"] == "3");
    CHECK(out["lower"]["breaks"][1]["at"] == "5");
    CHECK(out["lower"]["breaks"][0]["basis"] == json::array({json::array({1, 0})}));
    CHECK(cmd_filtration("nope").exit_code == kParse);
}

TEST_CASE("counterexample report") {
    for (int p : {2, 3}) {
        const SweepReport rep = counterexample_report(p, 2, std::nullopt, 2);
        CHECK(rep.rows.size() == static_cast<std::size_t>(p * p - p));
        CHECK(rep.filtration_constant);
        CHECK_FALSE(rep.v_constant);
        REQUIRE(rep.exceptional_c.size() == 1);
        CHECK(rep.exceptional_c.front() == rep.minus_a_to_the_p);
        for (const auto& row : rep.rows) {
            CHECK(row.agree);
            const bool exceptional = row.c == rep.minus_a_to_the_p;
            CHECK(row.formula.value == (exceptional ? Rational(1) : Rational(p)));
        }
        const json j = sweep_report_to_json(rep);
        CHECK(j["exceptional_is_minus_a_to_the_p"] == true);
        // -a^p and -a^2 coincide exactly when p = 2.
        CHECK(j["exceptional_is_minus_a_squared"] == (p == 2));
    }
    // p = 3, a = w with w^2 = -1: -a^3 = w.
    CHECK(counterexample_report(3, 2, std::nullopt).minus_a_to_the_p == "0,1");
    CHECK(cmd_counterexample(2, 1, std::nullopt).exit_code == kValidation);
}

TEST_CASE("sweep is deterministic and thread-count independent") {
    const CommandResult a = cmd_sweep(2, 2, 5, 42, 30, std::nullopt, 1);
    const CommandResult b = cmd_sweep(2, 2, 5, 42, 30, std::nullopt, 4);
    REQUIRE(a.exit_code == kOk);
    CHECK(a.output == b.output);
    CHECK(split_lines(a.output).size() == 31);
    CHECK(cmd_sweep(2, 2, 5, 43, 30).output != a.output);
    // Row k depends only on (seed, k): a shorter sweep is a prefix.
    const CommandResult prefix = cmd_sweep(2, 2, 5, 42, 10);
    CHECK(a.output.rfind(prefix.output, 0) == 0);
    CHECK(cmd_sweep(2, 2, 0, 42, 5).exit_code == kValidation);
    CHECK(cmd_sweep(3, 2, 4, 7, 0).output == csv_header());
}
