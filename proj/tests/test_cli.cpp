#include "sexag/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sexag/json.hpp"

namespace {

struct RunResult {
    int status = 0;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.status = sexag::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

void expect_ok(const std::vector<std::string>& args, const std::string& expected_out) {
    const RunResult r = run_cli(args);
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, expected_out);
    EXPECT_EQ(r.err, "");
}

void expect_fail(const std::vector<std::string>& args, int status,
                 const std::string& expected_err) {
    const RunResult r = run_cli(args);
    EXPECT_EQ(r.status, status);
    EXPECT_EQ(r.err, expected_err);
}

}  // namespace

TEST(Commands, Parse) {
    expect_ok({"parse", "0;(8,34,17)"},
              "canonical: 0;(8,34,17)\n"
              "value: 1/7\n");
    // terminating non-negative values additionally show place-value digits
    expect_ok({"parse", "5, 20, 0, 0"},
              "canonical: 5,20,0,0\n"
              "value: 1152000\n"
              "floating: 5,20 e2\n");
    expect_ok({"parse", "-1,1"},
              "canonical: -1,1\n"
              "value: -61\n");
    expect_ok({"--unrolled", "parse", "0;(8,34,17)"},
              "canonical: 0;8,34,17,8,34,17,...\n"
              "value: 1/7\n");
}

TEST(Commands, Eval) {
    expect_ok({"eval", "0;30 + 0;20"}, "0;50\nvalue: 5/6\n");
    expect_ok({"eval", "0;30+0;20"}, "0;50\nvalue: 5/6\n");
    expect_ok({"eval", "1 + 2 * 3"}, "7\nvalue: 7\n");          // * binds tighter
    expect_ok({"eval", "(1 + 2) * 3"}, "9\nvalue: 9\n");        // grouping parens
    expect_ok({"eval", "0;(8,34,17) × 7"}, "1\nvalue: 1\n");    // 1/7 times 7
    expect_ok({"eval", "0;30 × 4 ÷ 2"}, "1\nvalue: 1\n");
    expect_ok({"eval", "1 − 2"}, "-1\nvalue: -1\n");            // unicode minus
    expect_ok({"eval", "-0;30 * -4"}, "2\nvalue: 2\n");
    expect_ok({"eval", "2 × (1 + 1;30)"}, "5\nvalue: 5\n");
    expect_ok({"eval", "((1))"}, "1\nvalue: 1\n");
}

TEST(Commands, Recip) {
    expect_ok({"recip", "7"}, "0;(8,34,17)  period=3\n");
    expect_ok({"recip", "2"}, "0;30  terminating\n");
    expect_ok({"recip", "81"}, "0;0,44,26,40  terminating\n");
    expect_ok({"recip", "1"}, "1  terminating\n");
    expect_ok({"--unrolled", "recip", "7"}, "0;8,34,17,8,34,17,...  period=3\n");
    expect_ok({"--unrolled=3", "recip", "7"}, "0;8,34,17,8,34,17,8,34,17,...  period=3\n");
}

TEST(Commands, RegularAndPeriod) {
    expect_ok({"regular", "93450"},
              "regular: no\n"
              "split: 2 × 3 × 5² × 623 (unfactored)\n");
    expect_ok({"regular", "60"},
              "regular: yes\n"
              "split: 2² × 3 × 5\n");
    expect_ok({"--ascii", "regular", "93450"},
              "regular: no\n"
              "split: 2 x 3 x 5^2 x 623 (unfactored)\n");
    expect_ok({"period", "14"}, "period: 3\nprefix: 1\n");
    expect_ok({"period", "12"}, "period: 0 (terminating)\nprefix: 1\n");
    expect_ok({"period", "1"}, "period: 0 (terminating)\nprefix: 0\n");
}

TEST(Commands, DivmodGcdFactor) {
    expect_ok({"divmod", "5,20,0,0", "7"}, "q=45,42,51 r=3\n");
    expect_ok({"divmod", "10", "2"}, "q=5 r=0\n");
    expect_ok({"gcd", "93450", "72625", "662704", "590625"}, "7\n");
    expect_ok({"factor", "662704"}, "2⁴ × 7 × 61 × 97\n");
    expect_ok({"--ascii", "factor", "662704"}, "2^4 x 7 x 61 x 97\n");
    expect_ok({"--limit", "10", "factor", "9797"}, "9797 (unfactored)\n");
}

TEST(Commands, Convert) {
    expect_ok({"convert", "1", "guru", "sila"}, "1152000 sila\n");
    expect_ok({"convert", "455/6", "gin", "mana"},
              "91/72 mana\n"
              "mixed: 1 ma-na 15 5/6 gín\n");
    expect_ok({"convert", "1,15;50", "gin", "mana"},
              "91/72 mana\n"
              "mixed: 1 ma-na 15 5/6 gín\n");
}

TEST(Commands, Stone) {
    const std::string expected =
        "  multiply by 13: 13,0\n"
        "  divide by 12 (× 0;5): 1,5\n"
        "  multiply by 7: 7,35\n"
        "  divide by 6 (× 0;10): 1,15;50\n"
        "weight: 1,15;50 gín (= 455/6)\n"
        "mixed: 1 ma-na 15 5/6 gín\n"
        "check: forward steps leave 60 gín\n"
        "note: reconstruction: the tablet states the problem without the procedure; "
        "each pass clears the most recent subtraction\n";
    expect_ok({"stone", "7", "13", "1,0"}, expected);
    // the remainder operand accepts decimal and sexagesimal spellings alike
    EXPECT_EQ(run_cli({"stone", "7", "13", "60"}).out, expected);
}

TEST(Commands, Table) {
    expect_ok({"table", "12"},
              "igi 2 → 30\n"
              "igi 3 → 20\n"
              "igi 4 → 15\n"
              "igi 5 → 12\n"
              "igi 6 → 10\n"
              "igi 8 → 7,30\n"
              "igi 9 → 6,40\n"
              "igi 10 → 6\n"
              "igi 12 → 5\n");
    // both columns are sexagesimal; 64 renders as 1,4 and its igi as 56,15
    const RunResult r = run_cli({"table", "81"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("igi 1,4 → 56,15\n"), std::string::npos);
    EXPECT_NE(r.out.find("igi 1,21 → 44,26,40\n"), std::string::npos);
}

TEST(Commands, Verify) {
    const RunResult r = run_cli({"verify", "all"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.err, "");
    EXPECT_NE(r.out.find("Šuruppak grain division: PASS\n"), std::string::npos);
    EXPECT_NE(r.out.find("MS 3956 factorizations: PASS\n"), std::string::npos);
    EXPECT_NE(r.out.find("YBC 4652 no. 8 stone weight: PASS\n"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

    const RunResult single = run_cli({"verify", "shuruppak"});
    EXPECT_EQ(single.status, 0);
    EXPECT_NE(single.out.find("  igi 7: expected=0;(8,34,17)  actual=0;(8,34,17)  PASS\n"),
              std::string::npos);
}

TEST(Commands, RepeatedRunsAreByteIdentical) {
    const std::vector<std::vector<std::string>> cases = {
        {"verify", "all"},
        {"table", "81"},
        {"--json", "stone", "7", "13", "1,0"},
        {"recip", "7"},
    };
    for (const auto& args : cases) {
        const RunResult a = run_cli(args);
        const RunResult b = run_cli(args);
        EXPECT_EQ(a.status, b.status);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.err, b.err);
    }
}

TEST(Json, EnvelopeAndPayloads) {
    const RunResult gcd = run_cli({"--json", "gcd", "12", "18"});
    EXPECT_EQ(gcd.status, 0);
    EXPECT_EQ(gcd.out,
              "{\n"
              "  \"command\": \"gcd\",\n"
              "  \"ok\": true,\n"
              "  \"result\": {\n"
              "    \"values\": [\n"
              "      \"12\",\n"
              "      \"18\"\n"
              "    ],\n"
              "    \"gcd\": \"6\"\n"
              "  }\n"
              "}\n");

    const sexag::Json recip = sexag::Json::parse(run_cli({"--json", "recip", "7"}).out);
    EXPECT_EQ(recip["command"], "recip");
    EXPECT_EQ(recip["ok"], true);
    EXPECT_EQ(recip["result"]["rendered"], "0;(8,34,17)");
    EXPECT_EQ(recip["result"]["period"]["kind"], "periodic");
    EXPECT_EQ(recip["result"]["period"]["period"], 3);
    EXPECT_EQ(recip["result"]["reciprocal"]["repetend"], sexag::Json({8, 34, 17}));
    EXPECT_EQ(recip["result"]["reciprocal"]["int_digits"], sexag::Json({0}));

    const sexag::Json parse = sexag::Json::parse(run_cli({"--json", "parse", "1,15;50"}).out);
    EXPECT_EQ(parse["result"]["canonical"], "1,15;50");
    EXPECT_EQ(parse["result"]["value"]["numerator"], "455");
    EXPECT_EQ(parse["result"]["value"]["denominator"], "6");
    EXPECT_EQ(parse["result"]["floating"]["digits"], sexag::Json({1, 15, 50}));
    EXPECT_EQ(parse["result"]["floating"]["exponent"], -1);

    const sexag::Json stone =
        sexag::Json::parse(run_cli({"--json", "stone", "7", "13", "1,0"}).out);
    EXPECT_EQ(stone["result"]["solution"]["weight"]["numerator"], "455");
    EXPECT_EQ(stone["result"]["solution"]["trace"].size(), 4u);
    EXPECT_EQ(stone["result"]["solution"]["trace"][3]["text"], "1,15;50");
    EXPECT_EQ(stone["result"]["mixed"], "1 ma-na 15 5/6 gín");
    EXPECT_EQ(stone["result"]["check"]["numerator"], "60");

    const sexag::Json verify = sexag::Json::parse(run_cli({"--json", "verify", "all"}).out);
    EXPECT_EQ(verify["result"].size(), 3u);
    for (const auto& report : verify["result"]) {
        EXPECT_EQ(report["pass"], true);
        for (const auto& check : report["checks"]) {
            EXPECT_EQ(check["pass"], true);
        }
    }
}

TEST(Json, ErrorEnvelopeGoesToStdout) {
    const RunResult r = run_cli({"--json", "recip", "0"});
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.out,
              "{\n"
              "  \"command\": \"recip\",\n"
              "  \"ok\": false,\n"
              "  \"error\": \"smooth_split requires a positive integer\"\n"
              "}\n");
    EXPECT_EQ(r.err, "error: smooth_split requires a positive integer\n");

    // parse errors keep the caret block on stderr and the first line in JSON
    const RunResult p = run_cli({"--json", "parse", "45,75,51"});
    EXPECT_EQ(p.status, 2);
    const sexag::Json envelope = sexag::Json::parse(p.out);
    EXPECT_EQ(envelope["ok"], false);
    EXPECT_EQ(envelope["error"], "digit token 75 exceeds 59");
    EXPECT_NE(p.err.find("^"), std::string::npos);
}

TEST(Errors, UsageProblemsExitTwo) {
    const RunResult bare = run_cli({});  // no arguments: usage on stderr
    EXPECT_EQ(bare.status, 2);
    EXPECT_EQ(bare.out, "");
    EXPECT_NE(bare.err.find("usage: igi [options] <command> [arguments]"),
              std::string::npos);
    expect_fail({"bogus", "1"}, 2, "error: unknown subcommand \"bogus\" (try igi help)\n");
    expect_fail({"parse"}, 2, "error: usage: igi parse <numeral>\n");
    expect_fail({"divmod", "5"}, 2, "error: usage: igi divmod <n> <d>\n");
    expect_fail({"gcd"}, 2, "error: usage: igi gcd <n> [<n>...]\n");
    expect_fail({"verify", "nippur"}, 2,
                "error: usage: igi verify {shuruppak|ms3956|ybc4652|all}\n");
    expect_fail({"--bogus", "recip", "7"}, 2, "error: unknown option --bogus\n");
    expect_fail({"--unrolled=0", "recip", "7"}, 2,
                "error: option --unrolled expects a positive integer, got \"0\"\n");
    expect_fail({"--guard", "xyz", "period", "7"}, 2,
                "error: option --guard expects a positive integer, got \"xyz\"\n");
    expect_fail({"factor", "xyz"}, 2,
                "error: expected a decimal or sexagesimal integer, got \"xyz\"\n");
    expect_fail({"divmod", "0;30", "2"}, 2, "error: expected an integer, got \"0;30\"\n");
    expect_fail({"convert", "1", "bogus", "gin"}, 2,
                "error: unknown unit \"bogus\" (expected sila, guru, gin or mana)\n");
    expect_fail({"--out", "/tmp/x", "recip", "7"}, 2,
                "error: --out is only supported by table\n");
}

TEST(Errors, ParseDiagnosticsCarryACaret) {
    expect_fail({"parse", "45,75,51"}, 2,
                "error: digit token 75 exceeds 59\n"
                "  45,75,51\n"
                "     ^\n");
    expect_fail({"eval", "0;30 + + 2"}, 2,
                "error: expected a sexagesimal literal\n"
                "  0;30 + + 2\n"
                "         ^\n");
    expect_fail({"eval", "1,(2) + 3"}, 2,
                "error: expected a digit token\n"
                "  1,(2) + 3\n"
                "    ^\n");
}

TEST(Errors, DomainProblemsExitOne) {
    expect_fail({"recip", "0"}, 1, "error: smooth_split requires a positive integer\n");
    expect_fail({"divmod", "5", "0"}, 1, "error: divisor must be positive\n");
    expect_fail({"gcd", "0", "0"}, 1, "error: gcd of an all-zero list\n");
    expect_fail({"eval", "1 / 0"}, 1, "error: division by zero\n");
    expect_fail({"convert", "1", "guru", "gin"}, 1,
                "error: cannot convert guru to gin: different dimensions\n");
    expect_fail({"table", "1"}, 1, "error: table bound must be at least 2\n");
    expect_fail({"stone", "1", "2", "1,0"}, 1,
                "error: every step divisor must be at least 2\n");
    expect_fail({"--guard", "2", "period", "7"}, 1,
                "error: period of 1/7 exceeds guard 2 (raise --guard)\n");
}

TEST(Help, ListsEveryCommand) {
    const RunResult r = run_cli({"--help"});
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.starts_with("igi - exact sexagesimal (base-60) arithmetic\n"));
    for (const auto& cmd : sexag::cli::command_table()) {
        EXPECT_NE(r.out.find(std::string(cmd.name)), std::string::npos) << cmd.name;
        EXPECT_NE(r.out.find(std::string(cmd.summary)), std::string::npos) << cmd.name;
    }
    for (const char* option : {"--json", "--unrolled", "--ascii", "--guard", "--limit",
                               "--out"}) {
        EXPECT_NE(r.out.find(option), std::string::npos) << option;
    }
}

TEST(Table, OutFileReceivesExactlyTheStdoutText) {
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "igi_test_table.txt";
    std::filesystem::remove(path);

    const RunResult direct = run_cli({"table", "30"});
    const RunResult filed = run_cli({"--out", path.string(), "table", "30"});
    EXPECT_EQ(filed.status, 0);
    EXPECT_EQ(filed.out, "");

    std::ifstream in(path, std::ios::binary);
    ASSERT_TRUE(in.good());
    std::ostringstream content;
    content << in.rdbuf();
    EXPECT_EQ(content.str(), direct.out);
    std::filesystem::remove(path);
}

// Every public entry point of the library is reachable from some subcommand;
// the dispatch table records which ones each command drives.
TEST(Surface, CommandTableCoversTheWholeApi) {
    const std::set<std::string_view> inventory{
        "parse_sex", "format_sex", "to_floating", "from_integer",
        "Rational::operator+", "Rational::operator-", "Rational::operator*",
        "Rational::operator/", "to_rational", "to_sexagesimal",
        "smooth_split", "is_regular", "reciprocal", "period_length",
        "prefix_length", "regular_numbers_up_to", "reciprocal_table",
        "divmod_int", "divide_by_regular", "gcd_list", "factorize",
        "convert", "render_mixed",
        "stone_solve", "stone_check",
        "verify_shuruppak", "verify_ms3956", "verify_ybc4652",
    };

    const auto& table = sexag::cli::command_table();
    const std::vector<std::string_view> expected_names{
        "parse", "eval", "recip", "regular", "period", "table",
        "divmod", "gcd", "factor", "convert", "stone", "verify"};
    std::vector<std::string_view> names;
    std::set<std::string_view> covered;
    for (const auto& cmd : table) {
        names.push_back(cmd.name);
        EXPECT_FALSE(cmd.usage.empty()) << cmd.name;
        EXPECT_FALSE(cmd.summary.empty()) << cmd.name;
        EXPECT_FALSE(cmd.operations.empty()) << cmd.name;
        for (const auto op : cmd.operations) {
            EXPECT_TRUE(inventory.contains(op))
                << "command " << cmd.name << " lists unknown operation " << op;
            covered.insert(op);
        }
    }
    EXPECT_EQ(names, expected_names);
    EXPECT_EQ(covered, inventory);
}
