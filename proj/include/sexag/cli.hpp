#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "sexag/division.hpp"
#include "sexag/numeral.hpp"

namespace sexag::cli {

// Global options, all with deterministic defaults. --json, --unrolled[=K],
// --ascii, --guard N, --limit N, --out PATH (table only), --help.
struct CliConfig {
    enum class OutputMode { text, json };
    OutputMode output_mode = OutputMode::text;
    FormatOptions::RepetendStyle repetend_style = FormatOptions::RepetendStyle::parentheses;
    int unroll_repetitions = 2;
    FactorStyle factor_style = FactorStyle::superscript;
    std::uint64_t period_guard = 1'000'000;
    std::uint64_t factor_limit = 1'000'000;
    std::string out_path;  // empty = stdout
    bool show_help = false;
};

// One dispatch-table row; `operations` lists the library entry points the
// subcommand exercises, which a test cross-checks against the full API
// surface.
struct CommandInfo {
    std::string_view name;
    std::string_view usage;
    std::string_view summary;
    std::vector<std::string_view> operations;
};

const std::vector<CommandInfo>& command_table();

// Runs one command line (argv without the program name). Results go to out,
// diagnostics to err. Exit status: 0 success, 1 computation-domain error or
// failed verification, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sexag::cli
