#include "sexag/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <fstream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

#include "sexag/json.hpp"

namespace sexag::cli {

namespace {

// Command-line misuse: wrong operands, unknown options, malformed literals.
// Always exits 2, as opposed to domain errors (exit 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void usage_fail(const char* usage) {
    throw UsageError(std::string("usage: igi ") + usage);
}

std::string caret_block(std::string_view text, const ParseError& e) {
    std::string out(e.what());
    out += "\n  ";
    out += text;
    out += "\n  ";
    out += std::string(e.position(), ' ');
    out += '^';
    return out;
}

std::string digits_csv(const Digits& ds) {
    std::string out;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(ds[i]);
    }
    return out;
}

// ---------------------------------------------------------------- operands

SexNumber parse_literal(const std::string& text) {
    try {
        return parse_sex(text);
    } catch (const ParseError& e) {
        throw UsageError(caret_block(text, e));
    }
}

bool plain_integer(std::string_view t) {
    if (!t.empty() && t[0] == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

// Integers are accepted in decimal ("164571") or, when the token contains
// sexagesimal punctuation, as a numeral ("45,42,51").
Int parse_int_operand(const std::string& text) {
    if (plain_integer(text)) return Int(text);
    if (text.find_first_of(",;(") != std::string::npos) {
        SexNumber x = parse_literal(text);
        if (!x.is_integer()) throw UsageError("expected an integer, got \"" + text + "\"");
        return to_integer(x);
    }
    throw UsageError("expected a decimal or sexagesimal integer, got \"" + text + "\"");
}

// Decimal integer, decimal fraction "455/6", or sexagesimal numeral.
Rational parse_rational_operand(const std::string& text) {
    if (plain_integer(text)) return Rational(Int(text));
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (plain_integer(num) && plain_integer(den)) return Rational(Int(num), Int(den));
    }
    if (text.find_first_of(",;(") != std::string::npos) {
        return to_rational(parse_literal(text));
    }
    throw UsageError("expected a number (decimal, fraction or sexagesimal), got \"" + text + "\"");
}

std::uint64_t to_u64(const Int& v, const char* what) {
    if (v < 0 || v > Int(std::numeric_limits<std::uint64_t>::max())) {
        throw std::domain_error(std::string(what) + " out of range");
    }
    return v.convert_to<std::uint64_t>();
}

Unit parse_unit_operand(const std::string& text) {
    try {
        return parse_unit(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// ---------------------------------------------------------------- options

std::uint64_t parse_positive(const std::string& flag, const std::string& text) {
    std::uint64_t v = 0;
    const char* end = text.data() + text.size();
    auto [p, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || p != end || v == 0) {
        throw UsageError("option " + flag + " expects a positive integer, got \"" + text + "\"");
    }
    return v;
}

std::vector<std::string> extract_options(const std::vector<std::string>& args, CliConfig& cfg) {
    std::vector<std::string> positional;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& arg = args[i];
        // Only "--" introduces an option; a single "-" starts a negative
        // numeral.
        if (arg.size() < 2 || arg[0] != '-' || arg[1] != '-') {
            positional.push_back(arg);
            continue;
        }
        std::string name = arg;
        std::optional<std::string> inline_value;
        if (const auto eq = arg.find('='); eq != std::string::npos) {
            name = arg.substr(0, eq);
            inline_value = arg.substr(eq + 1);
        }
        auto need_value = [&]() -> std::string {
            if (inline_value) return *inline_value;
            if (i + 1 < args.size()) return args[++i];
            throw UsageError("option " + name + " expects a value");
        };
        auto no_value = [&] {
            if (inline_value) throw UsageError("option " + name + " does not take a value");
        };
        if (name == "--json") {
            no_value();
            cfg.output_mode = CliConfig::OutputMode::json;
        } else if (name == "--ascii") {
            no_value();
            cfg.factor_style = FactorStyle::ascii;
        } else if (name == "--help") {
            no_value();
            cfg.show_help = true;
        } else if (name == "--unrolled") {
            cfg.repetend_style = FormatOptions::RepetendStyle::unrolled;
            if (inline_value) {
                const std::uint64_t k = parse_positive(name, *inline_value);
                if (k > 10000) throw UsageError("option --unrolled repetition count too large");
                cfg.unroll_repetitions = static_cast<int>(k);
            }
        } else if (name == "--guard") {
            cfg.period_guard = parse_positive(name, need_value());
        } else if (name == "--limit") {
            cfg.factor_limit = parse_positive(name, need_value());
        } else if (name == "--out") {
            cfg.out_path = need_value();
        } else {
            throw UsageError("unknown option " + arg);
        }
    }
    return positional;
}

FormatOptions fmt_opts(const CliConfig& cfg) {
    return FormatOptions{cfg.repetend_style, cfg.unroll_repetitions};
}

// ---------------------------------------------------------------- evaluator

// Minimal precedence parser over sexagesimal literals: + - (and U+2212),
// * / (and × ÷), unary minus, parenthesized groups. A "(" directly after
// ";" or "," inside a literal belongs to the literal as its repetend;
// anywhere else it opens a group. Literals must not contain spaces.
class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Rational parse() {
        Rational v = expression();
        skip_spaces();
        if (pos_ != text_.size()) throw ParseError("unexpected character in expression", pos_);
        return v;
    }

private:
    void skip_spaces() {
        while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool eat(char c) {
        skip_spaces();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    bool eat_seq(const char* seq) {
        skip_spaces();
        const std::size_t len = std::strlen(seq);
        if (text_.compare(pos_, len, seq) != 0) return false;
        pos_ += len;
        return true;
    }

    Rational expression() {
        Rational v = term();
        while (true) {
            if (eat('+')) {
                v = v + term();
            } else if (eat('-') || eat_seq("−")) {
                v = v - term();
            } else {
                return v;
            }
        }
    }

    Rational term() {
        Rational v = factor();
        while (true) {
            if (eat('*') || eat_seq("×")) {
                v = v * factor();
            } else if (eat('/') || eat_seq("÷")) {
                v = v / factor();
            } else {
                return v;
            }
        }
    }

    Rational factor() {
        skip_spaces();
        if (eat('-') || eat_seq("−")) return -factor();
        if (eat('(')) {
            Rational v = expression();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        return literal();
    }

    Rational literal() {
        skip_spaces();
        const std::size_t start = pos_;
        if (peek() < '0' || peek() > '9') {
            throw ParseError("expected a sexagesimal literal", pos_);
        }
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if ((c >= '0' && c <= '9') || c == ',' || c == ';') {
                ++pos_;
                continue;
            }
            if (c == '(' && (text_[pos_ - 1] == ';' || text_[pos_ - 1] == ',')) {
                while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
                if (pos_ == text_.size()) {
                    throw ParseError("unterminated repetend, expected ')'", pos_);
                }
                ++pos_;  // ')' ends the literal
            }
            break;
        }
        const std::string token(text_.substr(start, pos_ - start));
        try {
            return to_rational(parse_sex(token));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), start + e.position());
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- handlers

struct Output {
    std::string text;  // text-mode payload, newline-terminated
    Json json;         // JSON-mode "result" payload
    int status = 0;
};

Output cmd_parse(const CliConfig& cfg, const std::vector<std::string>& ops) {
    if (ops.size() != 1) usage_fail("parse <numeral>");
    const SexNumber x = parse_literal(ops[0]);
    const Rational v = to_rational(x);
    const std::string canonical = format_sex(x, fmt_opts(cfg));

    std::string text = "canonical: " + canonical + "\nvalue: " + v.str() + "\n";
    Json j{{"canonical", canonical}, {"number", encode(x)}, {"value", encode(v)}};
    if (x.terminating() && x.sign() > 0) {
        const FloatingDigits f = to_floating(x);
        text += "floating: " + digits_csv(f.digits) + " e" + std::to_string(f.exponent) + "\n";
        j["floating"] = encode(f);
    }
    return Output{std::move(text), std::move(j)};
}

Output cmd_eval(const CliConfig& cfg, const std::vector<std::string>& ops) {
    if (ops.empty()) usage_fail("eval <expression>");
    std::string expr;
    for (const std::string& op : ops) {
        if (!expr.empty()) expr += ' ';
        expr += op;
    }
    Rational v;
    try {
        v = ExprParser(expr).parse();
    } catch (const ParseError& e) {
        throw UsageError(caret_block(expr, e));
    }
    const SexNumber x = to_sexagesimal(v);
    const std::string rendered = format_sex(x, fmt_opts(cfg));
    return Output{rendered + "\nvalue: " + v.str() + "\n",
                  Json{{"expression", expr},
                       {"sexagesimal", rendered},
                       {"number", encode(x)},
                       {"value", encode(v)}}};
}

Output cmd_recip(const CliConfig& cfg, const std::vector<std::string>& ops) {
    if (ops.size() != 1) usage_fail("recip <n>");
    const Int n = parse_int_operand(ops[0]);
    const PeriodLength pl = period_length(n, cfg.period_guard);
    if (pl.kind == PeriodLength::Kind::guard_exceeded) {
        throw std::domain_error("period of 1/" + n.str() + " exceeds guard " +
                                std::to_string(cfg.period_guard) + " (raise --guard)");
    }
    const SexNumber r = reciprocal(n);
    const std::string rendered = format_sex(r, fmt_opts(cfg));
    const std::string classified =
        r.terminating() ? "terminating" : "period=" + std::to_string(pl.period);
    return Output{rendered + "  " + classified + "\n",
                  Json{{"n", n.str()},
                       {"reciprocal", encode(r)},
                       {"rendered", rendered},
                       {"period", encode(pl)}}};
}

Output cmd_regular(const CliConfig& cfg, const std::vector<std::string>& ops) {
    if (ops.size() != 1) usage_fail("regular <n>");
    const Int n = parse_int_operand(ops[0]);
    const bool regular = is_regular(n);
    const SmoothSplit s = smooth_split(n);

    Factorization display;  // reuse the factorization renderer for 2^a 3^b 5^c m
    if (s.pow2 > 0) display.factors.emplace_back(Int(2), s.pow2);
    if (s.pow3 > 0) display.factors.emplace_back(Int(3), s.pow3);
    if (s.pow5 > 0) display.factors.emplace_back(Int(5), s.pow5);
    display.cofactor = s.cofactor;

    return Output{std::string("regular: ") + (regular ? "yes" : "no") +
                      "\nsplit: " + format_factorization(display, cfg.factor_style) + "\n",
                  Json{{"n", n.str()}, {"regular", regular}, {"split", encode(s)}}};
}

Output cmd_period(const CliConfig& cfg, const std::vector<std::string>& ops) {
    if (ops.size() != 1) usage_fail("period <n>");
    const Int n = parse_int_operand(ops[0]);
    const PeriodLength pl = period_length(n, cfg.period_guard);
    if (pl.kind == PeriodLength::Kind::guard_exceeded) {
        throw std::domain_error("period of 1/" + n.str() + " exceeds guard " +
                                std::to_string(cfg.period_guard) + " (raise --guard)");
    }
    const std::uint64_t prefix = prefix_length(n);
    const std::string period_line = pl.kind == PeriodLength::Kind::finite
                                        ? "period: 0 (terminating)"
                                        : "period: " + std::to_string(pl.period);
    return Output{period_line + "\nprefix: " + std::to_string(prefix) + "\n",
                  Json{{"n", n.str()}, {"period", encode(pl)}, {"prefix", prefix}}};
}

Output cmd_table(const CliConfig&, const std::vector<std::string>& ops) {
    if (ops.size() != 1) usage_fail("table <bound>");
    const std::uint64_t bound = to_u64(parse_int_operand(ops[0]), "table bound");
    const std::vector<ReciprocalEntry> table = reciprocal_table(bound);

    std::string text;
    Json rows = Json::array();
    for (const ReciprocalEntry& e : table) {
        text += "igi " + format_sex(from_integer(Int(e.n))) + " → " +
                digits_csv(e.igi.digits) + "\n";
        rows.push_back(encode(e));
    }
    return Output{std::move(text), std::move(rows)};
}

Output cmd_divmod(const CliConfig&, const std::vector<std::string>& ops) {
    if (ops.size() != 2) usage_fail("divmod <n> <d>");
    const Int n = parse_int_operand(ops[0]);
    const Int d = parse_int_operand(ops[1]);
    const DivMod dm = divmod_int(n, d);
    return Output{"q=" + format_sex(from_integer(dm.quotient)) +
                      " r=" + format_sex(from_integer(dm.remainder)) + "\n",
                  Json{{"dividend", n.str()},
                       {"divisor", d.str()},
                       {"quotient", dm.quotient.str()},
                       {"quotient_sex", format_sex(from_integer(dm.quotient))},
                       {"remainder", dm.remainder.str()},
                       {"remainder_sex", format_sex(from_integer(dm.remainder))}}};
}

Output cmd_gcd(const CliConfig&, const std::vector<std::string>& ops) {
    if (ops.empty()) usage_fail("gcd <n> [<n>...]");
    std::vector<Int> values;
    Json value_strs = Json::array();
    for (const std::string& op : ops) {
        values.push_back(parse_int_operand(op));
        value_strs.push_back(values.back().str());
    }
    const Int g = gcd_list(values);
    return Output{g.str() + "\n", Json{{"values", std::move(value_strs)}, {"gcd", g.str()}}};
}

Output cmd_factor(const CliConfig& cfg, const std::vector<std::string>& ops) {
    if (ops.size() != 1) usage_fail("factor <n>");
    const Int n = parse_int_operand(ops[0]);
    const Factorization f = factorize(n, cfg.factor_limit);
    const std::string rendered = format_factorization(f, cfg.factor_style);
    return Output{rendered + "\n",
                  Json{{"n", n.str()}, {"factorization", encode(f)}, {"rendered", rendered}}};
}

Output cmd_convert(const CliConfig&, const std::vector<std::string>& ops) {
    if (ops.size() != 3) usage_fail("convert <amount> <from> <to>");
    const Unit from = parse_unit_operand(ops[1]);
    const Unit to = parse_unit_operand(ops[2]);
    const Quantity q(parse_rational_operand(ops[0]), from);
    const Quantity res = convert(q, to);

    std::string text = res.magnitude().str() + " " + std::string(unit_name(to)) + "\n";
    Json j{{"from", encode(q)}, {"to", encode(res)}};
    if (dimension_of(to) == Dimension::weight) {
        const std::string mixed = render_mixed(res);
        text += "mixed: " + mixed + "\n";
        j["mixed"] = mixed;
    }
    return Output{std::move(text), std::move(j)};
}

Output cmd_stone(const CliConfig& cfg, const std::vector<std::string>& ops) {
    if (ops.empty()) usage_fail("stone [<k>...] <remainder>");
    StoneProblem p;
    Json steps = Json::array();
    for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
        p.steps.push_back(parse_int_operand(ops[i]));
        steps.push_back(p.steps.back().str());
    }
    p.remainder = parse_rational_operand(ops.back());

    const StoneSolution sol = stone_solve(p);
    const Rational recovered = stone_check(sol.weight, p);
    const std::string mixed = render_mixed(Quantity(sol.weight, Unit::gin));

    std::string text;
    for (const TraceStep& t : sol.trace) {
        text += "  " + t.description + ": " + format_sex(t.value, fmt_opts(cfg)) + "\n";
    }
    text += "weight: " + format_sex(to_sexagesimal(sol.weight), fmt_opts(cfg)) + " gín (= " +
            sol.weight.str() + ")\n";
    text += "mixed: " + mixed + "\n";
    text += "check: forward steps leave " + recovered.str() + " gín\n";
    text += "note: " + sol.note + "\n";

    return Output{std::move(text),
                  Json{{"problem", Json{{"steps", std::move(steps)}, {"remainder", encode(p.remainder)}}},
                       {"solution", encode(sol)},
                       {"mixed", mixed},
                       {"check", encode(recovered)}}};
}

Output cmd_verify(const CliConfig&, const std::vector<std::string>& ops) {
    if (ops.size() != 1) usage_fail("verify {shuruppak|ms3956|ybc4652|all}");
    std::vector<Report> reports;
    if (ops[0] == "shuruppak") {
        reports.push_back(verify_shuruppak());
    } else if (ops[0] == "ms3956") {
        reports.push_back(verify_ms3956());
    } else if (ops[0] == "ybc4652") {
        reports.push_back(verify_ybc4652());
    } else if (ops[0] == "all") {
        reports.push_back(verify_shuruppak());
        reports.push_back(verify_ms3956());
        reports.push_back(verify_ybc4652());
    } else {
        usage_fail("verify {shuruppak|ms3956|ybc4652|all}");
    }

    std::string text;
    Json j = Json::array();
    bool all_pass = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i > 0) text += "\n";
        text += render_text(reports[i]);
        j.push_back(encode(reports[i]));
        all_pass = all_pass && reports[i].pass();
    }
    return Output{std::move(text), std::move(j), all_pass ? 0 : 1};
}

// ---------------------------------------------------------------- dispatch

struct Command {
    CommandInfo info;
    Output (*handler)(const CliConfig&, const std::vector<std::string>&);
};

const std::vector<Command>& commands() {
    static const std::vector<Command> table = {
        {{"parse", "parse <numeral>", "canonicalize a sexagesimal numeral and show its exact value",
          {"parse_sex", "format_sex", "to_rational", "to_floating"}},
         cmd_parse},
        {{"eval", "eval <expression>", "evaluate + - × ÷ over sexagesimal literals, exactly",
          {"parse_sex", "Rational::operator+", "Rational::operator-", "Rational::operator*",
           "Rational::operator/", "to_rational", "to_sexagesimal", "format_sex"}},
         cmd_eval},
        {{"recip", "recip <n>", "reciprocal 1/n with terminating/periodic classification",
          {"reciprocal", "period_length", "format_sex"}},
         cmd_recip},
        {{"regular", "regular <n>", "is n regular (only prime factors 2, 3, 5)? shows the split",
          {"smooth_split", "is_regular"}},
         cmd_regular},
        {{"period", "period <n>", "repetend and prefix lengths of 1/n",
          {"period_length", "prefix_length"}},
         cmd_period},
        {{"table", "table <bound>", "reciprocal table of all regular numbers in 2..bound",
          {"reciprocal_table", "regular_numbers_up_to", "reciprocal", "to_floating",
           "from_integer"}},
         cmd_table},
        {{"divmod", "divmod <n> <d>", "Euclidean division with non-negative remainder",
          {"divmod_int", "from_integer", "format_sex"}},
         cmd_divmod},
        {{"gcd", "gcd <n> [<n>...]", "greatest common divisor of the arguments", {"gcd_list"}},
         cmd_gcd},
        {{"factor", "factor <n>", "trial-division factorization", {"factorize"}}, cmd_factor},
        {{"convert", "convert <amount> <from> <to>",
          "convert between sila/guru (capacity) or gin/mana (weight)",
          {"convert", "render_mixed"}},
         cmd_convert},
        {{"stone", "stone [<k>...] <remainder>",
          "stone-weight problem: each step takes a k-th away, remainder is left (in gín)",
          {"stone_solve", "stone_check", "divide_by_regular", "to_sexagesimal", "render_mixed"}},
         cmd_stone},
        {{"verify", "verify {shuruppak|ms3956|ybc4652|all}",
          "re-run the worked tablet examples and check every value",
          {"verify_shuruppak", "verify_ms3956", "verify_ybc4652"}},
         cmd_verify},
    };
    return table;
}

const Command* find_command(const std::string& name) {
    for (const Command& c : commands()) {
        if (c.info.name == name) return &c;
    }
    return nullptr;
}

void print_usage(std::ostream& os) {
    os << "igi - exact sexagesimal (base-60) arithmetic\n\n";
    os << "usage: igi [options] <command> [arguments]\n\n";
    os << "options:\n";
    os << "  --json           machine-readable output\n";
    os << "  --unrolled[=K]   print repetends unrolled K times (default 2) instead of (...)\n";
    os << "  --ascii          ASCII exponents: 2^4 instead of 2⁴\n";
    os << "  --guard N        iteration bound for period search (default 1000000)\n";
    os << "  --limit N        trial-division bound for factor (default 1000000)\n";
    os << "  --out PATH       write table output to a file (table only)\n\n";
    os << "commands:\n";
    std::size_t width = 0;
    for (const Command& c : commands()) width = std::max(width, c.info.usage.size());
    for (const Command& c : commands()) {
        os << "  " << c.info.usage << std::string(width - c.info.usage.size() + 2, ' ')
           << c.info.summary << "\n";
    }
}

std::string first_line(const std::string& s) {
    const auto nl = s.find('\n');
    return nl == std::string::npos ? s : s.substr(0, nl);
}

void report_error(const std::string& command, const std::string& message, const CliConfig& cfg,
                  std::ostream& out, std::ostream& err) {
    if (cfg.output_mode == CliConfig::OutputMode::json) {
        Json envelope{{"command", command}, {"ok", false}, {"error", first_line(message)}};
        out << envelope.dump(2) << "\n";
    }
    err << "error: " << message << "\n";
}

}  // namespace

const std::vector<CommandInfo>& command_table() {
    static const std::vector<CommandInfo> table = [] {
        std::vector<CommandInfo> t;
        for (const Command& c : commands()) t.push_back(c.info);
        return t;
    }();
    return table;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    std::string command;
    try {
        const std::vector<std::string> positional = extract_options(args, cfg);
        if (cfg.show_help || (!positional.empty() && positional[0] == "help")) {
            print_usage(out);
            return 0;
        }
        if (positional.empty()) {
            print_usage(err);
            return 2;
        }
        command = positional[0];
        const Command* cmd = find_command(command);
        if (!cmd) throw UsageError("unknown subcommand \"" + command + "\" (try igi help)");
        if (!cfg.out_path.empty() && command != "table") {
            throw UsageError("--out is only supported by table");
        }
        const Output o =
            cmd->handler(cfg, std::vector<std::string>(positional.begin() + 1, positional.end()));

        std::ofstream file;
        std::ostream* dest = &out;
        if (!cfg.out_path.empty()) {
            file.open(cfg.out_path);
            if (!file) throw std::domain_error("cannot open " + cfg.out_path + " for writing");
            dest = &file;
        }
        if (cfg.output_mode == CliConfig::OutputMode::json) {
            const Json envelope{{"command", command}, {"ok", o.status == 0}, {"result", o.json}};
            *dest << envelope.dump(2) << "\n";
        } else {
            *dest << o.text;
        }
        return o.status;
    } catch (const UsageError& e) {
        report_error(command, e.what(), cfg, out, err);
        return 2;
    } catch (const ParseError& e) {
        report_error(command, e.what(), cfg, out, err);
        return 2;
    } catch (const std::domain_error& e) {
        report_error(command, e.what(), cfg, out, err);
        return 1;
    } catch (const std::invalid_argument& e) {
        report_error(command, e.what(), cfg, out, err);
        return 1;
    }
}

}  // namespace sexag::cli
