#include "sexag/problems.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "sexag/division.hpp"
#include "sexag/metrology.hpp"
#include "sexag/regularity.hpp"

namespace sexag {

namespace {

void validate_steps(const std::vector<Int>& steps) {
    for (const Int& k : steps) {
        if (k < 2) throw std::invalid_argument("every step divisor must be at least 2");
    }
}

}  // namespace

StoneSolution stone_solve(const StoneProblem& p) {
    validate_steps(p.steps);
    if (!(p.remainder > Rational(0))) throw std::invalid_argument("remainder must be positive");

    StoneSolution sol;
    sol.note = "reconstruction: the tablet states the problem without the procedure; "
               "each pass clears the most recent subtraction";
    Rational w = p.remainder;
    // Undo the subtractions back to front: w came from w·(k-1)/k, so
    // multiply by k and divide by k - 1.
    for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) {
        const Int& k = *it;
        w = w * Rational(k);
        sol.trace.push_back(TraceStep{"multiply by " + k.str(), to_sexagesimal(w)});

        const Int d = k - 1;
        const SexNumber& before = sol.trace.back().value;
        if (is_regular(d) && before.terminating()) {
            SexNumber after = divide_by_regular(before, d);
            w = w / Rational(d);
            sol.trace.push_back(TraceStep{
                "divide by " + d.str() + " (× " + format_sex(reciprocal(d)) + ")",
                std::move(after)});
        } else {
            w = w / Rational(d);
            sol.trace.push_back(
                TraceStep{"divide by " + d.str() + " (exact rational)", to_sexagesimal(w)});
        }
    }
    sol.weight = std::move(w);
    return sol;
}

Rational stone_check(const Rational& weight, const StoneProblem& p) {
    validate_steps(p.steps);
    if (!(weight > Rational(0))) throw std::domain_error("weight must be positive");
    Rational w = weight;
    for (const Int& k : p.steps) w = w - w / Rational(k);
    return w;
}

bool Report::pass() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string render_text(const Report& report) {
    std::string out = report.title + "\n";
    for (const Check& c : report.checks) {
        out += "  " + c.label + ": expected=" + c.expected + "  actual=" + c.actual +
               (c.pass ? "  PASS" : "  FAIL") + "\n";
    }
    out += report.title + ": " + (report.pass() ? "PASS" : "FAIL") + "\n";
    return out;
}

namespace {

Check make_check(std::string label, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    return Check{std::move(label), std::move(expected), std::move(actual), pass};
}

std::string sex_of_int(const Int& n) { return format_sex(from_integer(n)); }

// Out-of-range trace access must show up as a failed check, not a crash.
std::string trace_value(const StoneSolution& sol, std::size_t i) {
    return i < sol.trace.size() ? format_sex(sol.trace[i].value) : "(missing)";
}

}  // namespace

Report verify_shuruppak() {
    Report r;
    r.title = "Šuruppak grain division";

    const Quantity barley = convert(Quantity(Rational(1), Unit::guru), Unit::sila);
    const Int sila = barley.magnitude().num();
    r.checks.push_back(make_check("1 guru in sila", "1152000", barley.magnitude().str()));
    r.checks.push_back(make_check("dividend in sexagesimal", "5,20,0,0", sex_of_int(sila)));

    const DivMod dm = divmod_int(sila, Int(7));
    r.checks.push_back(make_check("men served, decimal", "164571", dm.quotient.str()));
    r.checks.push_back(make_check("men served, sexagesimal", "45,42,51", sex_of_int(dm.quotient)));
    r.checks.push_back(make_check("sila left over", "3", dm.remainder.str()));
    r.checks.push_back(make_check("reconstruction 7 × men + 3", "5,20,0,0",
                                  sex_of_int(Int(7) * dm.quotient + dm.remainder)));

    r.checks.push_back(make_check("7 regular?", "no", is_regular(Int(7)) ? "yes" : "no"));
    const PeriodLength period = period_length(Int(7));
    r.checks.push_back(make_check("reciprocal period of 7", "3",
                                  period.kind == PeriodLength::Kind::periodic
                                      ? std::to_string(period.period)
                                      : "(not periodic)"));
    r.checks.push_back(make_check("igi 7", "0;(8,34,17)", format_sex(reciprocal(Int(7)))));
    return r;
}

Report verify_ms3956() {
    Report r;
    r.title = "MS 3956 factorizations";

    const struct {
        const char* text;
        const char* decimal;
        const char* factored;
        const char* seventh;
    } rows[] = {
        {"25,57,30", "93450", "2 × 3 × 5² × 7 × 89", "13350 r 0"},
        {"20,10,25", "72625", "5³ × 7 × 83", "10375 r 0"},
        {"3,4,5,4", "662704", "2⁴ × 7 × 61 × 97", "94672 r 0"},
        {"2,44,3,45", "590625", "3³ × 5⁵ × 7", "84375 r 0"},
    };

    std::vector<Int> values;
    for (const auto& row : rows) {
        const Int n = to_integer(parse_sex(row.text));
        values.push_back(n);
        r.checks.push_back(
            make_check(std::string(row.text) + " decimal", row.decimal, n.str()));
        r.checks.push_back(make_check(std::string(row.text) + " =", row.factored,
                                      format_factorization(factorize(n))));
        const DivMod dm = divmod_int(n, Int(7));
        r.checks.push_back(make_check(std::string(row.text) + " ÷ 7", row.seventh,
                                      dm.quotient.str() + " r " + dm.remainder.str()));
    }
    r.checks.push_back(make_check("gcd of the four numbers", "7", gcd_list(values).str()));
    return r;
}

Report verify_ybc4652() {
    Report r;
    r.title = "YBC 4652 no. 8 stone weight";

    const Rational one_mana_in_gin = convert(Quantity(Rational(1), Unit::mana), Unit::gin).magnitude();
    r.checks.push_back(make_check("1 ma-na in gín", "60", one_mana_in_gin.str()));

    const StoneProblem problem{{Int(7), Int(13)}, one_mana_in_gin};
    const StoneSolution sol = stone_solve(problem);

    r.checks.push_back(make_check("weight in gín", "455/6", sol.weight.str()));
    r.checks.push_back(
        make_check("weight in sexagesimal", "1,15;50", format_sex(to_sexagesimal(sol.weight))));
    r.checks.push_back(make_check("weight rendered", "1 ma-na 15 5/6 gín",
                                  render_mixed(Quantity(sol.weight, Unit::gin))));

    r.checks.push_back(make_check("trace 1, × 13", "13,0", trace_value(sol, 0)));
    r.checks.push_back(make_check("trace 2, ÷ 12", "1,5", trace_value(sol, 1)));
    r.checks.push_back(make_check("trace 3, × 7", "7,35", trace_value(sol, 2)));
    r.checks.push_back(make_check("trace 4, ÷ 6", "1,15;50", trace_value(sol, 3)));

    r.checks.push_back(
        make_check("forward check returns", "60", stone_check(sol.weight, problem).str()));
    return r;
}

}  // namespace sexag
