#include "sexag/json.hpp"

namespace sexag {

Json encode(const SexNumber& x) {
    return Json{{"sign", x.sign()},
                {"int_digits", x.int_digits()},
                {"frac_prefix", x.frac_prefix()},
                {"repetend", x.repetend()}};
}

Json encode(const FloatingDigits& f) {
    return Json{{"digits", f.digits}, {"exponent", f.exponent}};
}

Json encode(const Rational& r) {
    return Json{{"numerator", r.num().str()}, {"denominator", r.den().str()}};
}

Json encode(const SmoothSplit& s) {
    return Json{{"pow2", s.pow2}, {"pow3", s.pow3}, {"pow5", s.pow5},
                {"cofactor", s.cofactor.str()}};
}

Json encode(const PeriodLength& p) {
    const char* kind = nullptr;
    switch (p.kind) {
        case PeriodLength::Kind::finite: kind = "finite"; break;
        case PeriodLength::Kind::periodic: kind = "periodic"; break;
        case PeriodLength::Kind::guard_exceeded: kind = "guard_exceeded"; break;
    }
    return Json{{"kind", kind}, {"period", p.period}};
}

Json encode(const ReciprocalEntry& e) {
    return Json{{"n", e.n}, {"igi", encode(e.igi)}};
}

Json encode(const DivMod& d) {
    return Json{{"quotient", d.quotient.str()}, {"remainder", d.remainder.str()}};
}

Json encode(const Factorization& f) {
    Json factors = Json::array();
    for (const auto& [prime, exponent] : f.factors) {
        factors.push_back(Json{{"prime", prime.str()}, {"exponent", exponent}});
    }
    return Json{{"factors", std::move(factors)},
                {"cofactor", f.cofactor.str()},
                {"complete", f.complete()}};
}

Json encode(const Quantity& q) {
    return Json{{"magnitude", encode(q.magnitude())}, {"unit", std::string(unit_name(q.unit()))}};
}

Json encode(const TraceStep& t) {
    return Json{{"description", t.description},
                {"value", encode(t.value)},
                {"text", format_sex(t.value)}};
}

Json encode(const StoneSolution& s) {
    Json trace = Json::array();
    for (const TraceStep& t : s.trace) trace.push_back(encode(t));
    return Json{{"weight", encode(s.weight)}, {"trace", std::move(trace)}, {"note", s.note}};
}

Json encode(const Check& c) {
    return Json{{"label", c.label}, {"expected", c.expected}, {"actual", c.actual},
                {"pass", c.pass}};
}

Json encode(const Report& r) {
    Json checks = Json::array();
    for (const Check& c : r.checks) checks.push_back(encode(c));
    return Json{{"title", r.title}, {"checks", std::move(checks)}, {"pass", r.pass()}};
}

}  // namespace sexag
