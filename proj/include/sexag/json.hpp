#pragma once

#include <json.hpp>  // vendored single-header nlohmann/json

#include "sexag/division.hpp"
#include "sexag/metrology.hpp"
#include "sexag/numeral.hpp"
#include "sexag/problems.hpp"
#include "sexag/rational.hpp"
#include "sexag/regularity.hpp"

namespace sexag {

// Key order is part of the output contract (byte-identical runs), hence
// ordered_json.
using Json = nlohmann::ordered_json;

Json encode(const SexNumber& x);
Json encode(const FloatingDigits& f);

// {"numerator": "...", "denominator": "..."} with decimal strings, since the
// values can exceed any fixed-width integer.
Json encode(const Rational& r);

Json encode(const SmoothSplit& s);
Json encode(const PeriodLength& p);
Json encode(const ReciprocalEntry& e);
Json encode(const DivMod& d);
Json encode(const Factorization& f);
Json encode(const Quantity& q);
Json encode(const TraceStep& t);
Json encode(const StoneSolution& s);
Json encode(const Check& c);
Json encode(const Report& r);

}  // namespace sexag
