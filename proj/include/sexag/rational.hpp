#pragma once

#include <compare>
#include <string>

#include "sexag/bigint.hpp"
#include "sexag/numeral.hpp"

namespace sexag {

// Exact rational number, always kept canonical: gcd(num, den) == 1, den > 0,
// and zero is 0/1. Division by a zero Rational throws std::domain_error.
class Rational {
public:
    Rational() = default;  // zero
    Rational(Int numerator, Int denominator);
    Rational(const Int& n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long long n) : num_(n) {}   // NOLINT(google-explicit-constructor)

    const Int& num() const noexcept { return num_; }
    const Int& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }

    Rational operator-() const;
    friend Rational operator+(const Rational&, const Rational&);
    friend Rational operator-(const Rational&, const Rational&);
    friend Rational operator*(const Rational&, const Rational&);
    friend Rational operator/(const Rational&, const Rational&);

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational&, const Rational&);

    // "164571", "-455/6": integers drop the denominator.
    std::string str() const;

private:
    Int num_ = 0;
    Int den_ = 1;
};

// Exact value of an expansion: sum of the prefix plus repetend/(60^p (60^l - 1)).
Rational to_rational(const SexNumber& x);

// Exact expansion of a rational via base-60 long division; detects the cycle
// by the first repeated remainder, which lands directly on the canonical
// (minimal, earliest) repetend.
SexNumber to_sexagesimal(const Rational& r);

}  // namespace sexag
