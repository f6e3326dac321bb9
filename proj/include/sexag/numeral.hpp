#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sexag/bigint.hpp"

namespace sexag {

using Digits = std::vector<int>;

// Thrown by parse_sex; position is the byte offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Exact sexagesimal expansion in canonical form.
//
// Canonical means: every digit is in 0..59, the integer part has no leading
// zero (except the single digit 0), a terminating expansion has no trailing
// zero among its fractional digits, and a repetend is the minimal period
// placed at the earliest possible fractional position (no suffix of the
// prefix can be absorbed into a rotation of the repetend). An all-zero
// repetend does not exist; zero is sign +1, digits [0], nothing else.
//
// The checked constructor throws std::invalid_argument on a non-canonical
// digit triple; normalized() canonicalizes instead.
class SexNumber {
public:
    SexNumber() = default;  // zero
    SexNumber(int sign, Digits int_digits, Digits frac_prefix, Digits repetend);

    static SexNumber normalized(int sign, Digits int_digits, Digits frac_prefix,
                                Digits repetend);

    int sign() const noexcept { return sign_; }
    const Digits& int_digits() const noexcept { return int_digits_; }
    const Digits& frac_prefix() const noexcept { return frac_prefix_; }
    const Digits& repetend() const noexcept { return repetend_; }

    bool is_zero() const noexcept;
    bool is_integer() const noexcept { return frac_prefix_.empty() && repetend_.empty(); }
    bool terminating() const noexcept { return repetend_.empty(); }

    friend bool operator==(const SexNumber&, const SexNumber&) = default;

private:
    struct Unchecked {};
    SexNumber(Unchecked, int sign, Digits i, Digits p, Digits r);

    int sign_ = 1;
    Digits int_digits_{0};
    Digits frac_prefix_;
    Digits repetend_;
};

struct FormatOptions {
    enum class RepetendStyle { parentheses, unrolled };
    RepetendStyle style = RepetendStyle::parentheses;
    int repetitions = 2;  // repetend copies printed by the unrolled style
};

// Accepts: optional "-", comma-separated base-60 digit tokens, optionally a
// ";" followed by fraction digit tokens and/or a trailing "(digits)"
// repetend. Digit tokens are decimal numerals 0..59; a single space is
// allowed after each comma. The result is canonical.
SexNumber parse_sex(std::string_view text);

// Parentheses style is the exact inverse of parse_sex; the unrolled style
// prints the repetend opts.repetitions times followed by ",..." and exists
// for display only.
std::string format_sex(const SexNumber& x, const FormatOptions& opts = {});

// Radix-point-free place value form: digit string with nonzero first and
// last digit (or exactly [0]), plus the power of 60 carried by the last
// digit. Models place value notation written without a radix point, so it
// has no sign and no fractional tail.
struct FloatingDigits {
    Digits digits{0};
    long long exponent = 0;

    friend bool operator==(const FloatingDigits&, const FloatingDigits&) = default;
};

// Terminating, non-negative values only; zero maps to ([0], 0).
FloatingDigits to_floating(const SexNumber& x);
SexNumber from_floating(const FloatingDigits& f);

SexNumber from_integer(const Int& n);

// Inverse of from_integer; rejects values with fractional digits.
Int to_integer(const SexNumber& x);

// Digits folded as a base-60 integer, most significant first.
Int digits_value(const Digits& digits);

}  // namespace sexag
