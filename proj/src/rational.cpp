#include "sexag/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <utility>
#include <vector>

namespace sexag {

Rational::Rational(Int numerator, Int denominator) {
    if (denominator == 0) throw std::domain_error("division by zero");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    Int g = boost::multiprecision::gcd(numerator, denominator);
    if (g > 1) {
        numerator /= g;
        denominator /= g;
    }
    num_ = std::move(numerator);
    den_ = std::move(denominator);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Int lhs = a.num_ * b.den_;
    const Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

Rational to_rational(const SexNumber& x) {
    const Int int_part = digits_value(x.int_digits());
    const Int prefix = digits_value(x.frac_prefix());
    const Int pow_p = boost::multiprecision::pow(Int(60), static_cast<unsigned>(x.frac_prefix().size()));

    Rational value;
    if (x.terminating()) {
        value = Rational(int_part * pow_p + prefix, pow_p);
    } else {
        const Int rep = digits_value(x.repetend());
        const Int cycle =
            boost::multiprecision::pow(Int(60), static_cast<unsigned>(x.repetend().size())) - 1;
        value = Rational(int_part * pow_p * cycle + prefix * cycle + rep, pow_p * cycle);
    }
    return x.sign() < 0 ? -value : value;
}

namespace {

Digits integer_digits(Int v) {
    Digits digits;
    if (v == 0) digits.push_back(0);
    while (v != 0) {
        digits.push_back(static_cast<int>(v % 60));
        v /= 60;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

// Emits fraction digits of rem/den (0 < rem < den) until the remainder
// either vanishes or repeats; the first repeated remainder marks both the
// earliest cycle start and the minimal period, so the split is canonical
// as-is. Dense array over remainders when den is small, ordered map above.
constexpr std::uint64_t kDenseSeenLimit = std::uint64_t(1) << 20;

void expand_fraction_small(std::uint64_t rem, std::uint64_t den, Digits& frac_prefix,
                           Digits& repetend) {
    constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> seen(den, kUnseen);
    Digits digits;
    while (rem != 0) {
        if (seen[rem] != kUnseen) {
            frac_prefix.assign(digits.begin(), digits.begin() + seen[rem]);
            repetend.assign(digits.begin() + seen[rem], digits.end());
            return;
        }
        seen[rem] = static_cast<std::uint32_t>(digits.size());
        rem *= 60;
        digits.push_back(static_cast<int>(rem / den));
        rem %= den;
    }
    frac_prefix = std::move(digits);
}

void expand_fraction_big(Int rem, const Int& den, Digits& frac_prefix, Digits& repetend) {
    std::map<Int, std::size_t> seen;
    Digits digits;
    while (rem != 0) {
        auto [it, fresh] = seen.emplace(rem, digits.size());
        if (!fresh) {
            frac_prefix.assign(digits.begin(), digits.begin() + static_cast<long>(it->second));
            repetend.assign(digits.begin() + static_cast<long>(it->second), digits.end());
            return;
        }
        rem *= 60;
        digits.push_back(static_cast<int>(rem / den));
        rem %= den;
    }
    frac_prefix = std::move(digits);
}

}  // namespace

SexNumber to_sexagesimal(const Rational& r) {
    int sign = 1;
    Int num = r.num();
    if (num < 0) {
        sign = -1;
        num = -num;
    }
    const Int& den = r.den();
    Digits int_digits = integer_digits(num / den);
    Digits frac_prefix;
    Digits repetend;
    const Int rem = num % den;
    if (rem != 0) {
        if (den <= kDenseSeenLimit) {
            expand_fraction_small(static_cast<std::uint64_t>(rem), static_cast<std::uint64_t>(den),
                                  frac_prefix, repetend);
        } else {
            expand_fraction_big(rem, den, frac_prefix, repetend);
        }
    }
    return SexNumber::normalized(sign, std::move(int_digits), std::move(frac_prefix),
                                 std::move(repetend));
}

}  // namespace sexag
