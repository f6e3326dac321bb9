#include "sexag/division.hpp"

#include <limits>
#include <stdexcept>

#include "sexag/rational.hpp"
#include "sexag/regularity.hpp"

namespace sexag {

DivMod divmod_int(const Int& n, const Int& d) {
    if (d < 1) throw std::domain_error("divisor must be positive");
    if (n < 0) throw std::domain_error("dividend must be non-negative");
    return DivMod{n / d, n % d};
}

SexNumber divide_by_regular(const SexNumber& x, const Int& d) {
    const Int m = smooth_split(d).cofactor;  // also rejects d < 1
    if (m != 1) {
        throw std::domain_error("divisor " + d.str() + " is not regular (blocking factor " +
                                m.str() + "); its reciprocal does not terminate");
    }
    if (!x.terminating()) throw std::domain_error("dividend must have a terminating expansion");
    return to_sexagesimal(to_rational(x) * to_rational(reciprocal(d)));
}

Int gcd_list(const std::vector<Int>& values) {
    if (values.empty()) throw std::invalid_argument("gcd of an empty list");
    Int g = 0;
    for (const Int& v : values) {
        if (v < 0) throw std::domain_error("gcd requires non-negative values");
        g = boost::multiprecision::gcd(g, v);
    }
    if (g == 0) throw std::domain_error("gcd of an all-zero list");
    return g;
}

Int Factorization::recompose() const {
    Int v = cofactor;
    for (const auto& [prime, exponent] : factors) {
        for (std::uint64_t i = 0; i < exponent; ++i) v *= prime;
    }
    return v;
}

namespace {

// Shared between the native fast path (anything that fits in 64 bits) and
// the arbitrary-size fallback. "v / frontier >= frontier" is the
// overflow-proof spelling of frontier^2 <= v.
template <typename T>
Factorization factorize_impl(T v, std::uint64_t limit) {
    Factorization out;
    auto strip = [&](std::uint64_t p) {
        std::uint64_t exponent = 0;
        while (v % p == 0) {
            v /= p;
            ++exponent;
        }
        if (exponent > 0) out.factors.emplace_back(Int(p), exponent);
    };

    std::uint64_t frontier = 2;  // smallest candidate not yet tried
    if (limit >= 2) {
        strip(2);
        frontier = 3;
    }
    if (limit >= 3) {
        strip(3);
        frontier = 5;
    }
    std::uint64_t gap = 2;  // candidates 6k +/- 1: steps alternate +2, +4
    while (frontier <= limit && v / frontier >= T(frontier)) {
        strip(frontier);
        frontier += gap;
        gap = 6 - gap;
    }
    if (v > 1) {
        // Everything below the frontier has been divided out, so a
        // remainder smaller than frontier^2 cannot be composite.
        if (v / frontier < T(frontier)) {
            out.factors.emplace_back(Int(v), 1);
        } else {
            out.cofactor = Int(v);
        }
    }
    return out;
}

}  // namespace

Factorization factorize(const Int& n, std::uint64_t limit) {
    if (n < 1) throw std::domain_error("factorize requires a positive integer");
    if (n <= Int(std::numeric_limits<std::uint64_t>::max())) {
        return factorize_impl<std::uint64_t>(n.convert_to<std::uint64_t>(), limit);
    }
    return factorize_impl<Int>(n, limit);
}

namespace {

std::string superscript(std::uint64_t e) {
    static constexpr const char* kSup[10] = {"⁰", "¹", "²", "³", "⁴",
                                             "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string digits = std::to_string(e);
    std::string out;
    for (char c : digits) out += kSup[c - '0'];
    return out;
}

}  // namespace

std::string format_factorization(const Factorization& f, FactorStyle style) {
    if (f.factors.empty() && f.cofactor == 1) return "1";
    const char* times = style == FactorStyle::superscript ? " × " : " x ";
    std::string out;
    for (const auto& [prime, exponent] : f.factors) {
        if (!out.empty()) out += times;
        out += prime.str();
        if (exponent > 1) {
            out += style == FactorStyle::superscript ? superscript(exponent)
                                                     : "^" + std::to_string(exponent);
        }
    }
    if (f.cofactor != 1) {
        if (!out.empty()) out += times;
        out += f.cofactor.str() + " (unfactored)";
    }
    return out;
}

}  // namespace sexag
