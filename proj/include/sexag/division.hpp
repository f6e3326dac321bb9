#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sexag/bigint.hpp"
#include "sexag/numeral.hpp"

namespace sexag {

inline constexpr std::uint64_t kDefaultFactorLimit = 1'000'000;

struct DivMod {
    Int quotient;
    Int remainder;  // 0 <= remainder < divisor

    friend bool operator==(const DivMod&, const DivMod&) = default;
};

// Euclidean division of n >= 0 by d >= 1.
DivMod divmod_int(const Int& n, const Int& d);

// x / d computed the scribal way: multiply x by the terminating reciprocal
// of d. Requires d > 0 regular and x terminating; an irregular d is rejected
// with a diagnostic naming its coprime-to-60 cofactor.
SexNumber divide_by_regular(const SexNumber& x, const Int& d);

// Euclidean gcd folded over a non-empty list of non-negative values, at
// least one of them nonzero.
Int gcd_list(const std::vector<Int>& values);

// Result of trial division up to a limit. factors holds (prime, multiplicity)
// with primes strictly increasing; every listed prime really is prime. When
// trial division settles everything the cofactor is 1 (a remainder proven
// prime joins the list); otherwise the unfactored remainder is left in
// cofactor.
struct Factorization {
    std::vector<std::pair<Int, std::uint64_t>> factors;
    Int cofactor = 1;

    bool complete() const noexcept { return cofactor == 1; }
    Int recompose() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Trial division of n >= 1 by 2, 3 and then 6k +/- 1 candidates up to limit.
// The remainder counts as proven prime once the first untried candidate
// squared exceeds it.
Factorization factorize(const Int& n, std::uint64_t limit = kDefaultFactorLimit);

enum class FactorStyle { superscript, ascii };

// superscript: "2⁴ × 7 × 61 × 97"; ascii: "2^4 x 7 x 61 x 97". An
// unfactored remainder renders as a final "C (unfactored)" term.
std::string format_factorization(const Factorization& f,
                                 FactorStyle style = FactorStyle::superscript);

}  // namespace sexag
