#pragma once

#include <cstdint>
#include <vector>

#include "sexag/bigint.hpp"
#include "sexag/numeral.hpp"

namespace sexag {

inline constexpr std::uint64_t kDefaultPeriodGuard = 1'000'000;

// n = 2^pow2 * 3^pow3 * 5^pow5 * cofactor with gcd(cofactor, 30) == 1.
struct SmoothSplit {
    unsigned pow2 = 0;
    unsigned pow3 = 0;
    unsigned pow5 = 0;
    Int cofactor = 1;

    Int recompose() const;

    friend bool operator==(const SmoothSplit&, const SmoothSplit&) = default;
};

// Requires n > 0.
SmoothSplit smooth_split(const Int& n);

// True iff n has no prime factor other than 2, 3 and 5, i.e. 1/n terminates
// in base 60.
bool is_regular(const Int& n);

// Exact reciprocal 1/n (n > 0); terminates iff n is regular.
SexNumber reciprocal(const Int& n);

struct PeriodLength {
    enum class Kind { finite, periodic, guard_exceeded };
    Kind kind = Kind::finite;
    std::uint64_t period = 0;  // 0 when finite or guard_exceeded

    friend bool operator==(const PeriodLength&, const PeriodLength&) = default;
};

// Repetend length of 1/n: zero for regular n, otherwise the multiplicative
// order of 60 modulo the 60-free cofactor of n. The order is found by
// repeated multiplication; guard bounds the number of steps so a huge
// cofactor cannot spin forever.
PeriodLength period_length(const Int& n, std::uint64_t guard = kDefaultPeriodGuard);

// Number of fractional digits before the repetend starts in 1/n:
// max(ceil(pow2 / 2), pow3, pow5) for the smooth part of n.
std::uint64_t prefix_length(const Int& n);

// All regular numbers in [1, bound], ascending.
std::vector<std::uint64_t> regular_numbers_up_to(std::uint64_t bound);

// One line of a reciprocal table: n alongside the digits of 1/n written in
// place value form (no radix point), the format of the ancient igi tables.
struct ReciprocalEntry {
    std::uint64_t n = 0;
    FloatingDigits igi;

    friend bool operator==(const ReciprocalEntry&, const ReciprocalEntry&) = default;
};

// Entries for every regular n in [2, bound]; bound must be >= 2.
std::vector<ReciprocalEntry> reciprocal_table(std::uint64_t bound);

}  // namespace sexag
