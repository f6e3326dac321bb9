#include "sexag/regularity.hpp"

#include <algorithm>
#include <stdexcept>

#include "sexag/rational.hpp"

namespace sexag {

Int SmoothSplit::recompose() const {
    return boost::multiprecision::pow(Int(2), pow2) * boost::multiprecision::pow(Int(3), pow3) *
           boost::multiprecision::pow(Int(5), pow5) * cofactor;
}

SmoothSplit smooth_split(const Int& n) {
    if (n < 1) throw std::domain_error("smooth_split requires a positive integer");
    SmoothSplit s;
    Int v = n;
    while (v % 2 == 0) {
        v /= 2;
        ++s.pow2;
    }
    while (v % 3 == 0) {
        v /= 3;
        ++s.pow3;
    }
    while (v % 5 == 0) {
        v /= 5;
        ++s.pow5;
    }
    s.cofactor = std::move(v);
    return s;
}

bool is_regular(const Int& n) { return smooth_split(n).cofactor == 1; }

SexNumber reciprocal(const Int& n) {
    if (n < 1) throw std::domain_error("reciprocal requires a positive integer");
    return to_sexagesimal(Rational(1, n));
}

PeriodLength period_length(const Int& n, std::uint64_t guard) {
    if (guard == 0) throw std::invalid_argument("guard must be positive");
    const Int m = smooth_split(n).cofactor;
    if (m == 1) return PeriodLength{PeriodLength::Kind::finite, 0};
    Int r = 60 % m;
    for (std::uint64_t t = 1; t <= guard; ++t) {
        if (r == 1) return PeriodLength{PeriodLength::Kind::periodic, t};
        r = (r * 60) % m;
    }
    return PeriodLength{PeriodLength::Kind::guard_exceeded, 0};
}

std::uint64_t prefix_length(const Int& n) {
    const SmoothSplit s = smooth_split(n);
    // One factor of 60 clears two 2s but only one 3 or 5.
    return std::max<std::uint64_t>({(s.pow2 + 1) / 2, s.pow3, s.pow5});
}

std::vector<std::uint64_t> regular_numbers_up_to(std::uint64_t bound) {
    if (bound < 1) throw std::domain_error("bound must be at least 1");
    std::vector<std::uint64_t> out;
    for (std::uint64_t p2 = 1;;) {
        for (std::uint64_t p23 = p2;;) {
            for (std::uint64_t p235 = p23;;) {
                out.push_back(p235);
                if (p235 > bound / 5) break;
                p235 *= 5;
            }
            if (p23 > bound / 3) break;
            p23 *= 3;
        }
        if (p2 > bound / 2) break;
        p2 *= 2;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ReciprocalEntry> reciprocal_table(std::uint64_t bound) {
    if (bound < 2) throw std::domain_error("table bound must be at least 2");
    std::vector<ReciprocalEntry> table;
    for (std::uint64_t n : regular_numbers_up_to(bound)) {
        if (n < 2) continue;
        table.push_back(ReciprocalEntry{n, to_floating(reciprocal(Int(n)))});
    }
    return table;
}

}  // namespace sexag
