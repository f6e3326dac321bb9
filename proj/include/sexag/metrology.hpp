#pragma once

#include <string>
#include <string_view>

#include "sexag/rational.hpp"

namespace sexag {

// The four Sumerian units needed here: capacity (sila, guru) and weight
// (gin, mana). 1 guru = 1,152,000 sila; 1 ma-na = 60 gín.
enum class Unit { sila, guru, gin, mana };

enum class Dimension { capacity, weight };

Dimension dimension_of(Unit u) noexcept;

// ASCII identifier as accepted on the command line: "sila", "guru", "gin",
// "mana". parse_unit throws std::invalid_argument for anything else.
std::string_view unit_name(Unit u) noexcept;
Unit parse_unit(std::string_view name);

// Non-negative amount of a single unit.
class Quantity {
public:
    Quantity(Rational magnitude, Unit unit);

    const Rational& magnitude() const noexcept { return magnitude_; }
    Unit unit() const noexcept { return unit_; }

    friend bool operator==(const Quantity&, const Quantity&) = default;

private:
    Rational magnitude_;
    Unit unit_ = Unit::sila;
};

// Exact rational rescaling within one dimension; converting capacity to
// weight (or back) throws std::domain_error.
Quantity convert(const Quantity& q, Unit target);

// Weight quantities only: whole ma-na, then whole gín, then any leftover
// gín as a reduced fraction. 455/6 gín -> "1 ma-na 15 5/6 gín";
// 60 gín -> "1 ma-na"; 1/2 gín -> "1/2 gín"; zero -> "0 gín".
std::string render_mixed(const Quantity& q);

}  // namespace sexag
