#include "sexag/metrology.hpp"

#include <stdexcept>
#include <utility>

namespace sexag {

namespace {

struct UnitInfo {
    std::string_view name;
    Dimension dimension;
    long long in_base;  // one unit, measured in the dimension's base unit
};

// Indexed by Unit; base units are the sila (capacity) and the gín (weight).
constexpr UnitInfo kUnits[] = {
    {"sila", Dimension::capacity, 1},
    {"guru", Dimension::capacity, 1152000},
    {"gin", Dimension::weight, 1},
    {"mana", Dimension::weight, 60},
};

const UnitInfo& info(Unit u) { return kUnits[static_cast<int>(u)]; }

}  // namespace

Dimension dimension_of(Unit u) noexcept { return info(u).dimension; }

std::string_view unit_name(Unit u) noexcept { return info(u).name; }

Unit parse_unit(std::string_view name) {
    for (std::size_t i = 0; i < std::size(kUnits); ++i) {
        if (kUnits[i].name == name) return static_cast<Unit>(i);
    }
    throw std::invalid_argument("unknown unit \"" + std::string(name) +
                                "\" (expected sila, guru, gin or mana)");
}

Quantity::Quantity(Rational magnitude, Unit unit)
    : magnitude_(std::move(magnitude)), unit_(unit) {
    if (magnitude_ < Rational(0)) throw std::domain_error("quantity magnitude must be >= 0");
}

Quantity convert(const Quantity& q, Unit target) {
    if (dimension_of(q.unit()) != dimension_of(target)) {
        throw std::domain_error("cannot convert " + std::string(unit_name(q.unit())) + " to " +
                                std::string(unit_name(target)) + ": different dimensions");
    }
    Rational in_base = q.magnitude() * Rational(info(q.unit()).in_base);
    return Quantity(in_base / Rational(info(target).in_base), target);
}

std::string render_mixed(const Quantity& q) {
    if (dimension_of(q.unit()) != Dimension::weight) {
        throw std::domain_error("mixed rendering is defined for weight quantities");
    }
    const Rational gin = convert(q, Unit::gin).magnitude();
    const Int whole = gin.num() / gin.den();
    const Rational frac = gin - Rational(whole);
    const Int mana = whole / 60;
    const Int gin_whole = whole % 60;

    std::string out;
    if (mana > 0) out += mana.str() + " ma-na";
    std::string gin_part;
    if (gin_whole > 0) gin_part = gin_whole.str();
    if (!frac.is_zero()) gin_part += (gin_part.empty() ? "" : " ") + frac.str();
    if (!gin_part.empty()) {
        if (!out.empty()) out += ' ';
        out += gin_part + " gín";
    }
    if (out.empty()) out = "0 gín";
    return out;
}

}  // namespace sexag
