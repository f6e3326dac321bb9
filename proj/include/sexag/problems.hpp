#pragma once

#include <string>
#include <vector>

#include "sexag/bigint.hpp"
#include "sexag/numeral.hpp"
#include "sexag/rational.hpp"

namespace sexag {

// "A stone of unknown weight: for each k in steps, one k-th of the current
// weight was taken away; what remained weighed `remainder` gín."
struct StoneProblem {
    std::vector<Int> steps;  // each k >= 2
    Rational remainder;      // gín, > 0
};

struct TraceStep {
    std::string description;
    SexNumber value;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct StoneSolution {
    Rational weight;  // gín
    std::vector<TraceStep> trace;
    // The tablets state such problems without showing work; the trace is a
    // reconstruction that clears the last subtraction first.
    std::string note;
};

// Undoes the steps back-to-front: multiply by k, then divide by k - 1
// (via the terminating reciprocal when k - 1 is regular and the running
// value terminates, else by exact rational division). Throws
// std::invalid_argument when some k < 2 or the remainder is not positive.
StoneSolution stone_solve(const StoneProblem& p);

// Applies the steps forward (w <- w - w/k) and returns what is left;
// exact inverse of stone_solve.
Rational stone_check(const Rational& weight, const StoneProblem& p);

// One exact assertion of a worked example.
struct Check {
    std::string label;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct Report {
    std::string title;
    std::vector<Check> checks;

    bool pass() const noexcept;
};

// Text form: one indented line per check plus a verdict line.
std::string render_text(const Report& report);

// Grain division from Šuruppak: 1 guru of barley shared at 7 sila a man
// leaves 164571 men (45,42,51) and 3 sila over, and 7 is the irregular
// divisor with reciprocal period 3.
Report verify_shuruppak();

// MS 3956: the four numbers 25,57,30 / 20,10,25 / 3,4,5,4 / 2,44,3,45 have
// gcd 7, each factorization contains 7 exactly once, and each divides by 7
// without remainder.
Report verify_ms3956();

// YBC 4652 no. 8: steps {7, 13} with 1 ma-na left give a stone of
// 1,15;50 gín = "1 ma-na 15 5/6 gín", through intermediates 13,0 / 1,5 / 7,35.
Report verify_ybc4652();

}  // namespace sexag
