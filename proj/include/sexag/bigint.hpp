#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sexag {

// Arbitrary-size signed integer used for all exact computation.
using Int = boost::multiprecision::cpp_int;

}  // namespace sexag
