#pragma once

#include <limits>

namespace pnt {

// Working scalar for every bound computation. On x86-64 this is the 80-bit
// extended format with a 64-bit significand.
using Real = long double;

static_assert(std::numeric_limits<Real>::digits >= 60,
              "bound computations need at least 60 significand bits");

inline constexpr Real kRealEpsilon = std::numeric_limits<Real>::epsilon();
inline constexpr int kPrecisionBits = std::numeric_limits<Real>::digits;

}  // namespace pnt
