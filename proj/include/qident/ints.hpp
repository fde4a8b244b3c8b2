#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>

namespace qident {

// All series coefficients and enumeration counts are exact signed integers.
// Identities are checked with equality, never with tolerances, so overflow
// anywhere would silently wreck a check; cpp_int removes that failure mode.
using Int = boost::multiprecision::cpp_int;

// Number of factors in a Pochhammer product or of terms in a sum.
// Disengaged means "infinitely many" (the computation truncates on its own).
using Count = std::optional<long long>;
inline constexpr Count kInfinite = std::nullopt;

}  // namespace qident
