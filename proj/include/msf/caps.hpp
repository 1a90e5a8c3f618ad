#pragma once

// Caps in PG(k, 2). A point is a non-zero vector of F_2^{k+1}, encoded as
// the integer whose bits are its coordinates; this is also its element index
// in Z_2^{k+1}, so complete caps and maximal sum-free sets are literally the
// same bitmasks.

#include "msf/numeric.hpp"

#include <cstdint>
#include <vector>

namespace msf {

/// Largest projective dimension handled (points fit a 64-bit mask).
inline constexpr unsigned kCapDimensionLimit = 5;

struct ProjectivePointSet {
  unsigned k = 0;
  std::uint64_t points = 0;  ///< bit p set when point p is in the set; bit 0 never set

  /// Throws InvalidArgument on k above the limit, the zero vector, or
  /// points outside the space.
  static ProjectivePointSet make(unsigned k, const std::vector<std::uint32_t>& points);

  std::uint32_t point_count() const { return (2U << k) - 1; }
};

/// No three distinct points x, y, z with x + y + z = 0.
bool is_cap(const ProjectivePointSet& p);
/// A cap to which no further point can be added.
bool is_complete_cap(const ProjectivePointSet& p);

/// All complete caps of PG(k, 2) by a depth-first search over caps, in
/// ascending mask order. k + 1 <= 5.
std::vector<std::uint64_t> complete_caps(unsigned k);
BigInt count_complete_caps(unsigned k);

/// f_max(Z_2^{k+1}) from the sum-free enumeration.
BigInt caps_via_sumfree(unsigned k);

}  // namespace msf
