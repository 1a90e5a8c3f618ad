#include "msf/caps.hpp"

#include "msf/error.hpp"
#include "msf/group.hpp"
#include "msf/sumfree.hpp"

#include <algorithm>
#include <bit>

namespace msf {

namespace {

inline constexpr unsigned kCapCountLimit = 4;

std::uint64_t space_mask(unsigned k) {
  const std::uint32_t top = (2U << k) - 1;
  return (top == 63 ? ~0ULL : (1ULL << (top + 1)) - 1) & ~1ULL;
}

/// Points x ^ y over distinct x, y in the set.
std::uint64_t sums(std::uint64_t points) {
  std::uint64_t out = 0;
  for (std::uint64_t a = points; a; a &= a - 1) {
    const int x = std::countr_zero(a);
    for (std::uint64_t b = a & (a - 1); b; b &= b - 1) out |= 1ULL << (x ^ std::countr_zero(b));
  }
  return out;
}

void search(std::uint64_t cap, std::uint64_t blocked, int last, std::uint64_t space,
            std::vector<std::uint64_t>& out) {
  const std::uint64_t open = space & ~cap & ~blocked;
  if (open == 0) out.push_back(cap);
  std::uint64_t next = last >= 63 ? 0 : open & ~((2ULL << last) - 1);
  for (; next; next &= next - 1) {
    const int p = std::countr_zero(next);
    std::uint64_t added = 0;
    for (std::uint64_t a = cap; a; a &= a - 1) added |= 1ULL << (p ^ std::countr_zero(a));
    search(cap | (1ULL << p), blocked | added, p, space, out);
  }
}

}  // namespace

ProjectivePointSet ProjectivePointSet::make(unsigned k, const std::vector<std::uint32_t>& points) {
  if (k < 1 || k > kCapDimensionLimit) {
    throw InvalidArgument("projective dimension must be in [1, " + std::to_string(kCapDimensionLimit) + "]");
  }
  ProjectivePointSet p{k, 0};
  for (std::uint32_t x : points) {
    if (x == 0) throw InvalidArgument("the zero vector is not a projective point");
    if (x > p.point_count()) throw InvalidArgument("point " + std::to_string(x) + " is outside PG(" + std::to_string(k) + ",2)");
    p.points |= 1ULL << x;
  }
  return p;
}

bool is_cap(const ProjectivePointSet& p) { return (sums(p.points) & p.points) == 0; }

bool is_complete_cap(const ProjectivePointSet& p) {
  if (!is_cap(p)) return false;
  return (space_mask(p.k) & ~p.points & ~sums(p.points)) == 0;
}

std::vector<std::uint64_t> complete_caps(unsigned k) {
  if (k < 1 || k > kCapCountLimit) {
    throw InvalidArgument("complete cap enumeration needs 1 <= k <= " + std::to_string(kCapCountLimit));
  }
  std::vector<std::uint64_t> out;
  search(0, 0, 0, space_mask(k), out);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt count_complete_caps(unsigned k) { return complete_caps(k).size(); }

BigInt caps_via_sumfree(unsigned k) {
  if (k < 1 || k > kCapCountLimit) {
    throw InvalidArgument("caps_via_sumfree needs 1 <= k <= " + std::to_string(kCapCountLimit));
  }
  return count_fmax(GroupSpec::make(std::vector<std::uint32_t>(k + 1, 2))).value;
}

}  // namespace msf
