#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msf/caps.hpp"
#include "msf/error.hpp"
#include "msf/sumfree.hpp"
#include "oracle.hpp"

using namespace msf;

TEST_CASE("cap predicates in PG(2,2)") {
  CHECK(is_cap(ProjectivePointSet::make(2, {1, 2})));
  CHECK_FALSE(is_cap(ProjectivePointSet::make(2, {1, 2, 3})));
  // Complement of the line {1, 2, 3}.
  const auto oval = ProjectivePointSet::make(2, {4, 5, 6, 7});
  CHECK(is_cap(oval));
  CHECK(is_complete_cap(oval));
  CHECK_FALSE(is_complete_cap(ProjectivePointSet::make(2, {4, 5, 6})));
  CHECK(is_cap(ProjectivePointSet::make(2, {})));
  CHECK_THROWS_AS(ProjectivePointSet::make(2, {0}), InvalidArgument);
  CHECK_THROWS_AS(ProjectivePointSet::make(2, {8}), InvalidArgument);
}

TEST_CASE("complete caps equal maximal sum-free sets") {
  for (unsigned k = 1; k <= 4; ++k) {
    const auto caps = complete_caps(k);
    CHECK(count_complete_caps(k) == caps_via_sumfree(k));
    const GroupSpec G = GroupSpec::make(std::vector<std::uint32_t>(k + 1, 2));
    std::vector<std::uint64_t> masks;
    for (const ElementSet& A : maximal_sumfree_sets(G)) masks.push_back(A.mask());
    std::sort(masks.begin(), masks.end());
    CHECK(masks == caps);
    for (std::uint64_t c : caps) {
      ProjectivePointSet p{k, c};
      CHECK(is_complete_cap(p));
    }
  }
  for (unsigned k = 1; k <= 3; ++k) CHECK(count_complete_caps(k) == oracle::complete_caps_scan(k));
  CHECK(count_complete_caps(1) == 3);
}
