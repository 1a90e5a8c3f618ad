#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msf/constructions.hpp"
#include "msf/error.hpp"
#include "oracle.hpp"

#include <bit>

using namespace msf;

namespace {

/// Maximal sum-free sets of Z_2^k with some s such that A \ {s} lies in a
/// coset x + W of a hyperplane W containing s; straight from the masks.
std::uint64_t z2_type3_oracle(std::uint32_t k) {
  const oracle::Group g(std::vector<std::uint32_t>(k, 2));
  const std::uint32_t n = g.order();
  std::uint64_t count = 0;
  for (std::uint64_t A : oracle::maximal_sumfree_scan(g)) {
    bool found = false;
    for (std::uint32_t s = 1; s < n && !found; ++s) {
      if (!(A >> s & 1)) continue;
      for (std::uint32_t phi = 1; phi < n && !found; ++phi) {
        if (std::popcount(phi & s) % 2 != 0) continue;
        bool inside = true;
        for (std::uint32_t a = 0; a < n; ++a) {
          if (a != s && (A >> a & 1) && std::popcount(phi & a) % 2 == 0) inside = false;
        }
        found = inside;
      }
    }
    if (found) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("z2 pairs: count and per-pair link graphs") {
  for (std::uint32_t k = 2; k <= 5; ++k) {
    const std::uint64_t n = 1ULL << k;
    const auto pairs = z2_type3_pairs(k);
    CHECK(pairs.size() == (n - 1) * (n - 2) / 2);
    const GroupSpec G = GroupSpec::make(std::vector<std::uint32_t>(k, 2));
    for (const CosetPair& p : pairs) {
      ElementSet S(G.order());
      S.insert(p.s);
      CHECK(mis(link_graph(G, S, p.B)) == pow(BigInt(2), n / 4));
    }
  }
  CHECK(z2_type3_pairs(3).size() == 21);
  CHECK_THROWS_AS(z2_type3_pairs(6), InvalidArgument);
}

TEST_CASE("z2 generated count agrees with a census filter") {
  for (std::uint32_t k = 2; k <= 4; ++k) CHECK(z2_generated_count(k) == z2_type3_oracle(k));
  const GroupSpec G = GroupSpec::make({2, 2, 2});
  CHECK(z2_generated_count(3) <= maximal_sumfree_sets(G).size());
}

TEST_CASE("z3 pairs: counts and shapes") {
  const GroupSpec G = GroupSpec::make({3, 3});
  const auto pairs = z3_type3_pairs(2);
  // 4 hyperplanes, 2 cosets, 2 choices in H and 3 in 2g+H.
  CHECK(pairs.size() == 4 * 2 * (2 + 3));
  for (const CosetPair& p : pairs) {
    const ConstructionReport r = z3_pair_report(G, p);
    CHECK(r.match);
    CHECK(r.mis_exact == (p.s_in_subgroup ? 3 : 2));
  }
  CHECK(z3_type3_pairs(2, true).size() == 16);
  const GroupSpec G3 = GroupSpec::make({3, 3, 3});
  for (const CosetPair& p : z3_type3_pairs(3)) CHECK(z3_pair_report(G3, p).match);
  CHECK(z3_generated_count(2) <= maximal_sumfree_sets(G).size());
  // {1} and {2}, each generated through a looped vertex.
  CHECK(z3_generated_count(1) == 2);
}

TEST_CASE("overcounting stays within n/4 and n/9") {
  for (std::uint32_t k = 2; k <= 4; ++k) {
    const OvercountResult r = overcount_z2(k);
    CHECK(r.holds);
    CHECK(r.pair_pairs == r.pairs * (r.pairs - 1) / 2);
  }
  const OvercountResult z3 = overcount_z3(2);
  CHECK(z3.bound == 1);
  CHECK(z3.holds);
}

TEST_CASE("cyclic construction closed forms") {
  const CyclicConstruction m9 = cyclic_construction(9);
  CHECK(m9.case_label == "i=0, k odd");
  CHECK(m9.mis_gamma == 1);
  CHECK(m9.mis_prime == 2);
  CHECK(m9.mis_rtimes == 6);
  CHECK(m9.match);

  const CyclicConstruction m18 = cyclic_construction(18);
  CHECK(m18.case_label == "i=0, k even");
  CHECK(m18.mis_gamma == 2);
  CHECK(m18.match);

  const CyclicConstruction m38 = cyclic_construction(38);
  CHECK(m38.case_label == "i-1 odd, k-i+1 odd");
  REQUIRE(m38.closed_form);
  CHECK(m38.match);

  for (std::uint32_t m : {19u, 27u, 28u, 36u, 45u, 54u}) {
    const CyclicConstruction c = cyclic_construction(m);
    CHECK_MESSAGE(c.match, "m=" << m);
    CHECK(c.report.generates.value_or(false));
  }
  CHECK(!cyclic_construction(19).closed_form);
  CHECK_THROWS_AS(cyclic_construction(8), InvalidArgument);
}

TEST_CASE("product lower bound and its lifted witness") {
  const auto base = product_lower_bound(9, std::nullopt);
  REQUIRE(base.witness);
  CHECK(base.witness->mis_exact == 1);
  CHECK(base.witness->match);

  const auto z2 = product_lower_bound(9, GroupSpec::make({2}));
  REQUIRE(z2.witness);
  CHECK(z2.witness->mis_exact == 2);
  CHECK(z2.product_formula == BigInt(2));
  CHECK(z2.witness->match);

  const auto z3 = product_lower_bound(18, GroupSpec::make({3}));
  REQUIRE(z3.witness);
  const CyclicConstruction c = cyclic_construction(18);
  CHECK(z3.witness->mis_exact == c.mis_gamma * c.mis_rtimes);
  CHECK(z3.witness->match);

  // The bound at m = 9, n = 9 is (4/9) 6^{1/18} < 1.
  CHECK(base.bound.upper < 1);
}

TEST_CASE("certified margin for the lifted product bound") {
  CHECK(verify_prop34(3084, 3084).holds);
  CHECK(verify_prop34(3084, 30840).holds);
  CHECK(verify_prop34(10000, 10000).holds);
  CHECK_FALSE(verify_prop34(9, 9).holds);
  CHECK_FALSE(verify_prop34(3083, 3083).holds);
  CHECK(verify_prop34(3084, 3084).margin.lower > 0);
  CHECK_THROWS_AS(verify_prop34(9, 10), InvalidArgument);
}

TEST_CASE("type III coset constructions") {
  const ConstructionReport z13 = type3_construction(13, std::nullopt);
  CHECK(z13.mis_exact == 2);
  CHECK(z13.match);
  CHECK(z13.generates == true);
  const ConstructionReport z19 = type3_construction(19, std::nullopt);
  CHECK(z19.mis_exact == 2);
  CHECK(z19.match);
  CHECK(z19.generates == true);

  const ConstructionReport z7 = type3_construction(7, std::nullopt);
  CHECK(z7.match);
  const ConstructionReport z77 = type3_construction(7, GroupSpec::make({7}));
  CHECK(z77.mis_exact >= 64);
  CHECK(z77.match);
  CHECK(z77.generates == true);

  CHECK_THROWS_AS(type3_construction(11, std::nullopt), InvalidArgument);
  CHECK_THROWS_AS(type3_construction(7, GroupSpec::make({2})), InvalidArgument);
}

TEST_CASE("distinct constructions") {
  const auto z5 = distinct_construction_63(GroupSpec::make({5}));
  CHECK(z5.case_label == "odd type I(5)");
  CHECK(z5.mis_exact == 2);
  CHECK(z5.match);

  const auto z7 = distinct_construction_63(GroupSpec::make({7}));
  CHECK(z7.case_label == "type III");
  CHECK(z7.match);

  const auto z9 = distinct_construction_63(GroupSpec::make({9}));
  CHECK(z9.case_label == "type II");
  CHECK(z9.mis_exact == 2);
  CHECK(z9.match);

  const auto z8 = distinct_construction_63(GroupSpec::make({8}));
  CHECK(z8.mis_exact == 4);
  CHECK(z8.match);

  const auto z6 = distinct_construction_64(GroupSpec::make({6}));
  CHECK(z6.mis_exact == 2);
  CHECK(z6.match);
  CHECK_THROWS_AS(distinct_construction_63(GroupSpec::make({6})), InvalidArgument);

  for (std::uint32_t k = 1; k <= 4; ++k) {
    const auto r = distinct_construction_63(GroupSpec::make(std::vector<std::uint32_t>(k, 2)));
    CHECK(r.match);
  }

  for (const char* text : {"Z11", "Z13", "Z15", "Z21", "Z3^2", "Z4*Z3", "Z2*Z10", "Z12", "Z2*Z2*Z3"}) {
    const GroupSpec G = parse_group(text);
    const bool even64 = G.order() % 2 == 0 && G.exponent() % 4 != 0 && G.exponent() != 2;
    const auto r = even64 ? distinct_construction_64(G) : distinct_construction_63(G);
    CHECK_MESSAGE(r.match, text);
    if (r.exhaustive) CHECK(*r.exhaustive >= r.mis_exact);
  }
}

TEST_CASE("leading terms") {
  CHECK(leading_term(GroupSpec::make({2, 2, 2, 2})).lower == 1680);
  CHECK(leading_term(GroupSpec::make({3, 3})).lower == 48);
  CHECK(leading_term(GroupSpec::make({2, 2})).lower == 6);
  CHECK(leading_term(GroupSpec::make({3})).lower == 0);
  CHECK(leading_term(GroupSpec::make({2})).lower == 0);
  CHECK_THROWS_AS(leading_term(GroupSpec::make({5})), InvalidArgument);
}
