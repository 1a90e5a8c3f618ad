#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msf/error.hpp"
#include "msf/mis.hpp"
#include "oracle.hpp"

#include <random>
#include <set>

using namespace msf;

namespace {

oracle::Graph to_oracle(const LoopGraph& g) {
  oracle::Graph o(static_cast<std::uint32_t>(g.size()));
  for (const Edge& e : g.edges()) o.edge(e.u, e.v);
  for (std::uint32_t v = 0; v < g.size(); ++v) o.loop[v] = g.loop(v) != 0;
  return o;
}

LoopGraph random_graph(std::mt19937_64& rng, std::uint32_t n) {
  LoopGraph g = LoopGraph::unlabeled(n);
  const double p = 0.05 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
  std::uniform_real_distribution<double> u(0, 1);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (u(rng) < p) g.add_edge(a, b, static_cast<std::uint8_t>(1 + rng() % 3));
    }
    if (u(rng) < 0.1) g.add_loop(a, static_cast<std::uint8_t>(1 + rng() % 3));
  }
  return g;
}

bool upper_holds(const BigInt& value, const Certified& bound) {
  return certainly_le(BigRational(value), bound) == Verdict::kTrue ||
         BigRational(value) <= bound.lower;
}

}  // namespace

TEST_CASE("catalog counts") {
  CHECK(mis(fixture("C4")) == 2);
  CHECK(mis(fixture("C6")) == 5);
  CHECK(mis(fixture("K2xK3")) == 6);
  CHECK(mis(fixture("cube")) == 6);
  CHECK(mis(fixture("looped-triangle")) == 2);
  CHECK(mis(fixture("K2xK3+1-loop")) == 4);
  CHECK(mis(fixture("3-path+3-loops")) == 1);
  CHECK(mis(fixture("triangle+2-loops")) == 1);
  CHECK(mis(fixture("Z3^2-network")) == 6);
  CHECK(mis(LoopGraph::unlabeled(0)) == 1);
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    CHECK(mis(fixture(name)) == oracle::mis_scan(to_oracle(fixture(name))));
  }
}

TEST_CASE("reduce_loops") {
  CHECK(reduce_loops(fixture("3-path+3-loops")).size() == 0);
  const LoopGraph r = reduce_loops(fixture("triangle+2-loops"));
  CHECK(r.size() == 1);
  CHECK(r.edge_count() == 0);
  CHECK(reduce_loops(fixture("C6")) == fixture("C6"));
}

TEST_CASE("random graphs agree with the subset scan; enumeration agrees with counting") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::uint32_t>(1 + rng() % 18);
    const LoopGraph g = random_graph(rng, n);
    CAPTURE(to_adjacency_text(g));
    const BigInt c = count_mis(g).count;
    CHECK(c == oracle::mis_scan(to_oracle(g)));
    const auto sets = all_mis(g);
    CHECK(BigInt(sets.size()) == c);
    std::set<std::vector<std::uint32_t>> unique(sets.begin(), sets.end());
    CHECK(unique.size() == sets.size());
    CHECK(upper_holds(c, bound_moon_moser(n)));
    if (is_triangle_free(g)) CHECK(upper_holds(c, bound_hujter_tuza(reduce_loops(g).size())));
  }
}

TEST_CASE("count_mis components multiply") {
  LoopGraph g = LoopGraph::unlabeled(10);
  g.add_edge(0, 1, kType1);
  g.add_edge(1, 2, kType1);
  g.add_edge(2, 3, kType1);
  g.add_edge(3, 0, kType1);
  g.add_edge(4, 5, kType1);
  g.add_edge(5, 6, kType1);
  g.add_edge(6, 4, kType1);
  g.add_loop(6, kBadLoop);
  g.add_edge(7, 8, kType1);
  const MisCount mc = count_mis(g);
  CHECK(mc.count == 2 * 2 * 2 * 1);
  CHECK(mc.count == oracle::mis_scan(to_oracle(g)));
  BigInt product = 1;
  for (const auto& c : mc.components) product *= pow(c.count, c.multiplicity);
  CHECK(product == mc.count);
  REQUIRE(mc.components.size() == 4);
  CHECK(mc.components[0].label == "C4");
  CHECK(mc.components[1].label == "looped-triangle");
  CHECK(mc.components[2].label == "matching-edge");
  CHECK(mc.components[3].label == "isolated");
}

TEST_CASE("perfect matchings attain 2^t") {
  for (std::uint32_t t = 0; t <= 20; ++t) {
    LoopGraph g = LoopGraph::unlabeled(2 * t);
    for (std::uint32_t i = 0; i < t; ++i) g.add_edge(2 * i, 2 * i + 1, kType1);
    CHECK(mis(g) == pow(BigInt(2), t));
    const Certified ht = bound_hujter_tuza(2 * t);
    CHECK(ht.lower == ht.upper);
    CHECK(BigRational(mis(g)) == ht.lower);
  }
}

TEST_CASE("enumeration order and ids") {
  LoopGraph g = LoopGraph::unlabeled(5);
  g.add_edge(0, 1, kType1);
  g.add_loop(2, kBadLoop);
  g.add_edge(3, 4, kType1);
  const auto sets = all_mis(g);
  REQUIRE(sets.size() == 4);
  CHECK(sets[0] == std::vector<std::uint32_t>{0, 3});
  CHECK(sets[1] == std::vector<std::uint32_t>{0, 4});
  CHECK(sets[2] == std::vector<std::uint32_t>{1, 3});
  CHECK(sets[3] == std::vector<std::uint32_t>{1, 4});
  MisOptions tiny;
  tiny.max_sets = 3;
  CHECK_THROWS_AS(all_mis(g, tiny), BudgetExceeded);
  CHECK(all_mis(LoopGraph::unlabeled(0)) == std::vector<std::vector<std::uint32_t>>{{}});
}

TEST_CASE("bound evaluators") {
  CHECK(bound_moon_moser(3).lower == 3);
  CHECK(bound_moon_moser(3).upper == 3);
  CHECK(bound_hujter_tuza(2).upper == 2);
  const Certified mm = bound_moon_moser(4);
  CHECK(mm.lower < mm.upper);
  CHECK(mm.lower > BigRational(432, 100));
  CHECK(mm.upper < BigRational(433, 100));

  const Certified ls = bound_ls(6, 0, 13, 3);
  CHECK(ls.lower == 27);
  CHECK(ls.upper == 27);
  CHECK_THROWS_AS(bound_ls(6, 0, 14, 3), InvalidArgument);
  CHECK(bound_ls(6, 13, 1, 3).upper < 27);

  const Certified b = bound_blst(4, 1, 4, 4);
  // i <= 2: 1 + 4 + 6 = 11; exponent 2/3 + 4/3 = 2.
  CHECK(b.lower == 99);
  const Certified b2 = bound_blst(6, 2, 2, 3);
  CHECK(b2.lower <= b2.upper);
  CHECK(b2.lower > 0);
  CHECK_THROWS_AS(bound_blst(6, 1, 2, 3), InvalidArgument);
  CHECK_THROWS_AS(bound_blst(6, 0, 2, 3), InvalidArgument);
}
