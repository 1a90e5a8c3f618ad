#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msf/error.hpp"
#include "msf/sumfree.hpp"
#include "oracle.hpp"

#include <random>
#include <set>

using namespace msf;

namespace {

/// Every order list (non-decreasing, entries >= 2) with product <= limit.
void order_lists(std::uint32_t limit, std::vector<std::uint32_t>& prefix,
                 std::vector<std::vector<std::uint32_t>>& out) {
  std::uint32_t prod = 1;
  for (auto m : prefix) prod *= m;
  if (!prefix.empty()) out.push_back(prefix);
  const std::uint32_t lo = prefix.empty() ? 2 : prefix.back();
  for (std::uint32_t m = lo; prod * m <= limit; ++m) {
    prefix.push_back(m);
    order_lists(limit, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<std::uint32_t>> all_order_lists(std::uint32_t limit) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> prefix;
  order_lists(limit, prefix, out);
  return out;
}

ElementSet set_of(std::uint32_t n, std::initializer_list<std::uint32_t> xs) {
  ElementSet s(n);
  for (auto x : xs) s.insert(x);
  return s;
}

}  // namespace

TEST_CASE("predicates on small examples") {
  const auto z6 = GroupSpec::make({6});
  const auto z7 = GroupSpec::make({7});
  CHECK(is_sumfree(z6, set_of(6, {1, 3, 5})));
  CHECK(is_sumfree(z7, ElementSet(7)));
  CHECK_FALSE(is_sumfree(z7, set_of(7, {0})));
  CHECK(is_maximal_sumfree(z7, set_of(7, {2, 3})));
  CHECK_FALSE(is_maximal_sumfree(z7, set_of(7, {2})));
  CHECK_FALSE(is_maximal_sumfree(z7, set_of(7, {0, 3})));
  CHECK(is_distinct_sumfree(z7, set_of(7, {2, 3, 4})));
  CHECK(is_distinct_sumfree(z7, set_of(7, {2, 3})));
  CHECK_FALSE(is_maximal_distinct_sumfree(z7, set_of(7, {2, 3})));
  CHECK(is_maximal_distinct_sumfree(z7, set_of(7, {2, 3, 4})));
  CHECK(is_distinct_sumfree(z7, set_of(7, {0})));
}

TEST_CASE("maximal sets of Z7") {
  const auto z7 = GroupSpec::make({7});
  CHECK(count_fmax(z7).value == 9);
  CHECK(count_fstar_max(z7).value == 14);
  CHECK(mu_bruteforce(z7).value == 2);
  const auto z2 = GroupSpec::make({2});
  const auto sets = maximal_sumfree_sets(z2);
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].to_string() == "1");
  CHECK(count_sumfree(z2).value == 2);
  CHECK(mu_bruteforce(GroupSpec::make({10})).value == 5);
}

TEST_CASE("enumeration matches the subset-scan oracle for n <= 16") {
  for (const auto& orders : all_order_lists(16)) {
    const auto g = GroupSpec::make(orders);
    const oracle::Group og(orders);
    CAPTURE(g.to_string());
    std::vector<std::uint64_t> got;
    for (const auto& s : maximal_sumfree_sets(g)) got.push_back(s.mask());
    auto expected = oracle::maximal_sumfree_scan(og);
    std::vector<ElementSet> exp_sets;
    for (auto m : expected) exp_sets.push_back(ElementSet::from_mask(g.order(), m));
    std::sort(exp_sets.begin(), exp_sets.end());
    std::vector<std::uint64_t> exp_sorted;
    for (const auto& s : exp_sets) exp_sorted.push_back(s.mask());
    CHECK(got == exp_sorted);

    std::vector<std::uint64_t> got_star;
    for (const auto& s : maximal_distinct_sumfree_sets(g)) got_star.push_back(s.mask());
    auto exp_star = oracle::maximal_distinct_sumfree_scan(og);
    std::sort(got_star.begin(), got_star.end());
    std::sort(exp_star.begin(), exp_star.end());
    CHECK(got_star == exp_star);
  }
}

TEST_CASE("counts match the census oracle; mu <= mu*, f <= f*") {
  for (const auto& orders : all_order_lists(16)) {
    const auto g = GroupSpec::make(orders);
    CAPTURE(g.to_string());
    const auto c = oracle::census(oracle::Group(orders));
    CHECK(count_sumfree(g).value == c.f);
    CHECK(count_distinct_sumfree(g).value == c.f_star);
    CHECK(mu_bruteforce(g).value == c.mu);
    CHECK(mu_star_bruteforce(g).value == c.mu_star);
    CHECK(c.mu <= c.mu_star);
    CHECK(c.f <= c.f_star);
  }
}

TEST_CASE("mu formula agrees with exhaustive search for every group of order <= 30") {
  for (const auto& orders : all_order_lists(30)) {
    const auto g = GroupSpec::make(orders);
    CAPTURE(g.to_string());
    CHECK(mu_bruteforce(g).value == mu_formula(g));
    CHECK(mu_formula(g) == oracle::mu_by_type(orders));
  }
}

TEST_CASE("isomorphic specs agree") {
  const auto a = GroupSpec::make({2, 6});
  const auto b = GroupSpec::make({2, 2, 3});
  CHECK(count_fmax(a).value == count_fmax(b).value);
  CHECK(count_fstar_max(a).value == count_fstar_max(b).value);
  CHECK(count_sumfree(a).value == count_sumfree(b).value);
}

TEST_CASE("enumerated sets are maximal, distinct, and in canonical order") {
  for (const char* spec : {"Z2^4", "Z3^2", "Z13", "Z4*Z4", "Z2*Z10"}) {
    const auto g = parse_group(spec);
    CAPTURE(spec);
    const auto sets = maximal_sumfree_sets(g);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      CHECK(is_maximal_sumfree(g, sets[i]));
      if (i > 0) CHECK(sets[i - 1] < sets[i]);
    }
    for (const auto& s : maximal_distinct_sumfree_sets(g)) CHECK(is_maximal_distinct_sumfree(g, s));
  }
}

TEST_CASE("sum-free implies distinct sum-free on random subsets") {
  std::mt19937_64 rng(12345);
  const auto lists = all_order_lists(64);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto& orders = lists[rng() % lists.size()];
    const auto g = GroupSpec::make(orders);
    ElementSet s(g.order());
    const auto k = rng() % 6;
    for (std::uint64_t i = 0; i < k; ++i) s.insert(static_cast<std::uint32_t>(rng() % g.order()));
    if (is_sumfree(g, s)) CHECK(is_distinct_sumfree(g, s));
  }
}

TEST_CASE("threads give the same stream") {
  for (const char* spec : {"Z2^5", "Z3^3", "Z31"}) {
    const auto g = parse_group(spec);
    EnumOptions one;
    EnumOptions four;
    four.threads = 4;
    CHECK(maximal_sumfree_sets(g, one) == maximal_sumfree_sets(g, four));
    CHECK(count_fmax(g, one).value == count_fmax(g, four).value);
    CHECK(count_sumfree(g, one).value == count_sumfree(g, four).value);
  }
}

TEST_CASE("f*_max equals f_max on Z2^k") {
  for (std::uint32_t k = 1; k <= 5; ++k) {
    const auto g = GroupSpec::make(std::vector<std::uint32_t>(k, 2));
    CHECK(count_fstar_max(g).value == count_fmax(g).value);
  }
}

TEST_CASE("budgets and guards") {
  const auto g = parse_group("Z2^5");
  EnumOptions tiny;
  tiny.max_nodes = 100;
  try {
    count_fmax(g, tiny);
    FAIL("expected budget error");
  } catch (const BudgetExceeded& e) {
    CHECK(e.nodes() > 100);
  }
  std::size_t seen = 0;
  CHECK_THROWS_AS(enumerate_maximal_sumfree(g, [&](const ElementSet&) { ++seen; }, tiny), BudgetExceeded);
  CHECK_THROWS_AS(count_fmax(parse_group("Z65")), InvalidArgument);
  CHECK(parse_quantity("fmax") == Quantity::kFMax);
  CHECK_THROWS_AS(parse_quantity("nope"), InvalidArgument);
}

TEST_CASE("mu report uses the formula") {
  const auto r = mu_report(parse_group("Z10"));
  CHECK(r.value == 5);
  CHECK(r.method == Method::kFormula);
  CHECK_FALSE(r.formula.empty());
}
