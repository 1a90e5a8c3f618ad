#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msf/error.hpp"
#include "msf/group.hpp"

#include <vector>

using namespace msf;

TEST_CASE("make_group computes order and exponent") {
  const auto g = GroupSpec::make({2, 2, 2});
  CHECK(g.order() == 8);
  CHECK(g.exponent() == 2);
  CHECK(GroupSpec::make({9}).exponent() == 9);
  const auto h = GroupSpec::make({2, 6});
  CHECK(h.order() == 12);
  CHECK(h.exponent() == 6);
}

TEST_CASE("make_group rejects bad input") {
  CHECK_THROWS_AS(GroupSpec::make({}), InvalidArgument);
  CHECK_THROWS_AS(GroupSpec::make({1, 3}), InvalidArgument);
  CHECK_THROWS_AS(GroupSpec::make({256, 256, 2}), InvalidArgument);
  CHECK_NOTHROW(GroupSpec::make({256, 256}));
}

TEST_CASE("arithmetic") {
  const auto z9 = GroupSpec::make({9});
  CHECK(z9.add(Element{4}, Element{7}) == Element{2});
  const auto z23 = GroupSpec::make({2, 3});
  const std::vector<std::uint32_t> c{1, 2};
  const Element x = z23.element(c);
  CHECK(z23.coords(z23.neg(x)) == std::vector<std::uint32_t>{1, 1});
  for (const auto& orders : std::vector<std::vector<std::uint32_t>>{{2, 6}, {3, 3, 2}, {5}, {4, 4}}) {
    const auto g = GroupSpec::make(orders);
    for (std::uint32_t i = 0; i < g.order(); ++i) {
      const Element a{i};
      CHECK(g.add(a, g.neg(a)) == g.zero());
      CHECK(g.add(a, g.zero()) == a);
      CHECK(g.element(g.coords(a)) == a);
      for (std::uint32_t j = 0; j < g.order(); ++j) {
        CHECK(g.add(a, Element{j}) == g.add(Element{j}, a));
        const Element b{j};
        const Element c3{(i * 7 + j) % g.order()};
        CHECK(g.add(g.add(a, b), c3) == g.add(a, g.add(b, c3)));
      }
    }
  }
}

TEST_CASE("parse_group grammar") {
  CHECK(parse_group("Z2^4").orders() == std::vector<std::uint32_t>{2, 2, 2, 2});
  CHECK(parse_group("Z9*Z3").orders() == std::vector<std::uint32_t>{9, 3});
  CHECK(parse_group("Z13").order() == 13);
  CHECK(parse_group("Z2*Z6").to_string() == "Z2*Z6");
  CHECK(parse_group(parse_group("Z2^3*Z5").to_string()) == parse_group("Z2^3*Z5"));
  try {
    parse_group("Z9*Y3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
  CHECK_THROWS_AS(parse_group("Z9 "), ParseError);
  CHECK_THROWS_AS(parse_group(""), ParseError);
  CHECK_THROWS_AS(parse_group("Z2^0"), ParseError);
}

TEST_CASE("classify") {
  CHECK(classify(GroupSpec::make({10})).to_string() == "TypeI(2)");
  CHECK(classify(GroupSpec::make({3, 3, 3})).kind == GroupType::Kind::kTypeII);
  CHECK(classify(GroupSpec::make({7})).kind == GroupType::Kind::kTypeIII);
  CHECK(classify(GroupSpec::make({15})).to_string() == "TypeI(5)");
}

TEST_CASE("classify is total and exclusive for every order list up to 10^4") {
  // Orders m with n <= 10^4: check directly on cyclic groups, the type only depends on n.
  for (std::uint32_t n = 2; n <= 10000; ++n) {
    const GroupType t = classify(GroupSpec::make({n}));
    bool has_p = false;
    std::uint32_t smallest = 0;
    for (std::uint32_t p = 2; p <= n; ++p) {
      if (n % p == 0 && is_prime(p) && p % 3 == 2) {
        has_p = true;
        smallest = p;
        break;
      }
    }
    if (has_p) {
      CHECK(t.kind == GroupType::Kind::kTypeI);
      CHECK(t.p == smallest);
    } else if (n % 3 == 0) {
      CHECK(t.kind == GroupType::Kind::kTypeII);
    } else {
      CHECK(t.kind == GroupType::Kind::kTypeIII);
    }
  }
}

TEST_CASE("mu_formula closed forms") {
  for (std::uint32_t k = 1; k <= 8; ++k) {
    CHECK(mu_formula(GroupSpec::make(std::vector<std::uint32_t>(k, 2))) == (1ULL << k) / 2);
  }
  std::uint64_t p3 = 1;
  for (std::uint32_t k = 1; k <= 6; ++k) {
    CHECK(mu_formula(GroupSpec::make(std::vector<std::uint32_t>(k, 3))) == p3);
    p3 *= 3;
  }
  CHECK(mu_formula(GroupSpec::make({7})) == 2);
  CHECK(mu_formula(GroupSpec::make({10})) == 5);
}

TEST_CASE("subgroups and cosets") {
  const auto z9 = GroupSpec::make({9});
  const std::vector<Element> gens{Element{3}};
  CHECK(subgroup_generated(z9, gens).to_string() == "0,3,6");
  CHECK(subgroup_generated(z9, {}).to_string() == "0");
  const auto v4 = GroupSpec::make({2, 2});
  const std::vector<Element> g2{Element{1}};
  CHECK(subgroup_generated(v4, g2).to_string() == "0,1");

  const auto z6 = GroupSpec::make({6});
  const auto cs = cosets(z6, parse_element_set("0,3", 6));
  REQUIRE(cs.size() == 3);
  CHECK(cs[0].to_string() == "0,3");
  CHECK(cs[1].to_string() == "1,4");
  CHECK(cs[2].to_string() == "2,5");
  CHECK(cosets(z9, parse_element_set("0,3,6", 9)).size() == 3);
  CHECK(cosets(z9, ElementSet::full(9)).size() == 1);
  CHECK_THROWS_AS(cosets(z6, parse_element_set("0,1", 6)), InvalidArgument);
}

TEST_CASE("hyperplanes") {
  CHECK(hyperplanes(GroupSpec::make({2, 2, 2})).size() == 7);
  CHECK(hyperplanes(GroupSpec::make({3, 3})).size() == 4);
  const auto z2 = hyperplanes(GroupSpec::make({2}));
  REQUIRE(z2.size() == 1);
  CHECK(z2[0].subgroup.to_string() == "0");
  CHECK_THROWS_AS(hyperplanes(GroupSpec::make({2, 3})), InvalidArgument);
  CHECK_THROWS_AS(hyperplanes(GroupSpec::make({4, 4})), InvalidArgument);
  for (const auto& orders : std::vector<std::vector<std::uint32_t>>{{2, 2, 2, 2}, {3, 3, 3}, {5, 5}}) {
    const auto g = GroupSpec::make(orders);
    const auto hs = hyperplanes(g);
    std::uint64_t p = orders[0], pk = g.order();
    CHECK(hs.size() == (pk - 1) / (p - 1));
    for (std::size_t i = 0; i < hs.size(); ++i) {
      CHECK(hs[i].subgroup.count() == pk / p);
      CHECK(is_subgroup(g, hs[i].subgroup));
      CHECK(hs[i].cosets.size() == p - 1);
      for (std::size_t j = 0; j < i; ++j) CHECK(hs[i].subgroup != hs[j].subgroup);
    }
  }
}

TEST_CASE("cyclic quotient fibres are cosets of an index-q subgroup") {
  for (const auto& [orders, q] : std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>>{
           {{13}, 13}, {{2, 14}, 7}, {{4, 2}, 4}, {{6, 3}, 3}, {{9, 3}, 9}}) {
    const auto g = GroupSpec::make(orders);
    const CyclicQuotient phi(g, q);
    CHECK(phi.kernel().count() * q == g.order());
    CHECK(is_subgroup(g, phi.kernel()));
    for (std::uint32_t a = 0; a < g.order(); ++a) {
      for (std::uint32_t b = 0; b < g.order(); ++b) {
        CHECK(phi.image(g.add(Element{a}, Element{b})) == (phi.image(Element{a}) + phi.image(Element{b})) % q);
      }
    }
    CHECK(phi.image(phi.representative(1)) == 1);
  }
}

TEST_CASE("element sets") {
  const auto s = parse_element_set("1,3,5", 8);
  CHECK(s.count() == 3);
  CHECK(parse_element_set("4..6", 9).to_string() == "4,5,6");
  CHECK(s.complement().to_string() == "0,2,4,6,7");
  CHECK_THROWS_AS(parse_element_set("1,9", 8), ParseError);
  CHECK(parse_element_set("0,2", 8) < parse_element_set("0,3", 8));
  CHECK(parse_element_set("1", 8) < parse_element_set("2", 8));
  CHECK(parse_element_set("1,4", 8) < parse_element_set("1", 8));
}
