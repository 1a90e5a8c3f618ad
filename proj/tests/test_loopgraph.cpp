#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msf/error.hpp"
#include "msf/loopgraph.hpp"
#include "msf/mis.hpp"
#include "msf/sumfree.hpp"
#include "oracle.hpp"

using namespace msf;

namespace {

ElementSet set_of(std::uint32_t n, std::initializer_list<std::uint32_t> xs) {
  ElementSet s(n);
  for (auto x : xs) s.insert(x);
  return s;
}

/// Same vertices, edges and looped vertices as the oracle graph.
bool agrees(const LoopGraph& g, const oracle::Graph& o) {
  if (g.size() != o.n) return false;
  for (std::uint32_t u = 0; u < o.n; ++u) {
    if ((g.loop(u) != 0) != o.loop[u]) return false;
    for (std::uint32_t v = 0; v < o.n; ++v) {
      if (u != v && (g.edge(u, v) != 0) != o.adj[u][v]) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> subsets_up_to(std::uint32_t n, const ElementSet& pool, unsigned max_size) {
  std::vector<std::uint64_t> out;
  const std::uint64_t pm = pool.mask();
  for (std::uint64_t s = pm;; s = (s - 1) & pm) {
    if (static_cast<unsigned>(__builtin_popcountll(s)) <= max_size) out.push_back(s);
    if (s == 0) break;
  }
  (void)n;
  return out;
}

}  // namespace

TEST_CASE("edge tags and degrees") {
  LoopGraph g = LoopGraph::unlabeled(3);
  g.add_edge(0, 1, kType1);
  g.add_edge(1, 0, kType2);
  g.add_loop(2, kBadLoop);
  CHECK(g.edge(0, 1) == 3);
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(2) == 2);
  CHECK(g.degree(0) == 1);
  CHECK_THROWS_AS(g.add_edge(1, 1, kType1), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(0, 1, 0), InvalidArgument);
}

TEST_CASE("Z2^3 coset link graph is a perfect matching") {
  const auto g = parse_group("Z2^3");
  for (const auto& h : hyperplanes(g)) {
    for (std::uint32_t s : h.subgroup.indices()) {
      if (s == 0) continue;
      const LoopGraph lg = link_graph(g, set_of(8, {s}), h.cosets[0]);
      CHECK(lg.size() == 4);
      CHECK(lg.edge_count() == 2);
      CHECK(lg.loop_count() == 0);
      for (std::uint32_t v = 0; v < 4; ++v) CHECK(lg.degree(v) == 1);
      for (const Edge& e : lg.edges()) CHECK(e.mask == (kType1 | kType2));
      CHECK(gamma1(lg).edge_count() == 2);
      CHECK(gamma2(lg).edge_count() == 2);
    }
  }
}

TEST_CASE("Z3^2 coset with s in H gives a triangle") {
  const auto g = parse_group("Z3^2");
  for (const auto& h : hyperplanes(g)) {
    for (std::uint32_t s : h.subgroup.indices()) {
      if (s == 0) continue;
      for (const auto& coset : h.cosets) {
        const LoopGraph lg = link_graph(g, set_of(9, {s}), coset);
        CHECK(summarize(lg).counts == std::map<std::string, std::size_t>{{"triangle", 1}});
      }
    }
  }
}

TEST_CASE("Z9 example: triangle with two loops") {
  const auto g = parse_group("Z9");
  const LoopGraph lg = link_graph(g, set_of(9, {1, 7}), set_of(9, {4, 5, 6}));
  CHECK(lg.edge_count() == 3);
  CHECK(lg.loop(0) == 0);
  CHECK(lg.loop(1) == (kBadLoop | kType2Loop));
  CHECK(lg.loop(2) == kBadLoop);
  CHECK(lg.edge(0, 2) == (kType1 | kType2));
  CHECK(lg.edge(0, 1) == kType1);
  CHECK(catalog_label(lg) == "triangle+2-loops");
  const LoopGraph gp = gamma_prime(lg);
  CHECK(gp.loop(1) == kType2Loop);
  CHECK(gp.loop(2) == 0);
  CHECK(catalog_label(gp) == "looped-triangle");
  CHECK(catalog_label(rtimes(gamma1(lg), gamma2(lg))) == "K2xK3");
  CHECK(agrees(lg, oracle::link_graph(oracle::Group({9}), 0b10000010, 0b1110000)));
}

TEST_CASE("link graph agrees with the Schur-triple oracle") {
  for (const char* spec : {"Z7", "Z2^3", "Z3^2", "Z2*Z4", "Z10", "Z12"}) {
    const auto g = parse_group(spec);
    const oracle::Group og(g.orders());
    CAPTURE(spec);
    const auto all = ElementSet::full(g.order());
    for (std::uint64_t s : subsets_up_to(g.order(), all, 2)) {
      const auto S = ElementSet::from_mask(g.order(), s);
      if (!is_sumfree(g, S)) continue;
      const auto B = S.complement();
      const auto B2 = ElementSet::from_mask(g.order(), B.mask() & 0x5555555555555555ULL);
      CHECK(agrees(link_graph(g, S, B), oracle::link_graph(og, s, B.mask())));
      CHECK(agrees(link_graph(g, S, B2), oracle::link_graph(og, s, B2.mask())));
    }
  }
}

TEST_CASE("non-sum-free S is rejected; overlap warns") {
  const auto g = parse_group("Z7");
  CHECK_THROWS_AS(link_graph(g, set_of(7, {1, 2}), set_of(7, {3})), InvalidArgument);
  std::vector<std::string> warnings;
  link_graph(g, set_of(7, {3}), set_of(7, {2, 3}), [&](const std::string& w) { warnings.push_back(w); });
  CHECK(warnings.size() == 1);
}

TEST_CASE("distinct link graphs") {
  const LoopGraph a = distinct_link_graph(parse_group("Z5"), set_of(5, {0}), set_of(5, {1, 4}));
  CHECK(a.edge_count() == 1);
  CHECK(a.loop_count() == 0);
  const LoopGraph b = distinct_link_graph(parse_group("Z6"), set_of(6, {0}), set_of(6, {1, 3, 5}));
  CHECK(b.edge_count() == 1);
  CHECK(b.edge(0, 2) != 0);
  CHECK(b.degree(1) == 0);
  const LoopGraph c = distinct_link_graph(parse_group("Z7"), set_of(7, {0}), set_of(7, {2, 3}));
  CHECK(c.edge_count() == 0);
  CHECK_THROWS_AS(distinct_link_graph(parse_group("Z7"), set_of(7, {1, 2, 3}), set_of(7, {4})), InvalidArgument);
  // Never a type-2 loop.
  const auto g = parse_group("Z9");
  const LoopGraph d = distinct_link_graph(g, set_of(9, {1, 7}), set_of(9, {4, 5, 6}));
  for (std::uint32_t v = 0; v < d.size(); ++v) CHECK((d.loop(v) & kType2Loop) == 0);
}

TEST_CASE("gamma extraction") {
  LoopGraph g = LoopGraph::unlabeled(3);
  g.add_edge(0, 1, kType1);
  g.add_edge(1, 2, kType1 | kType2);
  g.add_loop(0, kBadLoop | kType2Loop);
  g.add_loop(2, kBadLoop);
  CHECK(gamma1(g).edge_count() == 2);
  CHECK(gamma1(g).loop_count() == 0);
  CHECK(gamma2(g).edge_count() == 1);
  CHECK(gamma2(g).loop(0) == kType2Loop);
  CHECK(gamma2(g).loop(2) == 0);
  const LoopGraph p = gamma_prime(g);
  CHECK(p.loop(0) == kType2Loop);
  CHECK(p.loop(2) == 0);
  CHECK(p.edge_count() == 2);
  LoopGraph plain = LoopGraph::unlabeled(2);
  plain.add_edge(0, 1, kType1);
  CHECK(gamma_prime(plain) == plain);
}

TEST_CASE("rtimes") {
  LoopGraph e = LoopGraph::unlabeled(2);
  e.add_edge(0, 1, kType1);
  const LoopGraph two = rtimes(e, LoopGraph::unlabeled(2));
  CHECK(two.size() == 4);
  CHECK(two.edge_count() == 2);
  CHECK(summarize(two).counts == std::map<std::string, std::size_t>{{"matching-edge", 2}});

  LoopGraph looped = LoopGraph::unlabeled(1);
  looped.add_loop(0, kType2Loop);
  const LoopGraph one = rtimes(LoopGraph::unlabeled(1), looped);
  CHECK(one.edge_count() == 1);
  CHECK(one.label(1) == 1);

  const LoopGraph lt = fixture("looped-triangle");
  CHECK(catalog_label(rtimes(gamma1(lt), gamma2(lt))) == "K2xK3");
  CHECK_THROWS_AS(rtimes(e, LoopGraph::unlabeled(3)), InvalidArgument);
}

TEST_CASE("lift over K decomposes into blocks") {
  const auto H = parse_group("Z9");
  const auto B = set_of(9, {4, 5, 6});
  const auto S = set_of(9, {1, 7});
  struct Case {
    const char* k;
    std::uint32_t a;
    std::size_t prime, doubled;
  };
  for (const Case& c : {Case{"Z2", 2, 1, 0}, Case{"Z3", 1, 0, 1}, Case{"Z4", 2, 1, 1}, Case{"Z2^2", 4, 3, 0},
                        Case{"Z5", 1, 0, 2}}) {
    CAPTURE(c.k);
    const auto K = parse_group(c.k);
    const LiftResult r = lift_tilde(H, K, B, S);
    CHECK(r.a == c.a);
    CHECK(r.copies_gamma == 1);
    CHECK(r.copies_prime == c.prime);
    CHECK(r.copies_rtimes == c.doubled);
    BigInt product = mis(r.gamma) * pow(mis(r.gamma_prime), c.a - 1) * pow(mis(r.rtimes), c.doubled);
    CHECK(mis(r.graph) == product);
  }
  CHECK_THROWS_AS(lift_tilde(H, parse_group("Z2"), set_of(9, {1, 4}), S), InvalidArgument);
}

TEST_CASE("Z2^k regularity: |S|-regular and loop-free") {
  for (std::uint32_t k = 2; k <= 4; ++k) {
    const auto g = GroupSpec::make(std::vector<std::uint32_t>(k, 2));
    for (const auto& h : hyperplanes(g)) {
      const auto& B = h.cosets[0];
      for (std::uint64_t s : subsets_up_to(g.order(), h.subgroup, 3)) {
        const auto S = ElementSet::from_mask(g.order(), s);
        if (!is_sumfree(g, S)) continue;
        const LoopGraph lg = link_graph(g, S, B);
        CHECK(lg.loop_count() == 0);
        for (std::uint32_t v = 0; v < lg.size(); ++v) CHECK(lg.degree(v) == S.count());
        const auto census = summarize(lg).counts;
        if (S.count() == 2) {
          CHECK(census == std::map<std::string, std::size_t>{{"C4", g.order() / 8}});
          CHECK(mis(lg) == pow(BigInt(2), g.order() / 8));
        }
        if (S.count() == 3) {
          CHECK(census == std::map<std::string, std::size_t>{{"cube", g.order() / 16}});
          CHECK(mis(lg) == pow(BigInt(6), g.order() / 16));
        }
      }
    }
  }
}

TEST_CASE("Z3^3 independent pair in H gives copies of the Z3^2 network") {
  const auto g = parse_group("Z3^3");
  const auto hs = hyperplanes(g);
  const auto& h = hs[0];
  const auto members = h.subgroup.indices();
  int checked = 0;
  for (std::uint32_t s1 : members) {
    for (std::uint32_t s2 : members) {
      if (s1 == 0 || s2 == 0 || s1 >= s2 || s2 == g.neg(Element{s1}).index) continue;
      ElementSet S(27);
      S.insert(s1);
      S.insert(s2);
      if (!is_sumfree(g, S)) continue;
      const LoopGraph lg = link_graph(g, S, h.cosets[0]);
      CHECK(summarize(lg).counts == std::map<std::string, std::size_t>{{"Z3^2-network", 1}});
      CHECK(mis(lg) == 6);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("components, degree profile, catalog") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    CHECK(catalog_label(fixture(name)) == name);
    CHECK(components(fixture(name)).size() == 1);
  }
  CHECK(catalog_label(LoopGraph::unlabeled(0)).rfind("other(", 0) == 0);
  LoopGraph path = LoopGraph::unlabeled(4);
  path.add_edge(0, 1, kType1);
  path.add_edge(1, 2, kType1);
  path.add_edge(2, 3, kType1);
  CHECK(catalog_label(path).rfind("other(", 0) == 0);
  LoopGraph relabelled = LoopGraph::unlabeled(4);
  relabelled.add_edge(3, 1, kType2);
  relabelled.add_edge(1, 0, kType1);
  relabelled.add_edge(0, 2, kType1);
  CHECK(catalog_label(relabelled) == catalog_label(path));

  const auto prof = degree_profile(fixture("K2xK3+1-loop"));
  CHECK(prof.max_degree == 5);
  CHECK(prof.min_degree == 3);
}

TEST_CASE("text formats") {
  const auto g = parse_group("Z9");
  const LoopGraph lg = link_graph(g, set_of(9, {1, 7}), set_of(9, {4, 5, 6}));
  const std::string text = to_adjacency_text(lg);
  CHECK(text.rfind("# msf-loopgraph v1\n", 0) == 0);
  CHECK(text.find("5: 4 6 | bad type2 | 1 1") != std::string::npos);
  CHECK(parse_adjacency_text(text) == lg);
  const std::string dot = to_dot(lg);
  CHECK(dot.find("color=blue") != std::string::npos);
  CHECK(dot.find("\"blue:red\"") != std::string::npos);
  CHECK(dot.find("\"black:red\"") != std::string::npos);
  CHECK(dot.find("v5 -- v5") != std::string::npos);
  try {
    parse_adjacency_text("1: 2 | - | 1\n2: 1 | x | 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 20);
  }
  CHECK_THROWS_AS(parse_adjacency_text("1: 2 | - | 1\n"), ParseError);
  CHECK_THROWS_AS(parse_adjacency_text("1: 2 | - | 1\n2: 1 | - | 2\n"), ParseError);
}
