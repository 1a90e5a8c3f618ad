#include "msf/constructions.hpp"

#include "msf/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace msf {

std::string to_string(Family family) {
  switch (family) {
    case Family::kZ2Type3: return "z2-type3";
    case Family::kZ3Type3: return "z3-type3";
    case Family::kCyclic: return "cyclic-5.1";
    case Family::kType3Coset: return "type3-5.3";
    case Family::kDistinctCoset: return "distinct-6.3";
    case Family::kDistinctEven: return "distinct-6.4";
  }
  return "?";
}

namespace {

ElementSet singleton(std::uint32_t n, std::uint32_t index) {
  ElementSet s(n);
  s.insert(index);
  return s;
}

Certified exact(const BigRational& v) { return {v, v}; }

BigInt pow2(std::uint64_t e) { return pow(BigInt(2), e); }

ConstructionReport blank(Family family, const GroupSpec& group) {
  return ConstructionReport{family, "", group, ElementSet(group.order()), ElementSet(group.order()),
                            false, {}, 0, {}, true, false, std::nullopt, std::nullopt, {}};
}

LoopGraph build_graph(const GroupSpec& group, const ElementSet& B, const ElementSet& S, Variant variant) {
  return variant == Variant::kSumFree ? link_graph(group, S, B) : distinct_link_graph(group, S, B);
}

ElementSet to_set(const LoopGraph& g, const std::vector<std::uint32_t>& ids, std::uint32_t n) {
  ElementSet out(n);
  for (std::uint32_t id : ids) out.insert(static_cast<std::uint32_t>(g.label(id)));
  return out;
}

/// Fills census, exact count and, for exact formulas, the match flag.
void finish(ConstructionReport& r, const LoopGraph& g) {
  r.link = summarize(g);
  r.mis_exact = mis(g);
  if (r.exact_formula) {
    r.match = r.predicted.exact() && BigRational(r.mis_exact) == r.predicted.lower;
  } else {
    r.match = certainly_ge(BigRational(r.mis_exact), r.predicted) == Verdict::kTrue;
  }
}

void check_generation_into(ConstructionReport& r, Variant variant) {
  if (r.mis_exact > kGenerationCheckLimit) return;
  r.generates = check_generation(r.group, r.B, r.S, variant);
  if (!*r.generates) r.match = false;
}

std::string residues_string(const std::vector<std::uint32_t>& rs) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < rs.size(); ++i) out << (i ? "," : "") << rs[i];
  out << "}";
  return out.str();
}

bool summary_is(const ComponentSummary& s, std::map<std::string, std::size_t> expected) {
  std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
  return s.counts == expected;
}

GroupSpec elementary(std::uint32_t p, std::uint32_t k) { return GroupSpec::make(std::vector<std::uint32_t>(k, p)); }

}  // namespace

bool check_generation(const GroupSpec& group, const ElementSet& B, const ElementSet& S, Variant variant,
                      const MisOptions& options) {
  const LoopGraph g = build_graph(group, B, S, variant);
  const auto free = [&](const ElementSet& set) {
    return variant == Variant::kSumFree ? is_sumfree(group, set) : is_distinct_sumfree(group, set);
  };
  bool ok = true;
  enumerate_mis(
      g,
      [&](const std::vector<std::uint32_t>& ids) {
        if (!ok) return;
        const ElementSet I = to_set(g, ids, group.order());
        ElementSet U = I | S;
        if (!free(U)) {
          ok = false;
          return;
        }
        for (std::uint32_t b : (B - I).indices()) {
          U.insert(b);
          const bool extends = free(U);
          U.erase(b);
          if (extends) {
            ok = false;
            return;
          }
        }
      },
      options);
  return ok;
}

std::vector<ElementSet> generated_sets(const GroupSpec& group, const ElementSet& B, const ElementSet& S) {
  const LoopGraph g = link_graph(group, S, B);
  std::vector<ElementSet> out;
  enumerate_mis(g, [&](const std::vector<std::uint32_t>& ids) {
    ElementSet U = to_set(g, ids, group.order()) | S;
    if (is_maximal_sumfree(group, U)) out.push_back(std::move(U));
  });
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Type-3 pairs in Z_2^k and Z_3^k

std::vector<CosetPair> z2_type3_pairs(std::uint32_t k) {
  if (k < 2 || k > kZ2PairGuard) {
    throw InvalidArgument("z2 pairs need 2 <= k <= " + std::to_string(kZ2PairGuard));
  }
  const GroupSpec G = elementary(2, k);
  const auto planes = hyperplanes(G);
  std::vector<CosetPair> out;
  for (std::size_t h = 0; h < planes.size(); ++h) {
    for (std::uint32_t s : planes[h].subgroup.indices()) {
      if (s != 0) out.push_back({h, 1, planes[h].cosets[0], s, true});
    }
  }
  return out;
}

BigInt z2_generated_count(std::uint32_t k) {
  const GroupSpec G = elementary(2, k);
  std::set<ElementSet> all;
  for (const CosetPair& p : z2_type3_pairs(k)) {
    for (ElementSet& A : generated_sets(G, p.B, singleton(G.order(), p.s))) all.insert(std::move(A));
  }
  return all.size();
}

std::vector<CosetPair> z3_type3_pairs(std::uint32_t k, bool subgroup_only) {
  if (k < 1 || k > kZ3PairGuard) {
    throw InvalidArgument("z3 pairs need 1 <= k <= " + std::to_string(kZ3PairGuard));
  }
  const GroupSpec G = elementary(3, k);
  const auto planes = hyperplanes(G);
  std::vector<CosetPair> out;
  for (std::size_t h = 0; h < planes.size(); ++h) {
    for (std::uint32_t c = 1; c <= 2; ++c) {
      const ElementSet& B = planes[h].cosets[c - 1];
      for (std::uint32_t s : planes[h].subgroup.indices()) {
        if (s != 0) out.push_back({h, c, B, s, true});
      }
      if (subgroup_only) continue;
      const std::uint32_t twice = (2 * c) % 3;
      for (std::uint32_t s : planes[h].cosets[twice - 1].indices()) out.push_back({h, c, B, s, false});
    }
  }
  return out;
}

ConstructionReport z3_pair_report(const GroupSpec& group, const CosetPair& pair) {
  ConstructionReport r = blank(Family::kZ3Type3, group);
  r.B = pair.B;
  r.S = singleton(group.order(), pair.s);
  const LoopGraph g = link_graph(group, r.S, r.B);
  const std::size_t b = r.B.count();
  std::map<std::string, std::size_t> shape;
  if (pair.s_in_subgroup) {
    r.case_label = "s in H";
    r.predicted = exact(BigRational(pow(BigInt(3), b / 3)));
    shape = {{"triangle", b / 3}};
  } else {
    r.case_label = "s in 2g+H";
    r.predicted = exact(BigRational(pow2((b - 1) / 2)));
    shape = {{"looped-vertex", 1}, {"matching-edge", (b - 1) / 2}};
  }
  finish(r, g);
  if (!summary_is(r.link, shape)) {
    throw VerificationFailure("z3 pair (" + r.B.to_string() + ", {" + std::to_string(pair.s) +
                              "}) has an unexpected link graph");
  }
  return r;
}

BigInt z3_generated_count(std::uint32_t k) {
  const GroupSpec G = elementary(3, k);
  std::set<ElementSet> all;
  for (const CosetPair& p : z3_type3_pairs(k)) {
    z3_pair_report(G, p);
    for (ElementSet& A : generated_sets(G, p.B, singleton(G.order(), p.s))) all.insert(std::move(A));
  }
  return all.size();
}

namespace {

OvercountResult overcount(const GroupSpec& G, const std::vector<CosetPair>& pairs, std::size_t bound) {
  std::vector<std::vector<ElementSet>> gen;
  for (const CosetPair& p : pairs) gen.push_back(generated_sets(G, p.B, singleton(G.order(), p.s)));
  OvercountResult r;
  r.pairs = pairs.size();
  r.bound = bound;
  std::vector<ElementSet> shared;
  for (std::size_t i = 0; i < gen.size(); ++i) {
    for (std::size_t j = i + 1; j < gen.size(); ++j) {
      shared.clear();
      std::set_intersection(gen[i].begin(), gen[i].end(), gen[j].begin(), gen[j].end(),
                            std::back_inserter(shared));
      r.max_shared = std::max(r.max_shared, shared.size());
      ++r.pair_pairs;
    }
  }
  r.holds = r.max_shared <= r.bound;
  return r;
}

}  // namespace

OvercountResult overcount_z2(std::uint32_t k) {
  if (k < 2 || k > 4) throw InvalidArgument("overcount_z2 needs 2 <= k <= 4");
  const GroupSpec G = elementary(2, k);
  return overcount(G, z2_type3_pairs(k), G.order() / 4);
}

OvercountResult overcount_z3(std::uint32_t k) {
  if (k < 1 || k > 2) throw InvalidArgument("overcount_z3 needs 1 <= k <= 2");
  const GroupSpec G = elementary(3, k);
  return overcount(G, z3_type3_pairs(k, true), G.order() / 9);
}

// ---------------------------------------------------------------------------
// Cyclic groups and their products

Certified product_bound(std::uint32_t m, std::uint64_t k_order) {
  const BigRational coeff = pow(BigRational(2, 3), static_cast<std::int64_t>(1 + k_order));
  const BigRational exponent(BigInt(m - 8) * k_order, 18);
  return certified_power(coeff, 6, exponent);
}

namespace {

bool meets_product_bound(const BigInt& value, std::uint32_t m, std::uint64_t k_order) {
  const BigRational coeff = pow(BigRational(2, 3), static_cast<std::int64_t>(1 + k_order));
  const BigRational exponent(BigInt(m - 8) * k_order, 18);
  return compare_power(BigRational(value), coeff, 6, exponent) != std::strong_ordering::less;
}

}  // namespace

CyclicConstruction cyclic_construction(std::uint32_t m) {
  if (m < 9) throw InvalidArgument("cyclic_construction needs m >= 9");
  const GroupSpec G = GroupSpec::make({m});
  CyclicConstruction c{m, m / 9, m % 9, "", blank(Family::kCyclic, G), {}, {}, {}, 0, 0, 0, std::nullopt, true};
  const std::uint32_t k = c.k;
  const std::uint32_t i = c.i;

  ConstructionReport& r = c.report;
  for (std::uint32_t x = 3 * k + 1; x <= 6 * k; ++x) r.B.insert(x);
  r.S.insert(k);
  r.S.insert(m - 2 * k);

  c.gamma = link_graph(G, r.S, r.B);
  c.gamma_prime = gamma_prime(c.gamma);
  c.rtimes = rtimes(gamma1(c.gamma), gamma2(c.gamma));
  c.mis_gamma = mis(c.gamma);
  c.mis_prime = mis(c.gamma_prime);
  c.mis_rtimes = mis(c.rtimes);

  const auto parity = [](std::int64_t v) { return v % 2 == 0 ? "even" : "odd"; };
  const BigInt six_k = pow(BigInt(6), k);
  if (i == 0) {
    c.case_label = std::string("i=0, k ") + parity(k);
    if (k % 2 == 0) {
      const BigInt base = pow(BigInt(6), k / 2 - 1);
      c.closed_form = std::array<BigInt, 3>{2 * base, 4 * base, six_k};
    } else {
      const BigInt base = pow(BigInt(6), (k - 1) / 2);
      c.closed_form = std::array<BigInt, 3>{base, 2 * base, six_k};
    }
  } else {
    const std::int64_t a = static_cast<std::int64_t>(i) - 1;
    const std::int64_t b = static_cast<std::int64_t>(k) - i + 1;
    c.case_label = std::string("i-1 ") + parity(a) + ", k-i+1 " + parity(b);
    if (a % 2 != 0 && b % 2 != 0 && k >= 4) {
      c.closed_form = std::array<BigInt, 3>{pow(BigInt(6), k / 2 - 2) * 16, pow(BigInt(6), k / 2 - 1) * 4, six_k};
    }
  }
  r.case_label = c.case_label;

  if (c.closed_form) {
    r.predicted = exact(BigRational((*c.closed_form)[0]));
    r.exact_formula = true;
    c.match = (*c.closed_form)[0] == c.mis_gamma && (*c.closed_form)[1] == c.mis_prime &&
              (*c.closed_form)[2] == c.mis_rtimes;
  } else {
    r.predicted = product_bound(m, 1);
    r.exact_formula = false;
    r.notes.push_back("no closed form for this case; compared with the product bound");
  }
  finish(r, c.gamma);
  if (!r.exact_formula) r.match = meets_product_bound(r.mis_exact, m, 1);
  check_generation_into(r, Variant::kSumFree);
  c.match = c.match && r.match;
  return c;
}

ProductLowerBound product_lower_bound(std::uint32_t m, const std::optional<GroupSpec>& K) {
  const std::uint64_t k_order = K ? K->order() : 1;
  ProductLowerBound out;
  out.bound = product_bound(m, k_order);
  CyclicConstruction c = cyclic_construction(m);
  if (!K) {
    ConstructionReport w = c.report;
    w.predicted = out.bound;
    w.exact_formula = false;
    w.match = meets_product_bound(w.mis_exact, m, 1);
    out.witness = std::move(w);
    out.product_formula = c.mis_gamma;
    return out;
  }
  try {
    const LiftResult lift = lift_tilde(c.report.group, *K, c.report.B, c.report.S);
    ConstructionReport w = blank(Family::kCyclic, lift.group);
    w.case_label = c.case_label + ", lifted over " + K->to_string();
    w.B = lift.B;
    w.S = lift.S;
    w.predicted = out.bound;
    w.exact_formula = false;
    finish(w, lift.graph);
    w.match = meets_product_bound(w.mis_exact, m, k_order);
    check_generation_into(w, Variant::kSumFree);
    out.product_formula = c.mis_gamma * pow(c.mis_prime, lift.a - 1) *
                          pow(c.mis_rtimes, (K->order() - lift.a) / 2);
    if (*out.product_formula != w.mis_exact) {
      w.match = false;
      w.notes.push_back("direct count differs from the block product " + to_decimal(*out.product_formula));
    }
    out.witness = std::move(w);
  } catch (const BudgetExceeded& e) {
    out.witness_omitted = true;
    out.omitted_reason = e.what();
  } catch (const InvalidArgument& e) {
    out.witness_omitted = true;
    out.omitted_reason = e.what();
  }
  return out;
}

Prop34Result verify_prop34(std::uint64_t m, std::uint64_t n) {
  if (m < 9 || n < m || n % m != 0) throw InvalidArgument("verify_prop34 needs n >= m >= 9 and m | n");
  const BigRational ratio{BigInt(n), BigInt(m)};
  const BigRational e = BigRational(BigInt(m - 8) * n, BigInt(18) * m);
  const BigRational a = 1 + ratio + e - BigRational(BigInt(n), 7);
  const BigRational c = e - 1 - ratio;
  Prop34Result r;
  if (a == 0 && c == 0) {
    r.holds = true;
    r.margin = exact(0);
    return r;
  }
  for (unsigned prec = kDefaultPrecision; prec <= (1U << 16); prec *= 2) {
    const Interval d = Interval(a, prec) * Interval::log2(prec) + Interval(c, prec) * Interval::log3(prec);
    r.margin = d.certified();
    r.precision = prec;
    if (d.sign() != 0) {
      r.holds = d.sign() > 0;
      return r;
    }
  }
  // a ln 2 + c ln 3 vanishes only when a = c = 0, so this is unreachable in practice.
  throw VerificationFailure("verify_prop34 undecided at maximum precision");
}

// ---------------------------------------------------------------------------
// Type III groups, m in {7, 13, 19}

namespace {

inline constexpr std::uint32_t kDeskOrder = 64;

ElementSet loops_of(const LoopGraph& g, std::uint32_t n) {
  ElementSet out(n);
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    if (g.loop(v)) out.insert(static_cast<std::uint32_t>(g.label(v)));
  }
  return out;
}

bool is_matching_after_loops(const LoopGraph& g) {
  const LoopGraph r = reduce_loops(g);
  for (std::uint32_t v = 0; v < r.size(); ++v) {
    if (r.neighbours(v).size() > 1) return false;
  }
  return true;
}

bool residues_sumfree(const std::vector<std::uint32_t>& rs, std::uint32_t q) {
  for (std::uint32_t a : rs) {
    for (std::uint32_t b : rs) {
      if (std::find(rs.begin(), rs.end(), (a + b) % q) != rs.end()) return false;
    }
  }
  return true;
}

}  // namespace

ConstructionReport type3_construction(std::uint32_t m, const std::optional<GroupSpec>& K) {
  if (m != 7 && m != 13 && m != 19) throw InvalidArgument("type3_construction needs m in {7, 13, 19}");
  const GroupSpec G = K ? GroupSpec::product(GroupSpec::make({m}), *K) : GroupSpec::make({m});
  if (G.order() > kDeskOrder) throw InvalidArgument("type3_construction needs n <= 64");
  if (classify(G).kind != GroupType::Kind::kTypeIII) {
    throw InvalidArgument(G.to_string() + " is not of type III");
  }
  const std::uint32_t n = G.order();
  const CyclicQuotient cq(G, m);
  ConstructionReport r = blank(Family::kType3Coset, G);

  if (m == 7) {
    // Best coset-level pair (T, {x}) by exhaustive search over residues.
    std::vector<std::uint32_t> best_t;
    std::uint32_t best_x = 0;
    BigInt best = -1;
    for (std::uint32_t mask = 1; mask < (1U << 6); ++mask) {
      std::vector<std::uint32_t> t;
      for (std::uint32_t j = 0; j < 6; ++j) {
        if (mask & (1U << j)) t.push_back(j + 1);
      }
      if (!residues_sumfree(t, m)) continue;
      const ElementSet T = cq.fibers(t);
      for (std::uint32_t x = 1; x < m; ++x) {
        if (std::find(t.begin(), t.end(), x) != t.end()) continue;
        const ElementSet S = singleton(n, cq.representative(x).index);
        const BigInt v = mis(link_graph(G, S, T));
        if (v > best || (v == best && std::tie(t, x) < std::tie(best_t, best_x))) {
          best = v;
          best_t = t;
          best_x = x;
        }
      }
    }
    r.B = cq.fibers(best_t);
    r.S = singleton(n, cq.representative(best_x).index);
    r.case_label = "m=7 search: T residues " + residues_string(best_t) + ", x residue " + std::to_string(best_x);
    r.predicted = exact(BigRational(pow2(n / 7 - 1)));
    r.exact_formula = false;
    const LoopGraph g = link_graph(G, r.S, r.B);
    finish(r, g);
    r.match = r.mis_exact >= pow2(n / 7 - 1);
    check_generation_into(r, Variant::kSumFree);
    return r;
  }

  const std::vector<std::uint32_t> t = m == 13 ? std::vector<std::uint32_t>{1, 4, 6, 9}
                                               : std::vector<std::uint32_t>{1, 3, 12, 14, 16, 18};
  const std::uint32_t xr = m == 13 ? 3 : 6;
  const Element x = cq.representative(xr);
  r.B = cq.fibers(t);
  r.S = singleton(n, x.index);
  r.case_label = "m=" + std::to_string(m) + ": T residues " + residues_string(t) + ", x residue " +
                 std::to_string(xr);
  r.predicted = exact(BigRational(m == 13 ? pow2(2 * n / 13 - 1) : pow2(3 * n / 19 - 2)));
  const LoopGraph g = link_graph(G, r.S, r.B);
  finish(r, g);

  ElementSet expected_loops(n);
  expected_loops.insert(G.add(x, x));
  for (std::uint32_t y : r.B.indices()) {
    if (G.add(Element{y}, Element{y}) == x) expected_loops.insert(y);
  }
  if (loops_of(g, n) != expected_loops) {
    r.match = false;
    r.notes.push_back("loops differ from {2x} and the halves of x");
  }
  if (!is_matching_after_loops(g)) {
    r.match = false;
    r.notes.push_back("loop-free part is not a matching");
  }
  check_generation_into(r, Variant::kSumFree);
  return r;
}

// ---------------------------------------------------------------------------
// Maximal distinct-sum-free sets

namespace {

inline constexpr std::uint32_t kExhaustiveDistinctOrder = 24;

std::vector<std::uint32_t> residues_from(std::uint32_t start, std::uint32_t step, std::uint32_t last) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t r = start; r <= last; r += step) out.push_back(r);
  return out;
}

void distinct_exhaustive(ConstructionReport& r) {
  if (r.group.order() > kExhaustiveDistinctOrder) return;
  r.exhaustive = count_fstar_max(r.group).value;
  if (*r.exhaustive < r.mis_exact) {
    r.match = false;
    r.notes.push_back("exhaustive count is below the construction");
  }
}

ConstructionReport distinct_from_cosets(Family family, const GroupSpec& G, const std::string& label,
                                        std::uint32_t q, const std::vector<std::uint32_t>& residues,
                                        std::optional<std::uint32_t> x_residue, const BigInt& predicted,
                                        const std::map<std::string, std::size_t>& shape) {
  const CyclicQuotient cq(G, q);
  ConstructionReport r = blank(family, G);
  r.case_label = label;
  r.distinct = true;
  r.B = cq.fibers(residues);
  r.S = singleton(G.order(), x_residue ? cq.representative(*x_residue).index : 0);
  r.predicted = exact(BigRational(predicted));
  const LoopGraph g = distinct_link_graph(G, r.S, r.B);
  finish(r, g);
  if (!summary_is(r.link, shape)) {
    r.match = false;
    r.notes.push_back("link graph shape differs from the construction");
  }
  check_generation_into(r, Variant::kDistinct);
  distinct_exhaustive(r);
  return r;
}

}  // namespace

ConstructionReport distinct_construction_63(const GroupSpec& G) {
  const std::uint32_t n = G.order();
  if (n > kDeskOrder) throw InvalidArgument("distinct constructions need n <= 64");
  const std::uint64_t mu = mu_formula(G);

  if (n % 2 == 1) {
    const GroupType type = classify(G);
    if (type.kind == GroupType::Kind::kTypeI) {
      const std::uint32_t p = type.p;
      return distinct_from_cosets(Family::kDistinctCoset, G, "odd type I(" + std::to_string(p) + ")", p,
                                  residues_from(1, 3, p - 1), std::nullopt, pow2(mu / 2),
                                  {{"matching-edge", mu / 2}});
    }
    if (type.kind == GroupType::Kind::kTypeII) {
      return distinct_from_cosets(Family::kDistinctCoset, G, "type II", 3, {1}, 2, pow2((mu - 1) / 2),
                                  {{"isolated", 1}, {"matching-edge", (mu - 1) / 2}});
    }
    const std::uint32_t q = G.exponent();
    return distinct_from_cosets(Family::kDistinctCoset, G, "type III", q, residues_from(2, 3, q - 2),
                                std::nullopt, pow2(mu / 2), {{"matching-edge", mu / 2}});
  }
  if (G.exponent() % 4 == 0) {
    return distinct_from_cosets(Family::kDistinctCoset, G, "Z_{2^a} x K, a >= 2", 4, {1, 3}, std::nullopt,
                                pow2(mu / 2), {{"matching-edge", mu / 2}});
  }
  if (G.exponent() == 2) {
    if (n > 32) throw InvalidArgument("Z_2^k bijection route needs n <= 32");
    ConstructionReport r = blank(Family::kDistinctCoset, G);
    r.case_label = "Z_2^k bijection";
    r.distinct = true;
    const auto plain = maximal_sumfree_sets(G);
    const auto star = maximal_distinct_sumfree_sets(G);
    std::vector<ElementSet> image;
    for (const ElementSet& A : plain) {
      ElementSet B = A;
      B.insert(0);
      image.push_back(std::move(B));
    }
    std::sort(image.begin(), image.end());
    r.mis_exact = star.size();
    r.exhaustive = r.mis_exact;
    r.predicted = exact(BigRational(BigInt(plain.size())));
    r.match = image == star;
    r.notes.push_back("A -> A u {0} maps the maximal sum-free sets onto the maximal distinct-sum-free sets");
    return r;
  }
  throw InvalidArgument("case Z_2^k x K with |K| odd: " + G.to_string() + " needs distinct_construction_64");
}

ConstructionReport distinct_construction_64(const GroupSpec& G) {
  const std::uint32_t n = G.order();
  if (n > kDeskOrder) throw InvalidArgument("distinct constructions need n <= 64");
  std::uint32_t two_part = 1;
  while (n % (2 * two_part) == 0) two_part *= 2;
  if (two_part == 1 || two_part == n || G.exponent() % 4 == 0) {
    throw InvalidArgument("case Z_2^k x K with |K| odd >= 3: " + G.to_string() + " does not have that shape");
  }
  std::uint32_t q = 3;
  while (n % q != 0) q += 2;
  const std::uint32_t a = two_part / 2;
  const BigInt predicted = pow2((n / 2 - a) / 2);
  return distinct_from_cosets(Family::kDistinctEven, G,
                              "Z_2^k x K, m = " + std::to_string(2 * q) + ", a = " + std::to_string(a), 2 * q,
                              residues_from(1, 2, 2 * q - 1), std::nullopt, predicted,
                              {{"isolated", a}, {"matching-edge", (n / 2 - a) / 2}});
}

Certified leading_term(const GroupSpec& G) {
  const auto& o = G.orders();
  const std::uint64_t n = G.order();
  if (std::all_of(o.begin(), o.end(), [](std::uint32_t m) { return m == 2; })) {
    if (n == 2) return exact(0);
    return certified_power(BigRational(binomial(n - 1, 2)), 2, BigRational(n, 4));
  }
  if (std::all_of(o.begin(), o.end(), [](std::uint32_t m) { return m == 3; })) {
    if (n == 3) return exact(0);
    return certified_power(BigRational(BigInt(n - 3) * (n - 1), 3), 3, BigRational(n, 9));
  }
  throw InvalidArgument("leading_term is defined for Z_2^k and Z_3^k only");
}

}  // namespace msf
