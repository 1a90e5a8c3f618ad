#include "msf/mis.hpp"

#include "msf/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

namespace msf {

LoopGraph reduce_loops(const LoopGraph& g) {
  std::vector<std::uint32_t> keep;
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    if (g.loop(v) == 0) keep.push_back(v);
  }
  return g.induced(keep);
}

namespace {

/// A loop-free component as bit masks over local ids.
struct Local {
  std::vector<std::uint32_t> ids;     // input-graph ids, ascending
  std::vector<std::uint64_t> closed;  // closed neighbourhoods
};

/// Loop-free components of g, local ids ascending in input ids.
std::vector<Local> split(const LoopGraph& g) {
  std::vector<std::uint32_t> keep;
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    if (g.loop(v) == 0) keep.push_back(v);
  }
  const LoopGraph reduced = g.induced(keep);
  std::vector<Local> out;
  for (const auto& comp : component_vertices(reduced)) {
    if (comp.size() > kMisComponentLimit) {
      throw BudgetExceeded("a loop-free component has " + std::to_string(comp.size()) +
                               " vertices; the limit is " + std::to_string(kMisComponentLimit),
                           0, 0);
    }
    Local local;
    std::map<std::uint32_t, std::uint32_t> pos;
    for (std::uint32_t i = 0; i < comp.size(); ++i) {
      pos[comp[i]] = i;
      local.ids.push_back(keep[comp[i]]);
    }
    for (std::uint32_t i = 0; i < comp.size(); ++i) {
      std::uint64_t m = 1ULL << i;
      for (const auto& [w, mask] : reduced.neighbours(comp[i])) m |= 1ULL << pos.at(w);
      local.closed.push_back(m);
    }
    out.push_back(std::move(local));
  }
  return out;
}

std::uint64_t pivot_branches(const Local& c, std::uint64_t P, std::uint64_t X) {
  std::uint64_t candidates = P | X;
  std::uint64_t best = P;
  int best_size = 65;
  while (candidates != 0) {
    const int u = std::countr_zero(candidates);
    candidates &= candidates - 1;
    const std::uint64_t branch = P & c.closed[u];
    const int size = std::popcount(branch);
    if (size < best_size) {
      best_size = size;
      best = branch;
      if (size <= 1) break;
    }
  }
  return best;
}

std::uint64_t count_local(const Local& c, std::uint64_t P, std::uint64_t X) {
  if (P == 0) return X == 0 ? 1 : 0;
  std::uint64_t branches = pivot_branches(c, P, X);
  std::uint64_t total = 0;
  while (branches != 0) {
    const int v = std::countr_zero(branches);
    branches &= branches - 1;
    total += count_local(c, P & ~c.closed[v], X & ~c.closed[v]);
    P &= ~(1ULL << v);
    X |= 1ULL << v;
  }
  return total;
}

template <class Emit>
void list_local(const Local& c, std::uint64_t R, std::uint64_t P, std::uint64_t X, Emit& emit) {
  if (P == 0) {
    if (X == 0) emit(R);
    return;
  }
  std::uint64_t branches = pivot_branches(c, P, X);
  while (branches != 0) {
    const int v = std::countr_zero(branches);
    branches &= branches - 1;
    list_local(c, R | (1ULL << v), P & ~c.closed[v], X & ~c.closed[v], emit);
    P &= ~(1ULL << v);
    X |= 1ULL << v;
  }
}

std::uint64_t full_mask(std::size_t n) { return n == 64 ? ~0ULL : (1ULL << n) - 1; }

bool canonical_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t d = a ^ b;
  if (d == 0) return false;
  return (a & d & (~d + 1)) != 0;
}

}  // namespace

MisCount count_mis(const LoopGraph& g) {
  MisCount result{fingerprint(g), 1, {}};
  for (const auto& comp : component_vertices(g)) {
    const LoopGraph sub = g.induced(comp);
    BigInt c = 1;
    for (const Local& local : split(sub)) c *= count_local(local, full_mask(local.ids.size()), 0);
    result.count *= c;

    const std::string label = catalog_label(sub);
    auto it = std::find_if(result.components.begin(), result.components.end(),
                           [&](const ComponentCount& cc) { return cc.label == label && cc.count == c; });
    if (it == result.components.end()) result.components.push_back({label, c, 1});
    else ++it->multiplicity;
  }
  return result;
}

BigInt mis(const LoopGraph& g) {
  BigInt total = 1;
  for (const Local& local : split(g)) total *= count_local(local, full_mask(local.ids.size()), 0);
  return total;
}

void enumerate_mis(const LoopGraph& g, const MisVisitor& visit, const MisOptions& options) {
  const std::vector<Local> parts = split(g);
  std::vector<std::vector<std::uint64_t>> lists;
  for (const Local& local : parts) {
    std::vector<std::uint64_t> sets;
    auto emit = [&](std::uint64_t R) {
      if (sets.size() >= options.max_sets) {
        throw BudgetExceeded("maximal independent set budget of " + std::to_string(options.max_sets) +
                                 " exhausted",
                             0, 0);
      }
      sets.push_back(R);
    };
    list_local(local, 0, full_mask(local.ids.size()), 0, emit);
    std::sort(sets.begin(), sets.end(), canonical_less);
    lists.push_back(std::move(sets));
  }

  std::vector<std::size_t> odometer(lists.size(), 0);
  std::uint64_t emitted = 0;
  while (true) {
    if (emitted >= options.max_sets) {
      throw BudgetExceeded("maximal independent set budget of " + std::to_string(options.max_sets) +
                               " exhausted",
                           0, emitted);
    }
    std::vector<std::uint32_t> out;
    for (std::size_t c = 0; c < lists.size(); ++c) {
      std::uint64_t m = lists[c][odometer[c]];
      while (m != 0) {
        out.push_back(parts[c].ids[std::countr_zero(m)]);
        m &= m - 1;
      }
    }
    std::sort(out.begin(), out.end());
    visit(out);
    ++emitted;

    std::size_t c = lists.size();
    while (c > 0) {
      --c;
      if (++odometer[c] < lists[c].size()) break;
      odometer[c] = 0;
      if (c == 0) return;
    }
    if (lists.empty()) return;
  }
}

std::vector<std::vector<std::uint32_t>> all_mis(const LoopGraph& g, const MisOptions& options) {
  std::vector<std::vector<std::uint32_t>> out;
  enumerate_mis(g, [&](const std::vector<std::uint32_t>& s) { out.push_back(s); }, options);
  return out;
}

bool is_maximal_independent(const LoopGraph& g, std::span<const std::uint32_t> vertices) {
  std::vector<bool> in(g.size(), false);
  for (std::uint32_t v : vertices) {
    if (g.loop(v)) return false;
    in.at(v) = true;
  }
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    bool dominated = false;
    for (const auto& [w, mask] : g.neighbours(v)) dominated = dominated || in[w];
    if (in[v] && dominated) return false;
    if (!in[v] && !dominated && g.loop(v) == 0) return false;
  }
  return true;
}

bool is_triangle_free(const LoopGraph& g) {
  const LoopGraph r = reduce_loops(g);
  for (const Edge& e : r.edges()) {
    const auto& a = r.neighbours(e.u);
    const auto& b = r.neighbours(e.v);
    for (const auto& [w, mask] : a) {
      if (w != e.v && b.count(w)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Bounds

Certified bound_moon_moser(std::uint64_t n) {
  return certified_power(1, 3, BigRational(n, 3));
}

Certified bound_hujter_tuza(std::uint64_t n) {
  return certified_power(1, 2, BigRational(n, 2));
}

Certified bound_blst(std::uint64_t n, std::uint64_t k, std::uint64_t min_degree, std::uint64_t max_degree) {
  if (k < 1) throw InvalidArgument("bound_blst needs k >= 1");
  if (min_degree < 1) throw InvalidArgument("bound_blst needs minimum degree >= 1");
  if (max_degree > k * min_degree) throw InvalidArgument("bound_blst needs max degree <= k * min degree");

  BigInt sum = 0;
  const BigInt n2 = BigInt(n) * n;
  for (std::uint64_t i = 0; i <= n && BigInt(i) * i * min_degree <= n2; ++i) sum += binomial(n, i);

  const BigRational first(BigInt(k) * n, BigInt(3) * (k + 1));
  const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(min_degree)));
  for (std::uint64_t r = root > 0 ? root - 1 : 0; r <= root + 1; ++r) {
    if (r * r == min_degree) return certified_power(BigRational(sum), 3, first + BigRational(2 * n, 3 * r));
  }
  const unsigned prec = kDefaultPrecision;
  const Interval exponent = Interval(first, prec) + Interval(BigRational(2 * n, 3 * min_degree), prec) *
                                                        Interval(BigRational(min_degree), prec).sqrt();
  const Interval value = Interval(BigRational(sum), prec) * (exponent * Interval::log3(prec)).exp();
  return value.certified();
}

Certified bound_ls(std::uint64_t n, std::int64_t k, std::uint64_t max_degree, const BigRational& C) {
  if (max_degree < 1) throw InvalidArgument("bound_ls needs max degree >= 1");
  if (C <= 0 || pow(C, 13) < pow(BigRational(3), static_cast<std::int64_t>(max_degree))) {
    throw InvalidArgument("bound_ls needs C >= 3^(Delta/13)");
  }
  const BigRational exponent = BigRational(n, 3) - BigRational(k, 13 * static_cast<std::int64_t>(max_degree));
  return certified_power(C, 3, exponent);
}

}  // namespace msf
