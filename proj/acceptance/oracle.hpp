#pragma once

// Brute-force reference implementations used by the tests and the acceptance
// runner. Nothing here calls into the library's search or counting code.

#include <cstdint>
#include <vector>

namespace msf::oracle {

/// Z_{m_1} x ... x Z_{m_r} with the same little-endian indexing as GroupSpec.
class Group {
 public:
  explicit Group(std::vector<std::uint32_t> orders);

  std::uint32_t order() const { return n_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return table_[a * n_ + b]; }
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

 private:
  std::vector<std::uint32_t> decode(std::uint32_t x) const;
  std::uint32_t encode(const std::vector<std::uint32_t>& c) const;

  std::vector<std::uint32_t> orders_;
  std::uint32_t n_;
  std::vector<std::uint32_t> table_;
};

bool sumfree(const Group& g, std::uint64_t set);
bool distinct_sumfree(const Group& g, std::uint64_t set);

/// All subsets passing the predicate and not extendable by one element, by a
/// scan over all 2^n subsets in ascending mask order.
std::vector<std::uint64_t> maximal_sumfree_scan(const Group& g);
std::vector<std::uint64_t> maximal_distinct_sumfree_scan(const Group& g);

struct Census {
  std::uint64_t f = 0;
  std::uint64_t f_star = 0;
  std::uint64_t mu = 0;
  std::uint64_t mu_star = 0;
};

/// Full 2^n scan; n <= 24.
Census census(const Group& g);

/// Largest sum-free set size from the type rule, computed with integers.
std::uint64_t mu_by_type(const std::vector<std::uint32_t>& orders);

/// A graph with optional loops as dense matrices.
struct Graph {
  std::uint32_t n = 0;
  std::vector<std::vector<bool>> adj;
  std::vector<bool> loop;

  explicit Graph(std::uint32_t vertices = 0)
      : n(vertices), adj(vertices, std::vector<bool>(vertices, false)), loop(vertices, false) {}
  void edge(std::uint32_t u, std::uint32_t v) { adj[u][v] = adj[v][u] = true; }
};

/// Counts subsets I with no internal edge and no looped vertex such that
/// every non-looped vertex outside I has a neighbour in I; n <= 24.
std::uint64_t mis_scan(const Graph& g);

/// Link graph straight from the Schur-triple definition: edge {x,y} when
/// some s in S makes {x,y,s} a Schur triple (in any arrangement), loop at x
/// when {x,x,s} or {x,s,s'} is a Schur triple. Vertices are the members of
/// B in ascending order.
Graph link_graph(const Group& g, std::uint64_t S, std::uint64_t B);

/// Number of complete caps of PG(k,2): sets of non-zero vectors of F_2^{k+1}
/// with no three distinct summing to zero, maximal for that property.
std::uint64_t complete_caps_scan(unsigned k);

}  // namespace msf::oracle
