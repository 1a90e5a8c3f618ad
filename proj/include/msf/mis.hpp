#pragma once

// Maximal independent sets of graphs with loops.
//
// A looped vertex never joins an independent set and need not be dominated,
// so loops are handled by deleting the looped vertices. Each remaining
// component is counted by Bron-Kerbosch with pivoting on the complement and
// the per-component counts are multiplied.

#include "msf/loopgraph.hpp"
#include "msf/numeric.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace msf {

inline constexpr std::size_t kMisComponentLimit = 64;

/// Deletes every looped vertex with its edges; survivors keep their order.
LoopGraph reduce_loops(const LoopGraph& g);

struct ComponentCount {
  std::string label;
  BigInt count;            ///< mis of one such component
  std::size_t multiplicity = 0;

  friend bool operator==(const ComponentCount&, const ComponentCount&) = default;
};

struct MisCount {
  std::string fingerprint;
  BigInt count;
  /// Components of the input graph grouped by (label, count), in order of
  /// first appearance.
  std::vector<ComponentCount> components;
};

/// Throws BudgetExceeded if a loop-free component exceeds 64 vertices.
MisCount count_mis(const LoopGraph& g);

/// mis(g) only.
BigInt mis(const LoopGraph& g);

struct MisOptions {
  std::uint64_t max_sets = 100'000'000;
};

/// Vertex ids of an independent set, ascending.
using MisVisitor = std::function<void(const std::vector<std::uint32_t>&)>;

/// Emits every maximal independent set once: a Cartesian product over the
/// components of the loop-reduced graph (ordered by smallest vertex, the
/// first component varying slowest), each component's sets in canonical
/// order. Ids refer to the input graph.
void enumerate_mis(const LoopGraph& g, const MisVisitor& visit, const MisOptions& options = {});
std::vector<std::vector<std::uint32_t>> all_mis(const LoopGraph& g, const MisOptions& options = {});

/// 3^{n/3}.
Certified bound_moon_moser(std::uint64_t n);
/// 2^{n/2}.
Certified bound_hujter_tuza(std::uint64_t n);
/// sum_{0 <= i <= n/b} C(n,i) * 3^{(k/(k+1)) n/3 + 2n/(3b)}, b = sqrt(delta);
/// needs k >= 1, delta >= 1 and max_degree <= k * delta.
Certified bound_blst(std::uint64_t n, std::uint64_t k, std::uint64_t min_degree, std::uint64_t max_degree);
/// C * 3^{n/3 - k/(13 Delta)}; needs Delta >= 1 and C >= 3^{Delta/13}.
Certified bound_ls(std::uint64_t n, std::int64_t k, std::uint64_t max_degree, const BigRational& C);

/// No looped member, no edge inside, and every unlooped vertex outside has a
/// neighbour inside.
bool is_maximal_independent(const LoopGraph& g, std::span<const std::uint32_t> vertices);

/// True if the loop-reduced graph has no triangle.
bool is_triangle_free(const LoopGraph& g);

}  // namespace msf
