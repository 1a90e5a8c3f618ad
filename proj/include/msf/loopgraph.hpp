#pragma once

// Graphs whose edges carry type tags and whose vertices may carry loops,
// and the link graphs built from pairs (B, S) of group subsets.
//
// Vertices are dense ids 0..size()-1, each with a 64-bit label (the group
// element index for link graphs). An edge joins two distinct vertices and
// stores a non-empty mask of EdgeType bits; a loop is a separate non-empty
// mask of LoopKind bits.

#include "msf/group.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace msf {

enum EdgeType : std::uint8_t { kType1 = 1, kType2 = 2 };
enum LoopKind : std::uint8_t { kBadLoop = 1, kType2Loop = 2 };

struct Edge {
  std::uint32_t u;
  std::uint32_t v;
  std::uint8_t mask;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class LoopGraph {
 public:
  LoopGraph() = default;
  explicit LoopGraph(std::vector<std::uint64_t> labels);
  /// Vertices labelled 0..n-1.
  static LoopGraph unlabeled(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  std::uint64_t label(std::uint32_t v) const { return labels_.at(v); }
  const std::vector<std::uint64_t>& labels() const noexcept { return labels_; }
  std::optional<std::uint32_t> find(std::uint64_t label) const;

  /// ORs `mask` into the edge {u, v}; u == v is rejected (use add_loop).
  void add_edge(std::uint32_t u, std::uint32_t v, std::uint8_t mask);
  void add_loop(std::uint32_t v, std::uint8_t kind);
  void clear_loop_bits(std::uint32_t v, std::uint8_t kind);

  std::uint8_t edge(std::uint32_t u, std::uint32_t v) const;
  std::uint8_t loop(std::uint32_t v) const { return loops_.at(v); }
  const std::map<std::uint32_t, std::uint8_t>& neighbours(std::uint32_t v) const { return adj_.at(v); }

  /// Non-loop edges at v, plus two for a loop.
  std::size_t degree(std::uint32_t v) const;
  /// Edges at v whose mask contains `type`, plus two for a type-2 loop when type = kType2.
  std::size_t typed_degree(std::uint32_t v, EdgeType type) const;

  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t loop_count() const;
  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Subgraph on `vertices`, which become 0..k-1 in the order given.
  LoopGraph induced(std::span<const std::uint32_t> vertices) const;

  /// Equality of edge masks and loops by vertex position; labels ignored.
  bool same_structure(const LoopGraph& other) const;

  friend bool operator==(const LoopGraph& a, const LoopGraph& b) {
    return a.labels_ == b.labels_ && a.same_structure(b);
  }

 private:
  std::vector<std::uint64_t> labels_;
  std::vector<std::map<std::uint32_t, std::uint8_t>> adj_;
  std::vector<std::uint8_t> loops_;
  std::size_t edge_count_ = 0;
};

using WarningSink = std::function<void(const std::string&)>;

/// L_S[B]: vertex set B (ascending index), edge {x,y} when {x,y,s} is a Schur
/// triple for some s in S, tagged type 1 when x - y is in S or -S and type 2
/// when x + y is in S. Type-2 loop at x when 2x is in S; bad loop when
/// x = s + s' or x = s' - s for s, s' in S. Throws if S is not sum-free.
LoopGraph link_graph(const GroupSpec& group, const ElementSet& S, const ElementSet& B,
                     const WarningSink& warn = {});

/// L*_S[B]: only distinct Schur triples count; loops come from distinct
/// s, s' in S and are tagged bad. Throws if S is not distinct-sum-free.
LoopGraph distinct_link_graph(const GroupSpec& group, const ElementSet& S, const ElementSet& B,
                              const WarningSink& warn = {});

/// Type-1 edges only (tag type 1), no loops.
LoopGraph gamma1(const LoopGraph& g);
/// Type-2 edges (tag type 2) and type-2 loops.
LoopGraph gamma2(const LoopGraph& g);
/// Drops the bad bit of every loop.
LoopGraph gamma_prime(const LoopGraph& g);

/// Vertex (x, i) has id i*|V| + x and label 2*label(x) + i. Copy edges are
/// tagged type 1; each edge {x,y} of g2 gives (x,0)-(y,1) and (y,0)-(x,1),
/// and a type-2 loop at x gives (x,0)-(x,1), tagged type 2. Loops of g1 are
/// ignored.
LoopGraph rtimes(const LoopGraph& g1, const LoopGraph& g2);

struct LiftResult {
  GroupSpec group;  ///< H x K
  ElementSet B;     ///< B x K
  ElementSet S;     ///< S x {0}
  LoopGraph graph;  ///< L_S[B] in H x K
  LoopGraph gamma;
  LoopGraph gamma_prime;
  LoopGraph rtimes;
  std::uint32_t a = 0;  ///< |{k in K : 2k = 0}|
  std::size_t copies_gamma = 0;
  std::size_t copies_prime = 0;
  std::size_t copies_rtimes = 0;
};

/// Builds the link graph of S x {0} on B x K inside H x K and checks that it
/// is exactly one copy of L_S[B], a - 1 copies of its Γ′ and (|K| - a)/2
/// copies of Γ₁⋊Γ₂, with no edges between the blocks. Throws
/// VerificationFailure otherwise.
LiftResult lift_tilde(const GroupSpec& H, const GroupSpec& K, const ElementSet& B, const ElementSet& S);

/// Connected components as sorted vertex-id lists, ordered by smallest vertex.
std::vector<std::vector<std::uint32_t>> component_vertices(const LoopGraph& g);
std::vector<LoopGraph> components(const LoopGraph& g);

/// Canonical structural code (loop presence and adjacency, types ignored),
/// minimised over vertex orders. Components above 12 vertices are not
/// canonicalised.
std::optional<std::string> canonical_code(const LoopGraph& g);

/// Catalog name of a connected graph, or "other(<fingerprint>)".
std::string catalog_label(const LoopGraph& component);

struct ComponentSummary {
  std::map<std::string, std::size_t> counts;

  std::size_t total() const;
  friend bool operator==(const ComponentSummary&, const ComponentSummary&) = default;
};

ComponentSummary summarize(const LoopGraph& g);

struct DegreeProfile {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::vector<std::size_t> degree;
  std::vector<std::size_t> type1;
  std::vector<std::size_t> type2;
  /// type1 + type2, plus two for a bad loop that is not also a type-2 loop:
  /// the degree of Γ₁ and Γ₂ taken as edge-disjoint layers, so an edge of
  /// both types counts twice.
  std::vector<std::size_t> layered;
  std::size_t min_layered = 0;
  std::size_t max_layered = 0;
};

DegreeProfile degree_profile(const LoopGraph& g);

/// Stable structural fingerprint: "v<n>e<m>l<loops>-<hash>".
std::string fingerprint(const LoopGraph& g);

/// Adjacency-list text:
///   # msf-loopgraph v1
///   <label>: <nbr labels> | <loop tags> | <edge masks>
/// with loop tags among {bad, type2} ("-" for none) and masks 1, 2 or 3.
std::string to_adjacency_text(const LoopGraph& g);
LoopGraph parse_adjacency_text(std::string_view text);

/// DOT rendering; type-1 edges blue, type-2 red, both dashed "blue:red".
std::string to_dot(const LoopGraph& g, const std::string& name = "linkgraph");

/// Small named graphs: C4, C6, K2xK3, cube, looped-triangle,
/// triangle+2-loops, K2xK3+1-loop, 3-path+3-loops, Z3^2-network,
/// matching-edge, isolated, triangle, looped-vertex. The two triangle
/// variants carry the tags of L_{1,7}[4..6] in Z9 and of its Γ′.
LoopGraph fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace msf
