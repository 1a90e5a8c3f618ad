#pragma once

// Lower-bound constructions: a pair (B, S) of disjoint subsets whose link
// graph has many maximal independent sets, each of which extends S to a
// different maximal (distinct-)sum-free set.
//
// Every builder returns the pair, the census of its link graph, the exact MIS
// count and the value the construction promises, and sets `match` when the
// two agree (equality for exact counts, >= for bounds).

#include "msf/group.hpp"
#include "msf/loopgraph.hpp"
#include "msf/mis.hpp"
#include "msf/numeric.hpp"
#include "msf/sumfree.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace msf {

enum class Family { kZ2Type3, kZ3Type3, kCyclic, kType3Coset, kDistinctCoset, kDistinctEven };

/// "z2-type3", "z3-type3", "cyclic-5.1", "type3-5.3", "distinct-6.3", "distinct-6.4".
std::string to_string(Family family);

struct ConstructionReport {
  Family family;
  std::string case_label;
  GroupSpec group;
  ElementSet B;
  ElementSet S;
  bool distinct = false;  ///< link graph is L*_S[B]
  ComponentSummary link;
  BigInt mis_exact;
  Certified predicted;
  bool exact_formula = true;  ///< predicted is an exact count, not a lower bound
  bool match = false;
  /// Every MIS I gave a (distinct-)sum-free I u S that no element of B \ I
  /// extends. Empty when the check was skipped for size.
  std::optional<bool> generates;
  /// Exhaustive count of the bounded quantity, when the group was small enough.
  std::optional<BigInt> exhaustive;
  std::vector<std::string> notes;
};

/// Largest MIS count for which generation checks enumerate every set.
inline constexpr std::uint64_t kGenerationCheckLimit = 1'000'000;

/// For each MIS I of the link graph of (B, S): checks that I u S is
/// (distinct-)sum-free and that adding any b in B \ I breaks that. Returns
/// false on the first failure.
bool check_generation(const GroupSpec& group, const ElementSet& B, const ElementSet& S, Variant variant,
                      const MisOptions& options = {});

/// The sets I u S over MIS I of L_S[B] that are maximal sum-free in G,
/// sorted canonically.
std::vector<ElementSet> generated_sets(const GroupSpec& group, const ElementSet& B, const ElementSet& S);

/// A coset B of a hyperplane with a singleton S = {s}.
struct CosetPair {
  std::size_t hyperplane = 0;  ///< index into hyperplanes(group)
  std::uint32_t coset = 1;     ///< value of the functional on B
  ElementSet B;
  std::uint32_t s = 0;
  bool s_in_subgroup = true;   ///< s in H, otherwise s in 2g + H
};

inline constexpr std::uint32_t kZ2PairGuard = 5;
inline constexpr std::uint32_t kZ3PairGuard = 3;

/// All (x + W, {s}) in Z_2^k with W a hyperplane and s in W \ {0}: (n-1)(n-2)/2 pairs.
std::vector<CosetPair> z2_type3_pairs(std::uint32_t k);
/// Distinct maximal sum-free sets generated by some z2 pair.
BigInt z2_generated_count(std::uint32_t k);

/// All (g + H, {s}) in Z_3^k, s in H \ {0} or s in 2g + H. With
/// `subgroup_only`, only the s in H \ {0} pairs.
std::vector<CosetPair> z3_type3_pairs(std::uint32_t k, bool subgroup_only = false);
/// Checks one pair's link graph: |B|/3 triangles when s in H, otherwise one
/// looped vertex and a perfect matching. Throws VerificationFailure.
ConstructionReport z3_pair_report(const GroupSpec& group, const CosetPair& pair);
BigInt z3_generated_count(std::uint32_t k);

/// Largest number of maximal sum-free sets generated by two distinct pairs,
/// over all pairs of pairs.
struct OvercountResult {
  std::size_t pairs = 0;
  std::size_t pair_pairs = 0;
  std::size_t max_shared = 0;
  std::size_t bound = 0;
  bool holds = false;
};

/// Z_2^k, k <= 4, bound n/4.
OvercountResult overcount_z2(std::uint32_t k);
/// Z_3^k, k <= 2, pairs with s in H \ {0}, bound n/9.
OvercountResult overcount_z3(std::uint32_t k);

/// B = [3k+1, 6k] and S = {k, -2k} in Z_m with m = 9k + i.
struct CyclicConstruction {
  std::uint32_t m = 0;
  std::uint32_t k = 0;
  std::uint32_t i = 0;
  std::string case_label;
  ConstructionReport report;  ///< for Γ itself
  LoopGraph gamma;
  LoopGraph gamma_prime;
  LoopGraph rtimes;
  BigInt mis_gamma;
  BigInt mis_prime;
  BigInt mis_rtimes;
  /// Closed forms for (Γ, Γ′, Γ₁⋊Γ₂) where the case has them.
  std::optional<std::array<BigInt, 3>> closed_form;
  bool match = true;
};

CyclicConstruction cyclic_construction(std::uint32_t m);

/// (2/3)^{1+n/m} * 6^{(1/18 - 4/(9m)) n} for n = m * |K|.
Certified product_bound(std::uint32_t m, std::uint64_t k_order);

struct ProductLowerBound {
  Certified bound;
  /// The lifted construction in Z_m x K; empty when it exceeded the budget.
  std::optional<ConstructionReport> witness;
  /// mis(Γ) * mis(Γ′)^{a-1} * mis(Γ₁⋊Γ₂)^{(|K|-a)/2}.
  std::optional<BigInt> product_formula;
  bool witness_omitted = false;
  std::string omitted_reason;
};

/// Without K the witness is Γ in Z_m.
ProductLowerBound product_lower_bound(std::uint32_t m, const std::optional<GroupSpec>& K);

struct Prop34Result {
  bool holds = false;
  /// Enclosure of ln(bound) - (n/7) ln 2.
  Certified margin;
  unsigned precision = 0;
};

/// Decides (2/3)^{1+n/m} 6^{(1/18 - 4/(9m)) n} >= 2^{n/7}; needs n >= m >= 9, m | n.
Prop34Result verify_prop34(std::uint64_t m, std::uint64_t n);

/// G = Z_m x K of type III with m in {7, 13, 19}, n <= 64.
ConstructionReport type3_construction(std::uint32_t m, const std::optional<GroupSpec>& K);

/// Maximal distinct-sum-free lower bound for odd order, Z_{2^a} x K with
/// a >= 2, and Z_2^k. Throws InvalidArgument naming the case otherwise.
ConstructionReport distinct_construction_63(const GroupSpec& group);
/// G = Z_2^k x K with |K| odd, at least 3.
ConstructionReport distinct_construction_64(const GroupSpec& group);

/// C(n-1, 2) 2^{n/4} for Z_2^k, (n-3)(n-1)/3 * 3^{n/9} for Z_3^k.
Certified leading_term(const GroupSpec& group);

}  // namespace msf
