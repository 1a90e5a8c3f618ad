#pragma once

// Sum-free and distinct-sum-free subsets: predicates, and exact enumeration
// by a depth-first search that only ever visits sum-free partial sets.
//
// A set is sum-free when no a, b in it (a = b allowed) have a + b in it, so a
// sum-free set never contains zero. A set is distinct-sum-free when no three
// pairwise distinct members satisfy x + y = z; zero may belong to it.

#include "msf/group.hpp"
#include "msf/numeric.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace msf {

inline constexpr std::uint32_t kEnumerationOrderLimit = 64;

struct EnumOptions {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 300.0;
  /// Worker threads; top-level branches are split and merged in canonical order.
  unsigned threads = 1;
  /// Largest group order accepted (at most kEnumerationOrderLimit).
  std::uint32_t max_order = kEnumerationOrderLimit;
};

enum class Variant { kSumFree, kDistinct };

bool is_sumfree(const GroupSpec& group, const ElementSet& set);
bool is_maximal_sumfree(const GroupSpec& group, const ElementSet& set);
bool is_distinct_sumfree(const GroupSpec& group, const ElementSet& set);
bool is_maximal_distinct_sumfree(const GroupSpec& group, const ElementSet& set);

using SetVisitor = std::function<void(const ElementSet&)>;

/// Emits every maximal sum-free set exactly once, in canonical order.
/// Throws BudgetExceeded (with the number emitted so far) when out of budget.
void enumerate_maximal_sumfree(const GroupSpec& group, const SetVisitor& visit,
                               const EnumOptions& options = {});
void enumerate_maximal_distinct_sumfree(const GroupSpec& group, const SetVisitor& visit,
                                        const EnumOptions& options = {});

/// Every (distinct-)sum-free set, including the empty set, in canonical DFS
/// pre-order (ascending sorted index lists).
void enumerate_sumfree(const GroupSpec& group, Variant variant, const SetVisitor& visit,
                       const EnumOptions& options = {});

std::vector<ElementSet> maximal_sumfree_sets(const GroupSpec& group, const EnumOptions& options = {});
std::vector<ElementSet> maximal_distinct_sumfree_sets(const GroupSpec& group,
                                                      const EnumOptions& options = {});

enum class Quantity { kF, kFMax, kFStar, kFStarMax, kMu, kMuStar };
enum class Method { kExhaustive, kFormula, kConstructionLowerBound };

std::string to_string(Quantity q);
std::string to_string(Method m);
Quantity parse_quantity(const std::string& name);

struct CountReport {
  GroupSpec group;
  Quantity quantity;
  BigInt value;
  Method method;
  std::chrono::duration<double> elapsed{};
  std::uint64_t nodes = 0;   ///< DFS nodes visited (exhaustive method).
  std::string formula;       ///< Identity of the formula (formula method).
};

CountReport count_sumfree(const GroupSpec& group, const EnumOptions& options = {});
CountReport count_distinct_sumfree(const GroupSpec& group, const EnumOptions& options = {});
CountReport count_fmax(const GroupSpec& group, const EnumOptions& options = {});
CountReport count_fstar_max(const GroupSpec& group, const EnumOptions& options = {});
CountReport mu_bruteforce(const GroupSpec& group, const EnumOptions& options = {});
CountReport mu_star_bruteforce(const GroupSpec& group, const EnumOptions& options = {});
CountReport mu_report(const GroupSpec& group);

/// Dispatch by quantity; mu uses the exhaustive route.
CountReport count(const GroupSpec& group, Quantity quantity, const EnumOptions& options = {});

}  // namespace msf
