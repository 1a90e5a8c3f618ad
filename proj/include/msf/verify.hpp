#pragma once

// Exhaustive desk-scale checks of the structure theorems and of the link
// graph extension property.

#include "msf/group.hpp"
#include "msf/sumfree.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace msf {

struct VerificationOutcome {
  std::string check;
  std::string group;
  std::uint64_t universe = 0;  ///< objects scanned
  std::vector<std::string> counterexamples;
  /// Named values worth reporting (counts, bounds, ratios), in insertion order.
  std::vector<std::pair<std::string, std::string>> facts;
  /// "A -> x + U" lines, only when requested.
  std::vector<std::string> witnesses;
  std::chrono::duration<double> elapsed{};

  bool pass() const { return counterexamples.empty(); }
};

struct VerifyOptions {
  EnumOptions enumeration;
  bool record_witnesses = false;
  /// Counterexamples kept verbatim; the rest are only counted.
  std::size_t max_counterexamples = 20;
};

/// Every sum-free A in Z_2^k with |A| > 5 * 2^{k-4} lies in a coset x + U of
/// a subgroup U with x not in U. 4 <= k <= 5.
VerificationOutcome verify_structure_z2(std::uint32_t k, const VerifyOptions& options = {});

/// The same for Z_3^3 with threshold 5, plus: every maximal sum-free set
/// above the threshold lies in a non-trivial coset of a hyperplane.
VerificationOutcome verify_structure_z3(std::uint32_t k = 3, const VerifyOptions& options = {});

/// For sum-free B, maximal sum-free M and S = M \ B: I = M n B is a maximal
/// independent set of L_S[B]. Exhaustive over all (B, M) for n <= 16,
/// otherwise `trials` random pairs drawn with `seed`.
VerificationOutcome verify_extension_lemma(const GroupSpec& group, std::uint64_t trials = 2000,
                                           std::uint64_t seed = 1, const VerifyOptions& options = {});

/// Type-3 generated count against the pair accounting and f_max, for Z_2^k
/// (k <= 4) and Z_3^k (k <= 2).
VerificationOutcome verify_fmax_decomposition(const GroupSpec& group, const VerifyOptions& options = {});

}  // namespace msf
