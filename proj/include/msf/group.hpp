#pragma once

// Finite abelian groups given as products of cyclic groups, their elements
// and subsets.
//
// An element of Z_{m_1} x ... x Z_{m_r} is identified with its little-endian
// mixed-radix index  sum_i c_i * prod_{j<i} m_j,  so the index range [0, n)
// doubles as a canonical ordering. Specs are never reduced to invariant-factor
// form: [2,6] and [2,2,3] are different specs of isomorphic groups.

#include "msf/numeric.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace msf {

inline constexpr std::uint64_t kDefaultGroupGuard = 1ULL << 16;

/// A group element, by canonical index.
struct Element {
  std::uint32_t index = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

class GroupSpec {
 public:
  /// Throws InvalidArgument on an empty list, an order below 2, or n > guard.
  static GroupSpec make(std::vector<std::uint32_t> orders,
                        std::uint64_t guard = kDefaultGroupGuard);

  /// Direct product; coordinates of `lhs` come first.
  static GroupSpec product(const GroupSpec& lhs, const GroupSpec& rhs,
                           std::uint64_t guard = kDefaultGroupGuard);

  const std::vector<std::uint32_t>& orders() const noexcept { return orders_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  std::uint32_t order() const noexcept { return n_; }
  std::uint32_t exponent() const noexcept { return exponent_; }

  Element zero() const noexcept { return Element{0}; }
  Element element(std::span<const std::uint32_t> coords) const;
  Element element(std::uint32_t index) const;
  std::vector<std::uint32_t> coords(Element e) const;

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const;
  Element times(std::int64_t k, Element a) const;

  /// Order of `a` as a group element.
  std::uint32_t element_order(Element a) const;

  /// "Z2^3", "Z2*Z6"; parse_group(to_string()) reproduces the spec.
  std::string to_string() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.orders_ == b.orders_; }

 private:
  GroupSpec() = default;
  void check(Element e) const;

  std::vector<std::uint32_t> orders_;
  std::vector<std::uint32_t> strides_;
  std::uint32_t n_ = 1;
  std::uint32_t exponent_ = 1;
};

/// Parses the `Z<m>` / `*` / `^<k>` grammar, e.g. "Z2^4", "Z9*Z3", "Z13".
GroupSpec parse_group(std::string_view text, std::uint64_t guard = kDefaultGroupGuard);

/// Dense n x n addition table for inner loops.
class AdditionTable {
 public:
  explicit AdditionTable(const GroupSpec& group);

  std::uint32_t size() const noexcept { return n_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return table_[a * n_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_[b]); }

 private:
  std::uint32_t n_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> neg_;
};

/// A subset of a group as a bitset indexed by element index.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::uint32_t universe);

  static ElementSet from_indices(std::uint32_t universe, std::span<const std::uint32_t> indices);
  static ElementSet from_mask(std::uint32_t universe, std::uint64_t mask);
  static ElementSet full(std::uint32_t universe);

  std::uint32_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }

  bool contains(std::uint32_t index) const;
  bool contains(Element e) const { return contains(e.index); }
  void insert(std::uint32_t index);
  void insert(Element e) { insert(e.index); }
  void erase(std::uint32_t index);

  std::vector<std::uint32_t> indices() const;
  std::vector<Element> elements() const;
  std::optional<std::uint32_t> min_index() const;
  /// Only for universes of at most 64 elements.
  std::uint64_t mask() const;

  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;
  ElementSet operator|(const ElementSet& rhs) const;
  ElementSet operator&(const ElementSet& rhs) const;
  ElementSet operator-(const ElementSet& rhs) const;
  ElementSet complement() const;

  /// "1,3,5" (ascending indices); the stream serialization format.
  std::string to_string() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Canonical order: at the first index where two sets differ, the set that
  /// contains it comes first. This is the order of an include-first search
  /// over ascending indices, and agrees with lexicographic order of the
  /// sorted index lists on any antichain.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b);

  std::size_t hash() const noexcept;

 private:
  void check_universe(const ElementSet& other) const;

  std::uint32_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Parses "1,3,5" or ranges "4..6" into an element set of the given universe.
ElementSet parse_element_set(std::string_view text, std::uint32_t universe);

struct GroupType {
  enum class Kind { kTypeI, kTypeII, kTypeIII };
  Kind kind = Kind::kTypeIII;
  std::uint32_t p = 0;  ///< Only meaningful for kTypeI.

  std::string to_string() const;
  friend bool operator==(const GroupType&, const GroupType&) = default;
};

/// Type I(p) if a prime p = 2 (mod 3) divides n (smallest such p), type II if
/// not but 3 | n, type III otherwise.
GroupType classify(const GroupSpec& group);

/// Size of a largest sum-free subset, from the type of the group.
std::uint64_t mu_formula(const GroupSpec& group);

ElementSet subgroup_generated(const GroupSpec& group, std::span<const Element> generators);

/// True if `subset` contains zero and is closed under addition.
bool is_subgroup(const GroupSpec& group, const ElementSet& subset);

/// Cosets of a subgroup, ordered by their minimum-index representatives.
std::vector<ElementSet> cosets(const GroupSpec& group, const ElementSet& subgroup);

struct Hyperplane {
  std::vector<std::uint32_t> functional;  ///< Normalised: first non-zero entry is 1.
  ElementSet subgroup;
  std::vector<ElementSet> cosets;  ///< Non-trivial cosets; cosets[c-1] is where the functional is c.
};

/// All index-p subgroups of Z_p^k, one per non-zero functional up to scalars.
std::vector<Hyperplane> hyperplanes(const GroupSpec& group);

/// Surjective homomorphism G -> Z_q for a q dividing the exponent.
///
/// Built as x -> (sum_i (m / m_i) x_i mod m) mod q with m the exponent; its
/// kernel is an index-q subgroup whose cosets are the fibres.
class CyclicQuotient {
 public:
  CyclicQuotient(const GroupSpec& group, std::uint32_t q);

  std::uint32_t modulus() const noexcept { return q_; }
  std::uint32_t image(Element e) const;
  /// The coset where the homomorphism takes the value `residue`.
  ElementSet fiber(std::uint32_t residue) const;
  ElementSet fibers(std::span<const std::uint32_t> residues) const;
  ElementSet kernel() const { return fiber(0); }
  /// Smallest-index element with the given image.
  Element representative(std::uint32_t residue) const;

 private:
  std::uint32_t n_;
  std::uint32_t q_;
  std::vector<std::uint32_t> image_;
};

bool is_prime(std::uint64_t value);

}  // namespace msf

template <>
struct std::hash<msf::ElementSet> {
  std::size_t operator()(const msf::ElementSet& s) const noexcept { return s.hash(); }
};
