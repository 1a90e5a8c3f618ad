#include "msf/group.hpp"

#include "msf/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <sstream>

namespace msf {

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::make(std::vector<std::uint32_t> orders, std::uint64_t guard) {
  if (orders.empty()) throw InvalidArgument("group spec needs at least one cyclic factor");
  std::uint64_t n = 1;
  std::uint64_t exponent = 1;
  for (std::uint32_t m : orders) {
    if (m < 2) throw InvalidArgument("cyclic order " + std::to_string(m) + " is below 2");
    n *= m;
    if (n > guard) {
      throw InvalidArgument("group order exceeds the size guard of " + std::to_string(guard));
    }
    exponent = std::lcm(exponent, static_cast<std::uint64_t>(m));
  }
  GroupSpec g;
  g.orders_ = std::move(orders);
  g.n_ = static_cast<std::uint32_t>(n);
  g.exponent_ = static_cast<std::uint32_t>(exponent);
  g.strides_.resize(g.orders_.size());
  std::uint32_t stride = 1;
  for (std::size_t i = 0; i < g.orders_.size(); ++i) {
    g.strides_[i] = stride;
    stride *= g.orders_[i];
  }
  return g;
}

GroupSpec GroupSpec::product(const GroupSpec& lhs, const GroupSpec& rhs, std::uint64_t guard) {
  std::vector<std::uint32_t> orders = lhs.orders_;
  orders.insert(orders.end(), rhs.orders_.begin(), rhs.orders_.end());
  return make(std::move(orders), guard);
}

void GroupSpec::check(Element e) const {
  if (e.index >= n_) {
    throw InvalidArgument("element index " + std::to_string(e.index) + " does not belong to " +
                          to_string());
  }
}

Element GroupSpec::element(std::span<const std::uint32_t> coords) const {
  if (coords.size() != orders_.size()) throw InvalidArgument("coordinate vector has wrong length");
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= orders_[i]) throw InvalidArgument("coordinate out of range");
    index += coords[i] * strides_[i];
  }
  return Element{index};
}

Element GroupSpec::element(std::uint32_t index) const {
  Element e{index};
  check(e);
  return e;
}

std::vector<std::uint32_t> GroupSpec::coords(Element e) const {
  check(e);
  std::vector<std::uint32_t> out(orders_.size());
  std::uint32_t rest = e.index;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    out[i] = rest % orders_[i];
    rest /= orders_[i];
  }
  return out;
}

Element GroupSpec::add(Element a, Element b) const {
  check(a);
  check(b);
  std::uint32_t ra = a.index;
  std::uint32_t rb = b.index;
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::uint32_t m = orders_[i];
    std::uint32_t c = ra % m + rb % m;
    if (c >= m) c -= m;
    index += c * strides_[i];
    ra /= m;
    rb /= m;
  }
  return Element{index};
}

Element GroupSpec::neg(Element a) const {
  check(a);
  std::uint32_t ra = a.index;
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::uint32_t m = orders_[i];
    const std::uint32_t c = ra % m;
    index += (c == 0 ? 0 : m - c) * strides_[i];
    ra /= m;
  }
  return Element{index};
}

Element GroupSpec::sub(Element a, Element b) const { return add(a, neg(b)); }

Element GroupSpec::times(std::int64_t k, Element a) const {
  check(a);
  std::uint32_t ra = a.index;
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::int64_t m = orders_[i];
    const std::int64_t c = ((static_cast<std::int64_t>(ra % orders_[i]) * (k % m)) % m + m) % m;
    index += static_cast<std::uint32_t>(c) * strides_[i];
    ra /= orders_[i];
  }
  return Element{index};
}

std::uint32_t GroupSpec::element_order(Element a) const {
  std::uint64_t order = 1;
  const auto c = coords(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::uint64_t m = orders_[i];
    order = std::lcm(order, m / std::gcd(m, static_cast<std::uint64_t>(c[i])));
  }
  return static_cast<std::uint32_t>(order);
}

std::string GroupSpec::to_string() const {
  std::string out;
  std::size_t i = 0;
  while (i < orders_.size()) {
    std::size_t j = i;
    while (j < orders_.size() && orders_[j] == orders_[i]) ++j;
    if (!out.empty()) out += '*';
    out += 'Z' + std::to_string(orders_[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::uint64_t parse_number(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  std::uint64_t value = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
    if (value > (1ULL << 32)) throw ParseError("number too large", start);
    ++pos;
  }
  if (pos == start) throw ParseError("expected a decimal number", pos);
  return value;
}

}  // namespace

GroupSpec parse_group(std::string_view text, std::uint64_t guard) {
  std::vector<std::uint32_t> orders;
  std::size_t pos = 0;
  if (text.empty()) throw ParseError("empty group spec", 0);
  while (true) {
    if (pos >= text.size() || text[pos] != 'Z') throw ParseError("expected 'Z'", pos);
    ++pos;
    const std::size_t order_pos = pos;
    const std::uint64_t m = parse_number(text, pos);
    if (m < 2) throw ParseError("cyclic order must be at least 2", order_pos);
    std::uint64_t reps = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t reps_pos = pos;
      reps = parse_number(text, pos);
      if (reps < 1 || reps > 64) throw ParseError("repetition count must be in [1, 64]", reps_pos);
    }
    for (std::uint64_t r = 0; r < reps; ++r) orders.push_back(static_cast<std::uint32_t>(m));
    if (pos == text.size()) break;
    if (text[pos] != '*') throw ParseError("expected '*' or end of input", pos);
    ++pos;
  }
  return GroupSpec::make(std::move(orders), guard);
}

// ---------------------------------------------------------------------------
// AdditionTable

AdditionTable::AdditionTable(const GroupSpec& group) : n_(group.order()) {
  if (n_ > 4096) throw InvalidArgument("addition table limited to groups of order 4096");
  table_.resize(static_cast<std::size_t>(n_) * n_);
  neg_.resize(n_);
  for (std::uint32_t a = 0; a < n_; ++a) {
    neg_[a] = static_cast<std::uint16_t>(group.neg(Element{a}).index);
    for (std::uint32_t b = 0; b < n_; ++b) {
      table_[a * n_ + b] = static_cast<std::uint16_t>(group.add(Element{a}, Element{b}).index);
    }
  }
}

// ---------------------------------------------------------------------------
// ElementSet

ElementSet::ElementSet(std::uint32_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet ElementSet::from_indices(std::uint32_t universe, std::span<const std::uint32_t> indices) {
  ElementSet s(universe);
  for (std::uint32_t i : indices) s.insert(i);
  return s;
}

ElementSet ElementSet::from_mask(std::uint32_t universe, std::uint64_t mask) {
  if (universe > 64) throw InvalidArgument("from_mask needs a universe of at most 64");
  if (universe < 64 && (mask >> universe) != 0) throw InvalidArgument("mask has bits outside the universe");
  ElementSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

ElementSet ElementSet::full(std::uint32_t universe) {
  ElementSet s(universe);
  for (std::uint32_t i = 0; i < universe; ++i) s.insert(i);
  return s;
}

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::contains(std::uint32_t index) const {
  if (index >= universe_) return false;
  return (words_[index / 64] >> (index % 64)) & 1U;
}

void ElementSet::insert(std::uint32_t index) {
  if (index >= universe_) {
    throw InvalidArgument("index " + std::to_string(index) + " outside universe of size " +
                          std::to_string(universe_));
  }
  words_[index / 64] |= 1ULL << (index % 64);
}

void ElementSet::erase(std::uint32_t index) {
  if (index < universe_) words_[index / 64] &= ~(1ULL << (index % 64));
}

std::vector<std::uint32_t> ElementSet::indices() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  for (std::uint32_t i : indices()) out.push_back(Element{i});
  return out;
}

std::optional<std::uint32_t> ElementSet::min_index() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
  }
  return std::nullopt;
}

std::uint64_t ElementSet::mask() const {
  if (universe_ > 64) throw InvalidArgument("mask() needs a universe of at most 64");
  return words_.empty() ? 0 : words_[0];
}

void ElementSet::check_universe(const ElementSet& other) const {
  if (universe_ != other.universe_) throw InvalidArgument("element sets belong to different groups");
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

ElementSet ElementSet::operator|(const ElementSet& rhs) const {
  check_universe(rhs);
  ElementSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= rhs.words_[w];
  return out;
}

ElementSet ElementSet::operator&(const ElementSet& rhs) const {
  check_universe(rhs);
  ElementSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= rhs.words_[w];
  return out;
}

ElementSet ElementSet::operator-(const ElementSet& rhs) const {
  check_universe(rhs);
  ElementSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~rhs.words_[w];
  return out;
}

ElementSet ElementSet::complement() const { return full(universe_) - *this; }

std::string ElementSet::to_string() const {
  std::string out;
  for (std::uint32_t i : indices()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    const std::uint64_t low = diff & (~diff + 1);
    return (a.words_[w] & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL ^ universe_;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

ElementSet parse_element_set(std::string_view text, std::uint32_t universe) {
  ElementSet out(universe);
  std::size_t pos = 0;
  if (text.empty()) return out;
  while (true) {
    const std::size_t start = pos;
    std::uint64_t lo = parse_number(text, pos);
    std::uint64_t hi = lo;
    if (pos + 1 < text.size() && text[pos] == '.' && text[pos + 1] == '.') {
      pos += 2;
      hi = parse_number(text, pos);
    }
    if (hi < lo || hi >= universe) throw ParseError("element index out of range", start);
    for (std::uint64_t i = lo; i <= hi; ++i) out.insert(static_cast<std::uint32_t>(i));
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ',' in element list", pos);
    ++pos;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classification

std::string GroupType::to_string() const {
  switch (kind) {
    case Kind::kTypeI:
      return "TypeI(" + std::to_string(p) + ")";
    case Kind::kTypeII:
      return "TypeII";
    case Kind::kTypeIII:
      return "TypeIII";
  }
  return "?";
}

GroupType classify(const GroupSpec& group) {
  const std::uint32_t n = group.order();
  for (std::uint32_t p = 2; p <= n; ++p) {
    if (p % 3 == 2 && n % p == 0 && is_prime(p)) return {GroupType::Kind::kTypeI, p};
  }
  if (n % 3 == 0) return {GroupType::Kind::kTypeII, 0};
  return {GroupType::Kind::kTypeIII, 0};
}

std::uint64_t mu_formula(const GroupSpec& group) {
  const GroupType type = classify(group);
  const BigRational n = group.order();
  BigRational mu;
  switch (type.kind) {
    case GroupType::Kind::kTypeI:
      mu = n * (BigRational(1, 3) + BigRational(1, 3 * type.p));
      break;
    case GroupType::Kind::kTypeII:
      mu = n / 3;
      break;
    case GroupType::Kind::kTypeIII:
      mu = n * (BigRational(1, 3) - BigRational(1, 3 * static_cast<std::int64_t>(group.exponent())));
      break;
  }
  if (!is_integral(mu)) {
    throw VerificationFailure("mu formula is not integral for " + group.to_string());
  }
  return boost::multiprecision::numerator(mu).convert_to<std::uint64_t>();
}

// ---------------------------------------------------------------------------
// Subgroups and cosets

ElementSet subgroup_generated(const GroupSpec& group, std::span<const Element> generators) {
  ElementSet out(group.order());
  out.insert(group.zero());
  std::deque<Element> queue{group.zero()};
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element g : generators) {
      for (Element y : {group.add(x, g), group.sub(x, g)}) {
        if (!out.contains(y)) {
          out.insert(y);
          queue.push_back(y);
        }
      }
    }
  }
  return out;
}

bool is_subgroup(const GroupSpec& group, const ElementSet& subset) {
  if (subset.universe() != group.order() || !subset.contains(group.zero())) return false;
  const auto members = subset.elements();
  for (Element a : members) {
    for (Element b : members) {
      if (!subset.contains(group.add(a, b))) return false;
    }
  }
  return true;
}

std::vector<ElementSet> cosets(const GroupSpec& group, const ElementSet& subgroup) {
  if (!is_subgroup(group, subgroup)) throw InvalidArgument("cosets(): argument is not a subgroup");
  const auto members = subgroup.elements();
  ElementSet covered(group.order());
  std::vector<ElementSet> out;
  for (std::uint32_t r = 0; r < group.order(); ++r) {
    if (covered.contains(r)) continue;
    ElementSet coset(group.order());
    for (Element h : members) coset.insert(group.add(Element{r}, h));
    covered = covered | coset;
    out.push_back(std::move(coset));
  }
  return out;
}

std::vector<Hyperplane> hyperplanes(const GroupSpec& group) {
  const std::uint32_t p = group.orders().front();
  if (!is_prime(p) || !std::all_of(group.orders().begin(), group.orders().end(),
                                   [p](std::uint32_t m) { return m == p; })) {
    throw InvalidArgument("hyperplanes() needs Z_p^k with p prime, got " + group.to_string());
  }
  const std::size_t k = group.rank();
  std::vector<Hyperplane> out;
  // Functionals in index order, keeping those whose first non-zero entry is 1.
  for (std::uint32_t f = 1; f < group.order(); ++f) {
    const auto coeffs = group.coords(Element{f});
    const auto lead = std::find_if(coeffs.begin(), coeffs.end(), [](std::uint32_t c) { return c != 0; });
    if (*lead != 1) continue;
    Hyperplane hp;
    hp.functional = coeffs;
    hp.subgroup = ElementSet(group.order());
    hp.cosets.assign(p - 1, ElementSet(group.order()));
    for (std::uint32_t x = 0; x < group.order(); ++x) {
      const auto xc = group.coords(Element{x});
      std::uint64_t value = 0;
      for (std::size_t i = 0; i < k; ++i) value += static_cast<std::uint64_t>(xc[i]) * coeffs[i];
      value %= p;
      if (value == 0) {
        hp.subgroup.insert(x);
      } else {
        hp.cosets[value - 1].insert(x);
      }
    }
    out.push_back(std::move(hp));
  }
  return out;
}

// ---------------------------------------------------------------------------
// CyclicQuotient

CyclicQuotient::CyclicQuotient(const GroupSpec& group, std::uint32_t q)
    : n_(group.order()), q_(q), image_(group.order()) {
  const std::uint32_t m = group.exponent();
  if (q < 2 || m % q != 0) {
    throw InvalidArgument("no surjection " + group.to_string() + " -> Z" + std::to_string(q) +
                          ": modulus must divide the exponent " + std::to_string(m));
  }
  for (std::uint32_t x = 0; x < n_; ++x) {
    const auto c = group.coords(Element{x});
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      value += static_cast<std::uint64_t>(m / group.orders()[i]) * c[i];
    }
    image_[x] = static_cast<std::uint32_t>((value % m) % q);
  }
}

std::uint32_t CyclicQuotient::image(Element e) const {
  if (e.index >= n_) throw InvalidArgument("element outside the quotient's group");
  return image_[e.index];
}

ElementSet CyclicQuotient::fiber(std::uint32_t residue) const {
  ElementSet out(n_);
  for (std::uint32_t x = 0; x < n_; ++x) {
    if (image_[x] == residue % q_) out.insert(x);
  }
  return out;
}

ElementSet CyclicQuotient::fibers(std::span<const std::uint32_t> residues) const {
  ElementSet out(n_);
  for (std::uint32_t r : residues) out = out | fiber(r);
  return out;
}

Element CyclicQuotient::representative(std::uint32_t residue) const {
  for (std::uint32_t x = 0; x < n_; ++x) {
    if (image_[x] == residue % q_) return Element{x};
  }
  throw VerificationFailure("cyclic quotient is not surjective");
}

}  // namespace msf
