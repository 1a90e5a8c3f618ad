#include "msf/sumfree.hpp"

#include "msf/error.hpp"

#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <thread>

namespace msf {

// ---------------------------------------------------------------------------
// Predicates

namespace {

/// Elements x outside `set` that cannot be added without creating a
/// (distinct) Schur triple.
ElementSet blocked_elements(const GroupSpec& group, const ElementSet& set, Variant variant) {
  ElementSet blocked(group.order());
  const auto members = set.elements();
  for (Element a : members) {
    for (Element b : members) {
      if (variant == Variant::kDistinct && a == b) continue;
      blocked.insert(group.add(a, b));
      blocked.insert(group.sub(b, a));
    }
  }
  if (variant == Variant::kSumFree) {
    blocked.insert(group.zero());
    for (std::uint32_t x = 0; x < group.order(); ++x) {
      if (set.contains(group.add(Element{x}, Element{x}))) blocked.insert(x);
    }
  }
  return blocked - set;
}

void check_set(const GroupSpec& group, const ElementSet& set) {
  if (set.universe() != group.order()) {
    throw InvalidArgument("element set does not belong to " + group.to_string());
  }
}

}  // namespace

bool is_sumfree(const GroupSpec& group, const ElementSet& set) {
  check_set(group, set);
  const auto members = set.elements();
  for (Element a : members) {
    for (Element b : members) {
      if (set.contains(group.add(a, b))) return false;
    }
  }
  return true;
}

bool is_maximal_sumfree(const GroupSpec& group, const ElementSet& set) {
  if (!is_sumfree(group, set)) return false;
  return (set | blocked_elements(group, set, Variant::kSumFree)) == ElementSet::full(group.order());
}

bool is_distinct_sumfree(const GroupSpec& group, const ElementSet& set) {
  check_set(group, set);
  const auto members = set.elements();
  for (Element a : members) {
    for (Element b : members) {
      if (a == b) continue;
      const Element c = group.add(a, b);
      if (c != a && c != b && set.contains(c)) return false;
    }
  }
  return true;
}

bool is_maximal_distinct_sumfree(const GroupSpec& group, const ElementSet& set) {
  if (!is_distinct_sumfree(group, set)) return false;
  return (set | blocked_elements(group, set, Variant::kDistinct)) == ElementSet::full(group.order());
}

// ---------------------------------------------------------------------------
// Search

namespace {

using Clock = std::chrono::steady_clock;

struct SearchTables {
  std::uint32_t n;
  std::uint64_t full;
  Variant variant;
  AdditionTable table;
  std::vector<std::uint64_t> halves;  // halves[y] = {x : 2x = y}

  SearchTables(const GroupSpec& group, Variant v, const EnumOptions& options)
      : n(group.order()),
        full(group.order() == 64 ? ~0ULL : (1ULL << group.order()) - 1),
        variant(v),
        table(check_order(group, options)),
        halves(group.order(), 0) {
    for (std::uint32_t x = 0; x < n; ++x) halves[table.add(x, x)] |= 1ULL << x;
  }

  static const GroupSpec& check_order(const GroupSpec& group, const EnumOptions& options) {
    const std::uint32_t limit = std::min(options.max_order, kEnumerationOrderLimit);
    if (group.order() > limit) {
      throw InvalidArgument("group order " + std::to_string(group.order()) +
                            " exceeds the enumeration guard of " + std::to_string(limit));
    }
    return group;
  }

  std::uint64_t initial_blocked() const { return variant == Variant::kSumFree ? 1ULL : 0ULL; }

  /// Blocked set after adding y to `set` (y not blocked, not in set).
  std::uint64_t extend(std::uint64_t set, std::uint64_t blocked, std::uint32_t y) const {
    std::uint64_t nb = blocked;
    std::uint64_t others = set;
    if (variant == Variant::kSumFree) {
      nb |= halves[y];
      others |= 1ULL << y;
    }
    while (others != 0) {
      const auto a = static_cast<std::uint32_t>(std::countr_zero(others));
      others &= others - 1;
      nb |= (1ULL << table.add(a, y)) | (1ULL << table.sub(a, y)) | (1ULL << table.sub(y, a));
    }
    return nb;
  }
};

struct SearchState {
  const EnumOptions& options;
  std::atomic<std::uint64_t> nodes{0};
  Clock::time_point deadline;

  explicit SearchState(const EnumOptions& o)
      : options(o),
        deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(o.max_seconds))) {}

  void tick() {
    const std::uint64_t count = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (count > options.max_nodes) {
      throw BudgetExceeded("node budget of " + std::to_string(options.max_nodes) + " exhausted",
                           count, 0);
    }
    if ((count & 1023U) == 0 && Clock::now() > deadline) {
      throw BudgetExceeded("time budget exhausted", count, 0);
    }
  }
};

template <class OnNode>
void descend(const SearchTables& t, SearchState& state, std::size_t branch, std::uint64_t set,
             std::uint64_t blocked, std::uint32_t next, OnNode& on_node) {
  state.tick();
  on_node(branch, set, blocked);
  for (std::uint32_t j = next; j < t.n; ++j) {
    if ((blocked >> j) & 1U) continue;
    descend(t, state, branch, set | (1ULL << j), t.extend(set, blocked, j), j + 1, on_node);
  }
}

/// Runs the search. `on_node(branch, set, blocked)` is called for every
/// visited set; branch 0 is the root, branch j+1 the subtree whose smallest
/// element is j. A branch is only ever touched by one thread, and with a
/// single thread branches are visited in increasing order.
template <class OnNode>
std::uint64_t run_search(const SearchTables& t, const EnumOptions& options, OnNode&& on_node) {
  SearchState state(options);
  const std::uint64_t root_blocked = t.initial_blocked();
  state.tick();
  on_node(std::size_t{0}, std::uint64_t{0}, root_blocked);

  auto run_branch = [&](std::uint32_t j) {
    if ((root_blocked >> j) & 1U) return;
    descend(t, state, j + 1, 1ULL << j, t.extend(0, root_blocked, j), j + 1, on_node);
  };

  const unsigned threads = std::max(1U, std::min(options.threads, t.n));
  if (threads == 1) {
    for (std::uint32_t j = 0; j < t.n; ++j) run_branch(j);
    return state.nodes.load();
  }

  std::atomic<std::uint32_t> next_branch{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      try {
        for (std::uint32_t j = next_branch++; j < t.n; j = next_branch++) run_branch(j);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next_branch = t.n;
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
  return state.nodes.load();
}

/// Streams sets selected by `keep(set, blocked)` in canonical order.
template <class Keep>
void stream_sets(const GroupSpec& group, Variant variant, const EnumOptions& options, Keep keep,
                 const SetVisitor& visit) {
  const SearchTables t(group, variant, options);
  std::uint64_t emitted = 0;
  try {
    if (options.threads <= 1) {
      run_search(t, options, [&](std::size_t, std::uint64_t set, std::uint64_t blocked) {
        if (keep(t, set, blocked)) {
          visit(ElementSet::from_mask(t.n, set));
          ++emitted;
        }
      });
      return;
    }
    std::vector<std::vector<std::uint64_t>> per_branch(t.n + 1);
    run_search(t, options, [&](std::size_t branch, std::uint64_t set, std::uint64_t blocked) {
      if (keep(t, set, blocked)) per_branch[branch].push_back(set);
    });
    for (const auto& bucket : per_branch) {
      for (std::uint64_t set : bucket) {
        visit(ElementSet::from_mask(t.n, set));
        ++emitted;
      }
    }
  } catch (const BudgetExceeded& e) {
    throw BudgetExceeded(std::string(e.what()) + " after emitting " + std::to_string(emitted) + " sets",
                         e.nodes(), emitted);
  }
}

bool is_maximal_node(const SearchTables& t, std::uint64_t set, std::uint64_t blocked) {
  return (~set & ~blocked & t.full) == 0;
}

struct Tally {
  std::uint64_t nodes = 0;
  std::uint64_t maximal = 0;
  std::uint64_t largest = 0;
};

Tally tally(const GroupSpec& group, Variant variant, const EnumOptions& options) {
  const SearchTables t(group, variant, options);
  const unsigned threads = std::max(1U, options.threads);
  std::vector<Tally> per_branch(t.n + 1);
  (void)threads;
  Tally total;
  try {
    total.nodes = run_search(t, options, [&](std::size_t branch, std::uint64_t set, std::uint64_t blocked) {
      Tally& b = per_branch[branch];
      if (is_maximal_node(t, set, blocked)) ++b.maximal;
      b.largest = std::max<std::uint64_t>(b.largest, static_cast<std::uint64_t>(std::popcount(set)));
    });
  } catch (const BudgetExceeded& e) {
    std::uint64_t partial = 0;
    for (const Tally& b : per_branch) partial += b.maximal;
    throw BudgetExceeded(std::string(e.what()) + " after " + std::to_string(partial) +
                             " maximal sets",
                         e.nodes(), partial);
  }
  for (const Tally& b : per_branch) {
    total.maximal += b.maximal;
    total.largest = std::max(total.largest, b.largest);
  }
  return total;
}

CountReport make_report(const GroupSpec& group, Quantity q, BigInt value, Method method,
                        Clock::time_point start, std::uint64_t nodes) {
  CountReport r{group, q, std::move(value), method, Clock::now() - start, nodes, {}};
  return r;
}

}  // namespace

void enumerate_maximal_sumfree(const GroupSpec& group, const SetVisitor& visit, const EnumOptions& options) {
  stream_sets(group, Variant::kSumFree, options, is_maximal_node, visit);
}

void enumerate_maximal_distinct_sumfree(const GroupSpec& group, const SetVisitor& visit,
                                        const EnumOptions& options) {
  stream_sets(group, Variant::kDistinct, options, is_maximal_node, visit);
}

void enumerate_sumfree(const GroupSpec& group, Variant variant, const SetVisitor& visit,
                       const EnumOptions& options) {
  stream_sets(group, variant, options,
              [](const SearchTables&, std::uint64_t, std::uint64_t) { return true; }, visit);
}

std::vector<ElementSet> maximal_sumfree_sets(const GroupSpec& group, const EnumOptions& options) {
  std::vector<ElementSet> out;
  enumerate_maximal_sumfree(group, [&](const ElementSet& s) { out.push_back(s); }, options);
  return out;
}

std::vector<ElementSet> maximal_distinct_sumfree_sets(const GroupSpec& group, const EnumOptions& options) {
  std::vector<ElementSet> out;
  enumerate_maximal_distinct_sumfree(group, [&](const ElementSet& s) { out.push_back(s); }, options);
  return out;
}

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::kF: return "f";
    case Quantity::kFMax: return "fmax";
    case Quantity::kFStar: return "fstar";
    case Quantity::kFStarMax: return "fstar_max";
    case Quantity::kMu: return "mu";
    case Quantity::kMuStar: return "mu_star";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::kExhaustive: return "exhaustive";
    case Method::kFormula: return "formula";
    case Method::kConstructionLowerBound: return "construction-lower-bound";
  }
  return "?";
}

Quantity parse_quantity(const std::string& name) {
  for (Quantity q : {Quantity::kF, Quantity::kFMax, Quantity::kFStar, Quantity::kFStarMax,
                     Quantity::kMu, Quantity::kMuStar}) {
    if (to_string(q) == name) return q;
  }
  throw InvalidArgument("unknown quantity '" + name + "' (expected f, fmax, fstar, fstar_max, mu, mu_star)");
}

CountReport count_sumfree(const GroupSpec& group, const EnumOptions& options) {
  const auto start = Clock::now();
  const Tally t = tally(group, Variant::kSumFree, options);
  return make_report(group, Quantity::kF, t.nodes, Method::kExhaustive, start, t.nodes);
}

CountReport count_distinct_sumfree(const GroupSpec& group, const EnumOptions& options) {
  const auto start = Clock::now();
  const Tally t = tally(group, Variant::kDistinct, options);
  return make_report(group, Quantity::kFStar, t.nodes, Method::kExhaustive, start, t.nodes);
}

CountReport count_fmax(const GroupSpec& group, const EnumOptions& options) {
  const auto start = Clock::now();
  const Tally t = tally(group, Variant::kSumFree, options);
  return make_report(group, Quantity::kFMax, t.maximal, Method::kExhaustive, start, t.nodes);
}

CountReport count_fstar_max(const GroupSpec& group, const EnumOptions& options) {
  const auto start = Clock::now();
  const Tally t = tally(group, Variant::kDistinct, options);
  return make_report(group, Quantity::kFStarMax, t.maximal, Method::kExhaustive, start, t.nodes);
}

CountReport mu_bruteforce(const GroupSpec& group, const EnumOptions& options) {
  const auto start = Clock::now();
  const Tally t = tally(group, Variant::kSumFree, options);
  return make_report(group, Quantity::kMu, t.largest, Method::kExhaustive, start, t.nodes);
}

CountReport mu_star_bruteforce(const GroupSpec& group, const EnumOptions& options) {
  const auto start = Clock::now();
  const Tally t = tally(group, Variant::kDistinct, options);
  return make_report(group, Quantity::kMuStar, t.largest, Method::kExhaustive, start, t.nodes);
}

CountReport mu_report(const GroupSpec& group) {
  const auto start = Clock::now();
  CountReport r = make_report(group, Quantity::kMu, mu_formula(group), Method::kFormula, start, 0);
  const GroupType type = classify(group);
  switch (type.kind) {
    case GroupType::Kind::kTypeI: r.formula = "n(1/3+1/(3p)), p=" + std::to_string(type.p); break;
    case GroupType::Kind::kTypeII: r.formula = "n/3"; break;
    case GroupType::Kind::kTypeIII:
      r.formula = "n(1/3-1/(3m)), m=" + std::to_string(group.exponent());
      break;
  }
  return r;
}

CountReport count(const GroupSpec& group, Quantity quantity, const EnumOptions& options) {
  switch (quantity) {
    case Quantity::kF: return count_sumfree(group, options);
    case Quantity::kFMax: return count_fmax(group, options);
    case Quantity::kFStar: return count_distinct_sumfree(group, options);
    case Quantity::kFStarMax: return count_fstar_max(group, options);
    case Quantity::kMu: return mu_bruteforce(group, options);
    case Quantity::kMuStar: return mu_star_bruteforce(group, options);
  }
  throw InvalidArgument("unknown quantity");
}

}  // namespace msf
