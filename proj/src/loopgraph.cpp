#include "msf/loopgraph.hpp"

#include "msf/error.hpp"
#include "msf/sumfree.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <queue>
#include <sstream>

namespace msf {

// ---------------------------------------------------------------------------
// LoopGraph

LoopGraph::LoopGraph(std::vector<std::uint64_t> labels)
    : labels_(std::move(labels)), adj_(labels_.size()), loops_(labels_.size(), 0) {}

LoopGraph LoopGraph::unlabeled(std::size_t n) {
  std::vector<std::uint64_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return LoopGraph(std::move(labels));
}

std::optional<std::uint32_t> LoopGraph::find(std::uint64_t label) const {
  for (std::uint32_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

void LoopGraph::add_edge(std::uint32_t u, std::uint32_t v, std::uint8_t mask) {
  if (u >= size() || v >= size()) throw InvalidArgument("edge endpoint out of range");
  if (u == v) throw InvalidArgument("an edge needs two distinct vertices; use a loop");
  if ((mask & 3U) == 0 || (mask & ~3U) != 0) throw InvalidArgument("edge type mask must be 1, 2 or 3");
  auto [it, inserted] = adj_[u].try_emplace(v, 0);
  if (inserted) ++edge_count_;
  it->second |= mask;
  adj_[v][u] = it->second;
}

void LoopGraph::add_loop(std::uint32_t v, std::uint8_t kind) {
  if (v >= size()) throw InvalidArgument("loop vertex out of range");
  if ((kind & 3U) == 0 || (kind & ~3U) != 0) throw InvalidArgument("loop kind must be 1, 2 or 3");
  loops_[v] |= kind;
}

void LoopGraph::clear_loop_bits(std::uint32_t v, std::uint8_t kind) { loops_.at(v) &= ~kind; }

std::uint8_t LoopGraph::edge(std::uint32_t u, std::uint32_t v) const {
  const auto& nbrs = adj_.at(u);
  auto it = nbrs.find(v);
  return it == nbrs.end() ? 0 : it->second;
}

std::size_t LoopGraph::degree(std::uint32_t v) const {
  return adj_.at(v).size() + (loops_[v] != 0 ? 2 : 0);
}

std::size_t LoopGraph::typed_degree(std::uint32_t v, EdgeType type) const {
  std::size_t d = 0;
  for (const auto& [w, mask] : adj_.at(v)) {
    if (mask & type) ++d;
  }
  if (type == kType2 && (loops_[v] & kType2Loop)) d += 2;
  return d;
}

std::size_t LoopGraph::loop_count() const {
  return static_cast<std::size_t>(std::count_if(loops_.begin(), loops_.end(), [](auto l) { return l != 0; }));
}

std::vector<Edge> LoopGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::uint32_t u = 0; u < size(); ++u) {
    for (const auto& [v, mask] : adj_[u]) {
      if (u < v) out.push_back({u, v, mask});
    }
  }
  return out;
}

LoopGraph LoopGraph::induced(std::span<const std::uint32_t> vertices) const {
  std::vector<std::uint64_t> labels;
  std::vector<std::int64_t> position(size(), -1);
  for (std::uint32_t i = 0; i < vertices.size(); ++i) {
    const std::uint32_t v = vertices[i];
    if (v >= size() || position[v] >= 0) throw InvalidArgument("induced: bad or repeated vertex");
    position[v] = i;
    labels.push_back(labels_[v]);
  }
  LoopGraph out(std::move(labels));
  for (std::uint32_t i = 0; i < vertices.size(); ++i) {
    const std::uint32_t v = vertices[i];
    if (loops_[v] != 0) out.add_loop(i, loops_[v]);
    for (const auto& [w, mask] : adj_[v]) {
      if (position[w] > static_cast<std::int64_t>(i)) out.add_edge(i, static_cast<std::uint32_t>(position[w]), mask);
    }
  }
  return out;
}

bool LoopGraph::same_structure(const LoopGraph& other) const {
  return size() == other.size() && loops_ == other.loops_ && adj_ == other.adj_;
}

// ---------------------------------------------------------------------------
// Link graphs

namespace {

void warn_overlap(const ElementSet& S, const ElementSet& B, const WarningSink& warn) {
  if (warn && S.intersects(B)) {
    warn("S and B share elements {" + (S & B).to_string() + "}; building the link graph anyway");
  }
}

LoopGraph vertices_of(const ElementSet& B) {
  const auto idx = B.indices();
  return LoopGraph(std::vector<std::uint64_t>(idx.begin(), idx.end()));
}

void check_universe(const GroupSpec& group, const ElementSet& S, const ElementSet& B) {
  if (S.universe() != group.order() || B.universe() != group.order()) {
    throw InvalidArgument("S and B must be subsets of " + group.to_string());
  }
}

}  // namespace

LoopGraph link_graph(const GroupSpec& group, const ElementSet& S, const ElementSet& B, const WarningSink& warn) {
  check_universe(group, S, B);
  if (!is_sumfree(group, S)) throw InvalidArgument("S = {" + S.to_string() + "} is not sum-free");
  warn_overlap(S, B, warn);

  LoopGraph g = vertices_of(B);
  std::vector<std::int64_t> vertex(group.order(), -1);
  for (std::uint32_t v = 0; v < g.size(); ++v) vertex[g.label(v)] = v;

  ElementSet bad_points(group.order());
  const auto s_elems = S.elements();
  for (Element s : s_elems) {
    for (Element t : s_elems) {
      bad_points.insert(group.add(s, t));
      bad_points.insert(group.sub(t, s));
    }
  }

  for (std::uint32_t v = 0; v < g.size(); ++v) {
    const Element x{static_cast<std::uint32_t>(g.label(v))};
    if (S.contains(group.add(x, x))) g.add_loop(v, kType2Loop);
    if (bad_points.contains(x)) g.add_loop(v, kBadLoop);
    for (Element s : s_elems) {
      const auto link = [&](Element y, std::uint8_t mask) {
        const std::int64_t w = vertex[y.index];
        if (w >= 0 && static_cast<std::uint32_t>(w) != v) g.add_edge(v, static_cast<std::uint32_t>(w), mask);
      };
      link(group.add(x, s), kType1);
      link(group.sub(x, s), kType1);
      link(group.sub(s, x), kType2);
    }
  }
  return g;
}

LoopGraph distinct_link_graph(const GroupSpec& group, const ElementSet& S, const ElementSet& B,
                              const WarningSink& warn) {
  check_universe(group, S, B);
  if (!is_distinct_sumfree(group, S)) throw InvalidArgument("S = {" + S.to_string() + "} is not distinct sum-free");
  warn_overlap(S, B, warn);

  LoopGraph g = vertices_of(B);
  std::vector<std::int64_t> vertex(group.order(), -1);
  for (std::uint32_t v = 0; v < g.size(); ++v) vertex[g.label(v)] = v;

  const auto s_elems = S.elements();
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    const Element x{static_cast<std::uint32_t>(g.label(v))};
    for (Element s : s_elems) {
      if (s == x) continue;
      for (Element t : s_elems) {
        if (t == s || t == x) continue;
        if (group.add(s, t) == x || group.add(x, s) == t) g.add_loop(v, kBadLoop);
      }
      const auto link = [&](Element y, std::uint8_t mask) {
        const std::int64_t w = vertex[y.index];
        if (w >= 0 && static_cast<std::uint32_t>(w) != v && y != s) g.add_edge(v, static_cast<std::uint32_t>(w), mask);
      };
      link(group.add(x, s), kType1);
      link(group.sub(x, s), kType1);
      link(group.sub(s, x), kType2);
    }
  }
  return g;
}

LoopGraph gamma1(const LoopGraph& g) {
  LoopGraph out(g.labels());
  for (const Edge& e : g.edges()) {
    if (e.mask & kType1) out.add_edge(e.u, e.v, kType1);
  }
  return out;
}

LoopGraph gamma2(const LoopGraph& g) {
  LoopGraph out(g.labels());
  for (const Edge& e : g.edges()) {
    if (e.mask & kType2) out.add_edge(e.u, e.v, kType2);
  }
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    if (g.loop(v) & kType2Loop) out.add_loop(v, kType2Loop);
  }
  return out;
}

LoopGraph gamma_prime(const LoopGraph& g) {
  LoopGraph out = g;
  for (std::uint32_t v = 0; v < g.size(); ++v) out.clear_loop_bits(v, kBadLoop);
  return out;
}

LoopGraph rtimes(const LoopGraph& g1, const LoopGraph& g2) {
  if (g1.labels() != g2.labels()) throw InvalidArgument("rtimes needs graphs on the same vertex set");
  const auto n = static_cast<std::uint32_t>(g1.size());
  std::vector<std::uint64_t> labels(2 * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    labels[x] = 2 * g1.label(x);
    labels[n + x] = 2 * g1.label(x) + 1;
  }
  LoopGraph out(std::move(labels));
  for (const Edge& e : g1.edges()) {
    out.add_edge(e.u, e.v, kType1);
    out.add_edge(n + e.u, n + e.v, kType1);
  }
  for (const Edge& e : g2.edges()) {
    out.add_edge(e.u, n + e.v, kType2);
    out.add_edge(e.v, n + e.u, kType2);
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    if (g2.loop(x) & kType2Loop) out.add_edge(x, n + x, kType2);
  }
  return out;
}

LiftResult lift_tilde(const GroupSpec& H, const GroupSpec& K, const ElementSet& B, const ElementSet& S) {
  if (B.universe() != H.order() || S.universe() != H.order()) {
    throw InvalidArgument("B and S must be subsets of " + H.to_string());
  }
  if (B.intersects(S)) throw InvalidArgument("B and S must be disjoint");

  const GroupSpec G = GroupSpec::product(H, K);
  const std::uint32_t h = H.order();
  const auto b_idx = B.indices();
  const auto bsize = static_cast<std::uint32_t>(b_idx.size());

  ElementSet Bt(G.order());
  for (std::uint32_t k = 0; k < K.order(); ++k) {
    for (std::uint32_t b : b_idx) Bt.insert(b + h * k);
  }
  ElementSet St(G.order());
  for (std::uint32_t s : S.indices()) St.insert(s);

  LiftResult r{G, Bt, St, link_graph(G, St, Bt), link_graph(H, S, B), {}, {}, 0, 0, 0, 0};
  r.gamma_prime = gamma_prime(r.gamma);
  r.rtimes = rtimes(gamma1(r.gamma), gamma2(r.gamma));

  const auto block = [&](std::uint32_t k) {
    std::vector<std::uint32_t> ids(bsize);
    std::iota(ids.begin(), ids.end(), k * bsize);
    return ids;
  };
  const auto mismatch = [&](const std::string& what, std::uint32_t k) {
    throw VerificationFailure("lift over " + K.to_string() + ": block at k=" + std::to_string(k) +
                              " is not " + what);
  };

  std::size_t block_edges = 0;
  for (std::uint32_t k = 0; k < K.order(); ++k) {
    const std::uint32_t nk = K.neg(Element{k}).index;
    if (nk == k) {
      ++r.a;
      const LoopGraph sub = r.graph.induced(block(k));
      if (k == 0) {
        if (!sub.same_structure(r.gamma)) mismatch("L_S[B]", k);
        ++r.copies_gamma;
      } else {
        if (!sub.same_structure(r.gamma_prime)) mismatch("its bad-loop-free version", k);
        ++r.copies_prime;
      }
      block_edges += sub.edge_count();
    } else if (k < nk) {
      auto ids = block(k);
      const auto other = block(nk);
      ids.insert(ids.end(), other.begin(), other.end());
      const LoopGraph sub = r.graph.induced(ids);
      if (!sub.same_structure(r.rtimes)) mismatch("the doubled graph", k);
      ++r.copies_rtimes;
      block_edges += sub.edge_count();
    }
  }
  if (block_edges != r.graph.edge_count()) {
    throw VerificationFailure("lift over " + K.to_string() + " has edges between blocks");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Components and the catalog

std::vector<std::vector<std::uint32_t>> component_vertices(const LoopGraph& g) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(g.size(), false);
  for (std::uint32_t start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> comp;
    std::queue<std::uint32_t> queue;
    queue.push(start);
    seen[start] = true;
    while (!queue.empty()) {
      const std::uint32_t v = queue.front();
      queue.pop();
      comp.push_back(v);
      for (const auto& [w, mask] : g.neighbours(v)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<LoopGraph> components(const LoopGraph& g) {
  std::vector<LoopGraph> out;
  for (const auto& comp : component_vertices(g)) out.push_back(g.induced(comp));
  return out;
}

namespace {

constexpr std::size_t kCanonicalLimit = 12;

struct Canonizer {
  std::size_t n;
  std::vector<std::uint32_t> adj;  // bit masks
  std::vector<bool> looped;
  std::vector<std::uint64_t> invariant;
  std::vector<std::uint64_t> target;  // sorted invariants, per position
  std::vector<std::uint32_t> order;
  std::string current;
  std::string best;
  bool have_best = false;

  explicit Canonizer(const LoopGraph& g) : n(g.size()), adj(n, 0), looped(n, false), invariant(n, 0) {
    for (std::uint32_t v = 0; v < n; ++v) {
      looped[v] = g.loop(v) != 0;
      for (const auto& [w, mask] : g.neighbours(v)) adj[v] |= 1U << w;
    }
    for (std::uint32_t v = 0; v < n; ++v) {
      std::uint64_t nsum = 0;
      for (std::uint32_t w = 0; w < n; ++w) {
        if (adj[v] >> w & 1U) nsum += static_cast<std::uint64_t>(std::popcount(adj[w])) * 2 + looped[w];
      }
      invariant[v] = (static_cast<std::uint64_t>(looped[v]) << 40) |
                     (static_cast<std::uint64_t>(std::popcount(adj[v])) << 32) | nsum;
    }
    target = invariant;
    std::sort(target.begin(), target.end());
  }

  // Branches are cut as soon as the partial code exceeds the best prefix.
  void search(std::uint32_t used) {
    const std::size_t p = order.size();
    if (p == n) {
      if (!have_best || current < best) {
        best = current;
        have_best = true;
      }
      return;
    }
    for (std::uint32_t v = 0; v < n; ++v) {
      if ((used >> v & 1U) || invariant[v] != target[p]) continue;
      const std::size_t mark = current.size();
      current.push_back(looped[v] ? '1' : '0');
      for (std::uint32_t q = 0; q < p; ++q) current.push_back((adj[v] >> order[q] & 1U) ? '1' : '0');
      const int cmp = have_best ? current.compare(0, current.size(), best, 0, current.size()) : -1;
      if (cmp <= 0) {
        order.push_back(v);
        search(used | (1U << v));
        order.pop_back();
      }
      current.resize(mark);
    }
  }
};

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

LoopGraph cycle(std::uint32_t n) {
  LoopGraph g = LoopGraph::unlabeled(n);
  for (std::uint32_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, kType1);
  return g;
}

LoopGraph prism() {
  LoopGraph g = LoopGraph::unlabeled(6);
  for (std::uint32_t a = 0; a < 2; ++a) {
    for (std::uint32_t b = 0; b < 3; ++b) {
      g.add_edge(a * 3 + b, a * 3 + (b + 1) % 3, kType1);
      if (a == 0) g.add_edge(b, 3 + b, kType2);
    }
  }
  return g;
}

LoopGraph rook3() {
  LoopGraph g = LoopGraph::unlabeled(9);
  for (std::uint32_t u = 0; u < 9; ++u) {
    for (std::uint32_t v = u + 1; v < 9; ++v) {
      if (u / 3 == v / 3 || u % 3 == v % 3) g.add_edge(u, v, kType1);
    }
  }
  return g;
}

const std::vector<std::pair<std::string, std::string>>& catalog() {
  static const std::vector<std::pair<std::string, std::string>> table = [] {
    std::vector<std::pair<std::string, std::string>> t;
    for (const std::string& name : fixture_names()) t.emplace_back(*canonical_code(fixture(name)), name);
    return t;
  }();
  return table;
}

}  // namespace

std::optional<std::string> canonical_code(const LoopGraph& g) {
  if (g.size() > kCanonicalLimit) return std::nullopt;
  Canonizer c(g);
  c.search(0);
  return std::to_string(g.size()) + ":" + c.best;
}

std::string catalog_label(const LoopGraph& component) {
  std::string key = std::to_string(component.size()) + ";";
  for (std::uint32_t v = 0; v < component.size(); ++v) {
    key += component.loop(v) ? "L" : "";
    for (const auto& [w, mask] : component.neighbours(v)) key += std::to_string(w) + ",";
    key += ";";
  }
  static std::mutex memo_mutex;
  static std::map<std::string, std::string> memo;
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }

  std::string label;
  if (const auto code = canonical_code(component)) {
    for (const auto& [known, name] : catalog()) {
      if (known == *code) label = name;
    }
    if (label.empty()) label = "other(v" + std::to_string(component.size()) + "-" + hex16(fnv1a(*code)) + ")";
  } else {
    label = "other(v" + std::to_string(component.size()) + "e" + std::to_string(component.edge_count()) + "l" +
            std::to_string(component.loop_count()) + "-" + hex16(fnv1a(key)) + ")";
  }
  std::lock_guard lock(memo_mutex);
  if (memo.size() < 4096) memo.emplace(key, label);
  return label;
}

std::size_t ComponentSummary::total() const {
  std::size_t t = 0;
  for (const auto& [label, count] : counts) t += count;
  return t;
}

ComponentSummary summarize(const LoopGraph& g) {
  ComponentSummary s;
  for (const LoopGraph& comp : components(g)) ++s.counts[catalog_label(comp)];
  return s;
}

DegreeProfile degree_profile(const LoopGraph& g) {
  DegreeProfile p;
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    p.degree.push_back(g.degree(v));
    p.type1.push_back(g.typed_degree(v, kType1));
    p.type2.push_back(g.typed_degree(v, kType2));
    const bool pure_bad = (g.loop(v) & kBadLoop) && !(g.loop(v) & kType2Loop);
    p.layered.push_back(p.type1.back() + p.type2.back() + (pure_bad ? 2 : 0));
  }
  if (!p.degree.empty()) {
    p.min_degree = *std::min_element(p.degree.begin(), p.degree.end());
    p.max_degree = *std::max_element(p.degree.begin(), p.degree.end());
    p.min_layered = *std::min_element(p.layered.begin(), p.layered.end());
    p.max_layered = *std::max_element(p.layered.begin(), p.layered.end());
  }
  return p;
}

std::string fingerprint(const LoopGraph& g) {
  return "v" + std::to_string(g.size()) + "e" + std::to_string(g.edge_count()) + "l" +
         std::to_string(g.loop_count()) + "-" + hex16(fnv1a(to_adjacency_text(g)));
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

constexpr std::string_view kHeader = "# msf-loopgraph v1";

std::string loop_tags(std::uint8_t kind) {
  if (kind == 0) return "-";
  std::string out;
  if (kind & kBadLoop) out = "bad";
  if (kind & kType2Loop) out += out.empty() ? "type2" : " type2";
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::pair<std::string_view, std::size_t>> words(std::string_view s, std::size_t base) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start), base + start);
  }
  return out;
}

std::uint64_t parse_u64(std::string_view w, std::size_t offset) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || ptr != w.data() + w.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(w) + "'", offset);
  }
  return v;
}

}  // namespace

std::string to_adjacency_text(const LoopGraph& g) {
  std::string out(kHeader);
  out += '\n';
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    out += std::to_string(g.label(v)) + ":";
    std::string masks;
    for (const auto& [w, mask] : g.neighbours(v)) {
      out += " " + std::to_string(g.label(w));
      masks += " " + std::to_string(mask);
    }
    out += " | " + loop_tags(g.loop(v)) + " |" + masks + "\n";
  }
  return out;
}

LoopGraph parse_adjacency_text(std::string_view text) {
  struct Row {
    std::uint64_t label;
    std::vector<std::pair<std::uint64_t, std::size_t>> nbrs;
    std::uint8_t loop = 0;
    std::vector<std::uint8_t> masks;
    std::size_t offset;
  };
  std::vector<Row> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    const std::size_t base = pos;
    pos = end + 1;
    if (trim(line).empty() || trim(line).front() == '#') continue;

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("missing ':' after the vertex label", base);
    const std::size_t bar1 = line.find('|', colon);
    const std::size_t bar2 = bar1 == std::string_view::npos ? bar1 : line.find('|', bar1 + 1);
    if (bar2 == std::string_view::npos) throw ParseError("expected 'label: nbrs | loops | masks'", base);

    Row row{parse_u64(trim(line.substr(0, colon)), base), {}, 0, {}, base};
    for (auto [w, off] : words(line.substr(colon + 1, bar1 - colon - 1), base + colon + 1)) {
      row.nbrs.emplace_back(parse_u64(w, off), off);
    }
    for (auto [w, off] : words(line.substr(bar1 + 1, bar2 - bar1 - 1), base + bar1 + 1)) {
      if (w == "bad") row.loop |= kBadLoop;
      else if (w == "type2") row.loop |= kType2Loop;
      else if (w != "-") throw ParseError("unknown loop tag '" + std::string(w) + "'", off);
    }
    for (auto [w, off] : words(line.substr(bar2 + 1), base + bar2 + 1)) {
      const std::uint64_t m = parse_u64(w, off);
      if (m < 1 || m > 3) throw ParseError("edge mask must be 1, 2 or 3", off);
      row.masks.push_back(static_cast<std::uint8_t>(m));
    }
    if (row.masks.size() != row.nbrs.size()) {
      throw ParseError("neighbour and mask counts differ", base + bar2);
    }
    rows.push_back(std::move(row));
  }

  std::vector<std::uint64_t> labels;
  for (const Row& r : rows) labels.push_back(r.label);
  LoopGraph g(labels);
  std::map<std::uint64_t, std::uint32_t> id;
  for (std::uint32_t v = 0; v < rows.size(); ++v) {
    if (!id.emplace(rows[v].label, v).second) throw ParseError("duplicate vertex label", rows[v].offset);
  }
  for (std::uint32_t v = 0; v < rows.size(); ++v) {
    if (rows[v].loop) g.add_loop(v, rows[v].loop);
    for (std::size_t i = 0; i < rows[v].nbrs.size(); ++i) {
      const auto [label, off] = rows[v].nbrs[i];
      auto it = id.find(label);
      if (it == id.end()) throw ParseError("unknown neighbour " + std::to_string(label), off);
      if (it->second == v) throw ParseError("self-neighbour; loops go in the loop field", off);
      g.add_edge(v, it->second, rows[v].masks[i]);
    }
  }
  for (std::uint32_t v = 0; v < rows.size(); ++v) {
    for (std::size_t i = 0; i < rows[v].nbrs.size(); ++i) {
      const std::uint32_t w = id.at(rows[v].nbrs[i].first);
      if (g.edge(v, w) != rows[v].masks[i]) {
        throw ParseError("edge masks disagree between the two endpoints", rows[v].nbrs[i].second);
      }
    }
  }
  return g;
}

std::string to_dot(const LoopGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  node [shape=circle];\n";
  for (std::uint32_t v = 0; v < g.size(); ++v) out << "  v" << g.label(v) << " [label=\"" << g.label(v) << "\"];\n";
  for (const Edge& e : g.edges()) {
    out << "  v" << g.label(e.u) << " -- v" << g.label(e.v);
    if (e.mask == kType1) out << " [color=blue]";
    else if (e.mask == kType2) out << " [color=red]";
    else out << " [color=\"blue:red\", style=dashed]";
    out << ";\n";
  }
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    const std::uint8_t l = g.loop(v);
    if (l == 0) continue;
    out << "  v" << g.label(v) << " -- v" << g.label(v);
    if (l == kBadLoop) out << " [color=black]";
    else if (l == kType2Loop) out << " [color=red]";
    else out << " [color=\"black:red\", style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Fixtures

std::vector<std::string> fixture_names() {
  return {"C4",           "C6",           "K2xK3",     "cube",     "looped-triangle",
          "triangle+2-loops", "K2xK3+1-loop", "3-path+3-loops", "Z3^2-network", "matching-edge",
          "isolated",     "triangle",     "looped-vertex"};
}

LoopGraph fixture(const std::string& name) {
  if (name == "C4") return cycle(4);
  if (name == "C6") return cycle(6);
  if (name == "K2xK3") return prism();
  if (name == "cube") {
    LoopGraph g = LoopGraph::unlabeled(8);
    for (std::uint32_t u = 0; u < 8; ++u) {
      for (std::uint32_t bit = 1; bit < 8; bit <<= 1U) {
        if ((u & bit) == 0) g.add_edge(u, u | bit, kType1 | kType2);
      }
    }
    return g;
  }
  if (name == "looped-triangle" || name == "triangle+2-loops") {
    LoopGraph g = LoopGraph::unlabeled(3);
    g.add_edge(0, 1, kType1);
    g.add_edge(1, 2, kType1);
    g.add_edge(0, 2, kType1 | kType2);
    if (name == "looped-triangle") {
      g.add_loop(1, kType2Loop);
    } else {
      g.add_loop(1, kBadLoop | kType2Loop);
      g.add_loop(2, kBadLoop);
    }
    return g;
  }
  if (name == "K2xK3+1-loop") {
    LoopGraph g = prism();
    g.add_loop(0, kBadLoop);
    return g;
  }
  if (name == "3-path+3-loops") {
    LoopGraph g = LoopGraph::unlabeled(3);
    g.add_edge(0, 1, kType1);
    g.add_edge(1, 2, kType1);
    for (std::uint32_t v = 0; v < 3; ++v) g.add_loop(v, kBadLoop);
    return g;
  }
  if (name == "Z3^2-network") return rook3();
  if (name == "matching-edge") {
    LoopGraph g = LoopGraph::unlabeled(2);
    g.add_edge(0, 1, kType1);
    return g;
  }
  if (name == "isolated") return LoopGraph::unlabeled(1);
  if (name == "triangle") return cycle(3);
  if (name == "looped-vertex") {
    LoopGraph g = LoopGraph::unlabeled(1);
    g.add_loop(0, kType2Loop);
    return g;
  }
  throw InvalidArgument("unknown fixture '" + name + "'");
}

}  // namespace msf
