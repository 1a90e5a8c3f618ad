#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace msf::oracle {

Group::Group(std::vector<std::uint32_t> orders) : orders_(std::move(orders)), n_(1) {
  for (auto m : orders_) n_ *= m;
  if (n_ > 64) throw std::invalid_argument("oracle groups are limited to 64 elements");
  table_.resize(n_ * n_);
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (std::uint32_t b = 0; b < n_; ++b) {
      auto ca = decode(a);
      const auto cb = decode(b);
      for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % orders_[i];
      table_[a * n_ + b] = encode(ca);
    }
  }
}

std::vector<std::uint32_t> Group::decode(std::uint32_t x) const {
  std::vector<std::uint32_t> c;
  for (auto m : orders_) {
    c.push_back(x % m);
    x /= m;
  }
  return c;
}

std::uint32_t Group::encode(const std::vector<std::uint32_t>& c) const {
  std::uint32_t x = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) x = x * orders_[i] + c[i];
  return x;
}

std::uint32_t Group::neg(std::uint32_t a) const {
  auto c = decode(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (orders_[i] - c[i]) % orders_[i];
  return encode(c);
}

namespace {

bool in(std::uint64_t set, std::uint32_t x) { return (set >> x) & 1U; }

template <class Pred>
std::vector<std::uint64_t> maximal_scan(const Group& g, Pred pred) {
  const std::uint32_t n = g.order();
  if (n > 24) throw std::invalid_argument("scan limited to 24 elements");
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
    if (!pred(g, s)) continue;
    bool maximal = true;
    for (std::uint32_t x = 0; x < n && maximal; ++x) {
      if (!in(s, x) && pred(g, s | (1ULL << x))) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

}  // namespace

bool sumfree(const Group& g, std::uint64_t set) {
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    if (!in(set, a)) continue;
    for (std::uint32_t b = 0; b < g.order(); ++b) {
      if (in(set, b) && in(set, g.add(a, b))) return false;
    }
  }
  return true;
}

bool distinct_sumfree(const Group& g, std::uint64_t set) {
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    if (!in(set, a)) continue;
    for (std::uint32_t b = 0; b < g.order(); ++b) {
      if (b == a || !in(set, b)) continue;
      const std::uint32_t c = g.add(a, b);
      if (c != a && c != b && in(set, c)) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> maximal_sumfree_scan(const Group& g) { return maximal_scan(g, sumfree); }

std::vector<std::uint64_t> maximal_distinct_sumfree_scan(const Group& g) {
  return maximal_scan(g, distinct_sumfree);
}

Census census(const Group& g) {
  const std::uint32_t n = g.order();
  if (n > 24) throw std::invalid_argument("census limited to 24 elements");
  Census c;
  for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
    const auto size = static_cast<std::uint64_t>(__builtin_popcountll(s));
    if (sumfree(g, s)) {
      ++c.f;
      c.mu = std::max(c.mu, size);
    }
    if (distinct_sumfree(g, s)) {
      ++c.f_star;
      c.mu_star = std::max(c.mu_star, size);
    }
  }
  return c;
}

std::uint64_t mu_by_type(const std::vector<std::uint32_t>& orders) {
  std::uint64_t n = 1, m = 1;
  for (auto o : orders) {
    n *= o;
    m = std::lcm(m, static_cast<std::uint64_t>(o));
  }
  for (std::uint64_t p = 2; p <= n; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d) prime = prime && (p % d != 0);
    if (prime && p % 3 == 2 && n % p == 0) return n * (p + 1) / (3 * p);
  }
  if (n % 3 == 0) return n / 3;
  return n * (m - 1) / (3 * m);
}

std::uint64_t mis_scan(const Graph& g) {
  if (g.n > 24) throw std::invalid_argument("mis scan limited to 24 vertices");
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (1ULL << g.n); ++s) {
    bool ok = true;
    for (std::uint32_t u = 0; u < g.n && ok; ++u) {
      if (!in(s, u)) continue;
      if (g.loop[u]) ok = false;
      for (std::uint32_t v = u + 1; v < g.n && ok; ++v) {
        if (in(s, v) && g.adj[u][v]) ok = false;
      }
    }
    for (std::uint32_t u = 0; u < g.n && ok; ++u) {
      if (in(s, u) || g.loop[u]) continue;
      bool dominated = false;
      for (std::uint32_t v = 0; v < g.n; ++v) dominated = dominated || (in(s, v) && g.adj[u][v]);
      if (!dominated) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

Graph link_graph(const Group& g, std::uint64_t S, std::uint64_t B) {
  std::vector<std::uint32_t> verts;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (in(B, x)) verts.push_back(x);
  }
  const auto schur = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return g.add(a, b) == c || g.add(a, c) == b || g.add(b, c) == a;
  };
  Graph out(static_cast<std::uint32_t>(verts.size()));
  for (std::uint32_t i = 0; i < verts.size(); ++i) {
    for (std::uint32_t s = 0; s < g.order(); ++s) {
      if (!in(S, s)) continue;
      if (schur(verts[i], verts[i], s)) out.loop[i] = true;
      for (std::uint32_t t = 0; t < g.order(); ++t) {
        if (in(S, t) && schur(verts[i], s, t)) out.loop[i] = true;
      }
      for (std::uint32_t j = i + 1; j < verts.size(); ++j) {
        if (schur(verts[i], verts[j], s)) out.edge(i, j);
      }
    }
  }
  return out;
}

std::uint64_t complete_caps_scan(unsigned k) {
  const std::uint32_t points = (1U << (k + 1)) - 1;  // vectors 1..points
  if (points > 24) throw std::invalid_argument("cap scan limited to PG(3,2)");
  const auto is_cap = [&](std::uint64_t set) {
    for (std::uint32_t x = 1; x <= points; ++x) {
      if (!in(set, x - 1)) continue;
      for (std::uint32_t y = x + 1; y <= points; ++y) {
        if (!in(set, y - 1)) continue;
        const std::uint32_t z = x ^ y;
        if (z > y && in(set, z - 1)) return false;
      }
    }
    return true;
  };
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (1ULL << points); ++s) {
    if (!is_cap(s)) continue;
    bool complete = true;
    for (std::uint32_t x = 0; x < points && complete; ++x) {
      if (!in(s, x) && is_cap(s | (1ULL << x))) complete = false;
    }
    if (complete) ++count;
  }
  return count;
}

}  // namespace msf::oracle
