#include "idio/digraph.hpp"

#include <deque>
#include <string>

namespace idio {

VertexSet::VertexSet(std::initializer_list<std::size_t> members) {
  for (auto v : members) insert(v);
}

VertexSet::VertexSet(const std::vector<std::size_t>& members) {
  for (auto v : members) insert(v);
}

VertexSet VertexSet::all(std::size_t n) {
  VertexSet s;
  for (std::size_t v = 0; v < n; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  VertexSet s;
  for (std::size_t v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1u) s.insert(v);
  return s;
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::size_t v = bits_._Find_first(); v < kMaxVertices; v = bits_._Find_next(v))
    out.push_back(v);
  return out;
}

Digraph::Digraph(std::size_t n) : n_(n), out_(n), in_(n) {
  if (n == 0 || n > kMaxVertices)
    throw std::invalid_argument("Digraph: vertex count must be in 1.." +
                                std::to_string(kMaxVertices));
}

Digraph Digraph::from_arcs(std::size_t n, const std::vector<Arc>& arcs) {
  Digraph g(n);
  for (auto [u, v] : arcs) g.add_arc(u, v);
  return g;
}

void Digraph::add_arc(std::size_t u, std::size_t v) { set_arc(u, v, true); }

void Digraph::remove_arc(std::size_t u, std::size_t v) { set_arc(u, v, false); }

void Digraph::set_arc(std::size_t u, std::size_t v, bool present) {
  if (u >= n_ || v >= n_) throw std::out_of_range("Digraph: arc endpoint out of range");
  if (u == v) {
    if (present) throw std::invalid_argument("Digraph: loops are not allowed");
    return;
  }
  out_[u].set(v, present);
  in_[v].set(u, present);
}

std::size_t Digraph::arc_count() const {
  std::size_t m = 0;
  for (const auto& r : out_) m += r.count();
  return m;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = 0; v < n_; ++v)
      if (out_[u].test(v)) out.emplace_back(u, v);
  return out;
}

std::uint64_t Digraph::code() const {
  if (n_ > 8) throw std::invalid_argument("Digraph::code: requires at most 8 vertices");
  std::uint64_t c = 0;
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = 0; v < n_; ++v)
      if (out_[u].test(v)) c |= std::uint64_t{1} << (u * n_ + v);
  return c;
}

Digraph Digraph::from_code(std::size_t n, std::uint64_t code) {
  if (n > 8) throw std::invalid_argument("Digraph::from_code: requires at most 8 vertices");
  Digraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && ((code >> (u * n + v)) & 1u)) g.add_arc(u, v);
  return g;
}

bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.out_ == b.out_; }

Digraph complement(const Digraph& g) {
  const std::size_t n = g.size();
  Digraph c(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && !g.has_arc(u, v)) c.add_arc(u, v);
  return c;
}

Digraph converse(const Digraph& g) {
  Digraph c = g;
  std::swap(c.out_, c.in_);
  return c;
}

namespace {

void check_subset(const Digraph& g, const VertexSet& w) {
  for (std::size_t v = g.size(); v < kMaxVertices; ++v)
    if (w.contains(v)) throw std::out_of_range("vertex set exceeds digraph vertex range");
}

}  // namespace

Digraph induced(const Digraph& g, const VertexSet& w) {
  if (w.empty()) throw std::invalid_argument("induced: vertex set must be nonempty");
  check_subset(g, w);
  const auto members = w.members();
  Digraph h(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (i != j && g.has_arc(members[i], members[j])) h.add_arc(i, j);
  return h;
}

bool is_module(const Digraph& g, const VertexSet& w) {
  check_subset(g, w);
  const Row& inside = w.bits();
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (w.contains(x)) continue;
    Row to_x = g.in_row(x) & inside;     // a in W with (a, x)
    Row from_x = g.out_row(x) & inside;  // a in W with (x, a)
    if (to_x.any() && to_x != inside) return false;
    if (from_x.any() && from_x != inside) return false;
  }
  return true;
}

Digraph invert_module(const Digraph& g, const VertexSet& w) {
  check_subset(g, w);
  Digraph h = g;
  const Row& inside = w.bits();
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (!w.contains(u)) continue;
    h.out_[u] = (g.out_[u] & ~inside) | (g.in_[u] & inside);
    h.in_[u] = (g.in_[u] & ~inside) | (g.out_[u] & inside);
  }
  return h;
}

namespace {

// 0 = no arc, 1 = single arc, 2 = digon.
int pair_kind(const Digraph& g, std::size_t u, std::size_t v) {
  return static_cast<int>(g.has_arc(u, v)) + static_cast<int>(g.has_arc(v, u));
}

bool is_flag_triple(const Digraph& g, std::size_t a, std::size_t b, std::size_t c) {
  int seen[3] = {0, 0, 0};
  ++seen[pair_kind(g, a, b)];
  ++seen[pair_kind(g, a, c)];
  ++seen[pair_kind(g, b, c)];
  return seen[0] == 1 && seen[1] == 1 && seen[2] == 1;
}

}  // namespace

std::vector<std::array<std::size_t, 3>> find_flags(const Digraph& g) {
  std::vector<std::array<std::size_t, 3>> flags;
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (is_flag_triple(g, a, b, c)) flags.push_back({a, b, c});
  return flags;
}

bool is_flag_free(const Digraph& g) {
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (is_flag_triple(g, a, b, c)) return false;
  return true;
}

DigraphClass classify(const Digraph& g) {
  const std::size_t n = g.size();
  DigraphClass cls{true, true, true, false};
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const bool fwd = g.has_arc(u, v);
      const bool back = g.has_arc(v, u);
      if (fwd && back) cls.is_oriented = false;
      if (fwd != back) cls.is_symmetric = false;
      if (fwd == back) cls.is_tournament = false;
    }
  }
  if (cls.is_oriented) {
    bool transitive = true;
    for (std::size_t u = 0; u < n && transitive; ++u)
      for (std::size_t v = 0; v < n && transitive; ++v)
        if (g.has_arc(u, v) && (g.out_row(v) & ~g.out_row(u)).any()) transitive = false;
    cls.is_poset = transitive;
  }
  return cls;
}

bool is_weakly_connected(const Digraph& g) {
  const std::size_t n = g.size();
  Row seen;
  seen.set(0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    Row next = (g.out_row(u) | g.in_row(u)) & ~seen;
    for (std::size_t v = next._Find_first(); v < kMaxVertices; v = next._Find_next(v)) {
      seen.set(v);
      queue.push_back(v);
    }
  }
  return seen.count() == n;
}

std::pair<Digraph, Digraph> canonical_orientations(const Digraph& g) {
  using Kind = OrientationError::Kind;
  const std::size_t n = g.size();
  if (!classify(g).is_symmetric)
    throw OrientationError(Kind::NotSymmetric, "canonical_orientations: digraph is not symmetric");
  if (!is_weakly_connected(g))
    throw OrientationError(Kind::Disconnected, "canonical_orientations: graph is not connected");

  std::vector<int> side(n, -1);
  side[0] = 0;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      if (!g.has_arc(u, v)) continue;
      if (side[v] < 0) {
        side[v] = 1 - side[u];
        queue.push_back(v);
      } else if (side[v] == side[u]) {
        throw OrientationError(Kind::NotBipartite,
                               "canonical_orientations: graph is not bipartite");
      }
    }
  }

  Digraph sigma(n);
  for (auto [u, v] : g.arcs())
    if (side[u] == 0) sigma.add_arc(u, v);
  return {sigma, converse(sigma)};
}

std::size_t nu(const Digraph& g, const VertexSet& w) {
  check_subset(g, w);
  std::size_t m = 0;
  for (auto u : w.members()) m += (g.out_row(u) & w.bits()).count();
  return m;
}

}  // namespace idio

namespace idio {

std::vector<VertexSet> k_subsets(std::size_t n, std::size_t k) {
  std::vector<VertexSet> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.emplace_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace idio
