#include "idio/coates.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "idio/parallel.hpp"
#include "idio/spectral.hpp"
#include "idio/stockmeyer.hpp"

namespace idio {

LoopDigraph::LoopDigraph(std::size_t n) : n_(n), rows_(n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("LoopDigraph: vertex count must be in 1.." + std::to_string(kMaxVertices));
}

LoopDigraph LoopDigraph::from_digraph(const Digraph& g) {
  LoopDigraph h(g.size());
  for (auto [u, v] : g.arcs()) h.set_arc(u, v);
  return h;
}

LoopDigraph LoopDigraph::from_matrix(const IntMatrix& m) {
  LoopDigraph h(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m(i, j) != 0) h.set_arc(i, j);
  return h;
}

void LoopDigraph::set_arc(std::size_t u, std::size_t v, bool present) {
  if (u >= n_ || v >= n_) throw std::out_of_range("LoopDigraph: vertex out of range");
  rows_[u].set(v, present);
}

IntMatrix LoopDigraph::matrix() const {
  IntMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (has_arc(i, j)) m(i, j) = 1;
  return m;
}

LinearSubdigraph LinearSubdigraph::converse() const {
  LinearSubdigraph r{std::vector<std::size_t>(successor.size()), cycle_count};
  for (std::size_t u = 0; u < successor.size(); ++u) r.successor[successor[u]] = u;
  return r;
}

namespace {

void check_coates_size(const LoopDigraph& h) {
  if (h.size() > kMaxCoatesVertices)
    throw std::invalid_argument("linear subdigraphs: at most " +
                                std::to_string(kMaxCoatesVertices) + " vertices supported");
}

std::size_t count_cycles(const std::vector<std::size_t>& successor) {
  std::vector<bool> seen(successor.size(), false);
  std::size_t cycles = 0;
  for (std::size_t s = 0; s < successor.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t v = s; !seen[v]; v = successor[v]) seen[v] = true;
  }
  return cycles;
}

void for_each_linear_subdigraph(const LoopDigraph& h,
                                const std::function<void(const std::vector<std::size_t>&)>& visit) {
  check_coates_size(h);
  const std::size_t n = h.size();
  std::vector<std::size_t> successor(n);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> extend = [&](std::size_t row) {
    if (row == n) {
      visit(successor);
      return;
    }
    for (std::size_t col = 0; col < n; ++col) {
      if (used[col] || !h.has_arc(row, col)) continue;
      used[col] = true;
      successor[row] = col;
      extend(row + 1);
      used[col] = false;
    }
  };
  extend(0);
}

}  // namespace

std::vector<LinearSubdigraph> linear_subdigraphs(const LoopDigraph& h) {
  std::vector<LinearSubdigraph> out;
  for_each_linear_subdigraph(h, [&](const std::vector<std::size_t>& s) {
    out.push_back({s, count_cycles(s)});
  });
  return out;
}

Integer coates_determinant(const LoopDigraph& h) {
  long sum = 0;
  for_each_linear_subdigraph(h, [&](const std::vector<std::size_t>& s) {
    sum += count_cycles(s) % 2 == 0 ? 1 : -1;
  });
  return h.size() % 2 == 0 ? Integer(sum) : Integer(-sum);
}

std::pair<Digraph, Digraph> counterexample_pair(std::size_t n) {
  if (n < 5) throw std::invalid_argument("counterexample_pair: requires n >= 5");
  if (n + 1 > kMaxVertices) throw std::invalid_argument("counterexample_pair: n too large");
  Digraph g(n + 1);
  g.add_arc(0, 1);
  for (std::size_t i = 1; i + 2 <= n; ++i) {
    g.add_arc(i, i + 1);
    g.add_arc(i + 1, i);
  }
  Digraph h = g;
  g.add_arc(n - 1, n);
  h.add_arc(n, n - 1);
  return {g, h};
}

IntMatrix bordered_matrix(const IntMatrix& a) {
  const std::size_t n = a.size();
  IntMatrix b(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) != 0) throw std::invalid_argument("bordered_matrix: diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) != 0 && a(i, j) != 1) throw std::invalid_argument("bordered_matrix: entries must be 0 or 1");
      b(i, j) = a(i, j);
    }
    b(i, i) = 1;
    b(i, n) = 1;
    b(n, i) = 1;
  }
  b(n, n) = 1;
  return b;
}

CounterexampleReport verify_counterexample(std::size_t n, unsigned threads) {
  if (n < 5 || n > 10) throw std::invalid_argument("verify_counterexample: n must be in 5..10");
  const auto [g, h] = counterexample_pair(n);
  const std::size_t size = g.size();

  CounterexampleReport report;
  report.n = n;
  report.det_diff = adjacency_determinant(complement(g)) - adjacency_determinant(complement(h));

  const std::uint64_t full = (std::uint64_t{1} << size) - 1;
  std::vector<std::uint64_t> masks;
  for (std::uint64_t mask = 1; mask < full; ++mask) masks.push_back(mask);
  std::vector<char> equal(masks.size(), 0);
  parallel_for(masks.size(), threads, [&](std::size_t i) {
    const VertexSet w = VertexSet::from_mask(masks[i]);
    const Digraph gw = induced(g, w);
    const Digraph hw = induced(h, w);
    equal[i] = gw == hw || idiosyncratic(gw) == idiosyncratic(hw);
  });
  report.deck_all_equal = std::all_of(equal.begin(), equal.end(), [](char c) { return c != 0; });
  report.global_idio_equal = idiosyncratic(g) == idiosyncratic(h);
  report.flags_found = find_flags(g);
  return report;
}

std::array<std::vector<LinearSubdigraph>, 4> partition_linear_subdigraphs(
    const LoopDigraph& h, std::pair<std::size_t, std::size_t> first,
    std::pair<std::size_t, std::size_t> second) {
  std::array<std::vector<LinearSubdigraph>, 4> parts;
  for (auto& l : linear_subdigraphs(h)) {
    const bool a = l.contains(first.first, first.second);
    const bool b = l.contains(second.first, second.second);
    parts[a && b ? 0 : a ? 1 : b ? 2 : 3].push_back(std::move(l));
  }
  return parts;
}

PartitionReport counterexample_partition_check(std::size_t n) {
  if (n < 5 || n > 8) throw std::invalid_argument("counterexample_partition_check: n must be in 5..8");
  const auto [g, h] = counterexample_pair(n);
  auto bordered = [](const Digraph& d) {
    return LoopDigraph::from_matrix(bordered_matrix(LoopDigraph::from_digraph(d).matrix()));
  };
  const LoopDigraph bg = bordered(g);
  const LoopDigraph bh = bordered(h);
  const auto p = partition_linear_subdigraphs(bg, {0, 1}, {n - 1, n});
  const auto q = partition_linear_subdigraphs(bh, {0, 1}, {n, n - 1});

  PartitionReport r;
  for (std::size_t i = 0; i < 4; ++i) {
    r.sizes[i] = p[i].size();
    r.sizes_reversed[i] = q[i].size();
  }
  r.both_single_hamiltonian = p[0].size() == 1 && p[0][0].cycle_count == 1;
  r.both_empty_reversed = q[0].empty();
  r.first_only_equal = p[1] == q[1];
  std::vector<LinearSubdigraph> conv;
  for (const auto& l : p[2]) conv.push_back(l.converse());
  std::sort(conv.begin(), conv.end());
  r.second_only_converse = conv == q[2];
  r.neither_equal = p[3] == q[3];
  r.bordered_det_diff = coates_determinant(bg) - coates_determinant(bh);
  return r;
}

bool hlowey_check(const PolyMatrix& a11, const PolyMatrix& a22, const std::vector<MPoly>& alpha,
                  const std::vector<MPoly>& beta, const std::vector<MPoly>& gamma) {
  const std::size_t k = a11.size();
  const std::size_t m = a22.size();
  if (alpha.size() != k || gamma.size() != k || beta.size() != m)
    throw std::invalid_argument("hlowey_check: vector dimensions do not match the blocks");
  PolyMatrix a(k + m);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = a11(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(k + i, k + j) = a22(i, j);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      a(i, k + j) = alpha[i] * beta[j];
      a(k + j, i) = beta[j] * gamma[i];
    }
  }
  PolyMatrix b = a;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) b(k + i, k + j) = a22(j, i);
  return charpoly(a) == charpoly(b);
}

bool module_block_check(const Digraph& g, const VertexSet& w) {
  if (w.empty()) throw std::invalid_argument("module_block_check: empty vertex set");
  for (auto v : w.members())
    if (v >= g.size()) throw std::invalid_argument("module_block_check: vertex out of range");
  if (!is_module(g, w)) throw std::invalid_argument("module_block_check: not a module");

  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!w.contains(v)) order.push_back(v);
  const std::size_t k = order.size();
  for (auto v : w.members()) order.push_back(v);
  const std::size_t n = order.size();
  const std::size_t m = n - k;

  auto permuted = [&](const PolyMatrix& src) {
    PolyMatrix dst(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) dst(i, j) = src(order[i], order[j]);
    return dst;
  };
  const PolyMatrix a = permuted(generalized_adjacency(g));
  const PolyMatrix b = permuted(generalized_adjacency(invert_module(g, w)));

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool inside = i >= k && j >= k;
      if (inside ? b(i, j) != a(j, i) : b(i, j) != a(i, j)) return false;
    }
  }
  if (k == 0) return charpoly(a) == charpoly(b);

  std::vector<MPoly> alpha(k), gamma(k);
  for (std::size_t i = 0; i < k; ++i) {
    alpha[i] = a(i, k);
    gamma[i] = a(k, i);
    for (std::size_t j = k; j < n; ++j)
      if (a(i, j) != alpha[i] || a(j, i) != gamma[i]) return false;
  }
  PolyMatrix a11(k), a22(m);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a11(i, j) = a(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a22(i, j) = a(k + i, k + j);
  return hlowey_check(a11, a22, alpha, std::vector<MPoly>(m, MPoly(1)), gamma);
}

}  // namespace idio
