#pragma once

// Slow reference implementations used to cross-check the library. They
// follow the definitions directly and share no code with it beyond the
// basic containers.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "idio/digraph.hpp"
#include "idio/matrix.hpp"
#include "idio/poly.hpp"

namespace idio::testing {

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

/// Sum over all permutations of sign * product of entries.
template <typename T>
T leibniz_det(const SquareMatrix<T>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  T sum(0);
  do {
    T prod(1);
    for (std::size_t i = 0; i < n; ++i) prod = prod * m(i, p[i]);
    if (permutation_sign(p) > 0)
      sum = sum + prod;
    else
      sum = sum - prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

/// det(X*I - M) by permutation expansion.
inline MPoly leibniz_charpoly(const PolyMatrix& m) {
  PolyMatrix xm(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) xm(i, j) = (i == j ? MPoly::X() : MPoly(0)) - m(i, j);
  return leibniz_det(xm);
}

inline IntMatrix adjacency_matrix(const Digraph& g) {
  IntMatrix m(g.size());
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v)
      if (g.has_arc(u, v)) m(u, v) = 1;
  return m;
}

inline bool is_hamiltonian_path(const Digraph& g, const std::vector<std::size_t>& order) {
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (!g.has_arc(order[i], order[i + 1])) return false;
  return true;
}

struct NaiveCensus {
  std::size_t paths = 0;
  std::size_t cycles = 0;
  std::size_t oo = 0, ee = 0, oe = 0, eo = 0;
};

/// Enumerates every vertex ordering. Cycles are counted once by requiring
/// vertex 0 first.
inline NaiveCensus naive_census(const Digraph& g, const std::vector<bool>& odd = {}) {
  const std::size_t n = g.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  NaiveCensus c;
  do {
    if (!is_hamiltonian_path(g, p)) continue;
    ++c.paths;
    if (n >= 2 && p.front() == 0 && g.has_arc(p.back(), 0)) ++c.cycles;
    if (!odd.empty()) {
      const bool s = odd[p.front()];
      const bool e = odd[p.back()];
      (s ? (e ? c.oo : c.oe) : (e ? c.eo : c.ee))++;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return c;
}

/// Tries every bijection.
inline bool brute_isomorphic(const Digraph& g, const Digraph& h) {
  if (g.size() != h.size()) return false;
  const std::size_t n = g.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = 0; v < n && ok; ++v)
        if (u != v && g.has_arc(u, v) != h.has_arc(p[u], p[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline Digraph naive_converse(const Digraph& g) {
  Digraph h(g.size());
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v)
      if (g.has_arc(u, v)) h.add_arc(v, u);
  return h;
}

inline bool brute_hemimorphic(const Digraph& g, const Digraph& h) {
  return brute_isomorphic(g, h) || brute_isomorphic(naive_converse(g), h);
}

/// Vertex sets of the directed 3-cycles.
inline std::set<std::vector<std::size_t>> three_cycles(const Digraph& g) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if ((g.has_arc(a, b) && g.has_arc(b, c) && g.has_arc(c, a)) ||
            (g.has_arc(a, c) && g.has_arc(c, b) && g.has_arc(b, a)))
          out.insert({a, b, c});
  return out;
}

/// Signed sum over permutations supported on arcs, straight from the
/// definition of linear subdigraphs.
inline long naive_coates_sum(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  long sum = 0;
  do {
    bool supported = true;
    for (std::size_t i = 0; i < n && supported; ++i) supported = m(i, p[i]) != 0;
    if (!supported) continue;
    std::vector<bool> seen(n, false);
    std::size_t cycles = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      ++cycles;
      for (std::size_t v = s; !seen[v]; v = p[v]) seen[v] = true;
    }
    sum += cycles % 2 == 0 ? 1 : -1;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

}  // namespace idio::testing
