#include "idio/stockmeyer.hpp"

#include <algorithm>
#include <functional>
#include <new>
#include <set>
#include <stdexcept>
#include <string>

#include "idio/hemimorphy.hpp"
#include "idio/matrix.hpp"

namespace idio {

std::uint64_t odd_part(std::int64_t x) {
  if (x < 1) throw std::invalid_argument("odd_part: argument must be positive");
  auto u = static_cast<std::uint64_t>(x);
  while ((u & 1u) == 0) u >>= 1;
  return u;
}

namespace {

__extension__ using u128 = unsigned __int128;

void check_order(std::size_t n, const char* who) {
  if (n < 1 || n > kMaxStockmeyerOrder)
    throw std::invalid_argument(std::string(who) + ": n must be in 1..6");
}

// Arc between labels i < j: i -> j iff odd(j - i) = 1 mod 4.
bool forward(std::size_t i, std::size_t j) {
  return odd_part(static_cast<std::int64_t>(j - i)) % 4 == 1;
}

Digraph extended(std::size_t n, bool zero_beats_even) {
  const std::size_t m = std::size_t{1} << n;
  Digraph g(m + 1);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      forward(i, j) ? g.add_arc(i, j) : g.add_arc(j, i);
  for (std::size_t i = 1; i <= m; ++i) {
    const bool zero_wins = (i % 2 == 0) == zero_beats_even;
    zero_wins ? g.add_arc(0, i) : g.add_arc(i, 0);
  }
  return g;
}

Integer to_integer(std::uint64_t v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return r;
}

Integer to_integer(u128 v) {
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(v >> 64)};
  Integer r;
  mpz_import(r.get_mpz_t(), 2, -1, sizeof words[0], 0, 0, words);
  return r;
}

// Hamiltonian path counts ending at each vertex, over paths whose first
// vertex is in `starts`. Counts never exceed n!, so 64 bits suffice up to 20
// vertices and 128 bits up to 34.
template <typename Count>
std::vector<Count> end_counts(const std::vector<std::uint32_t>& out, std::uint32_t starts) {
  const std::size_t n = out.size();
  const std::size_t states = (std::size_t{1} << n) * n;
  constexpr std::size_t kBudget = std::size_t{4} << 30;
  if (states > kBudget / sizeof(Count))
    throw std::runtime_error("hamiltonian census: tables for " + std::to_string(n) +
                             " vertices exceed the memory budget");
  std::vector<Count> dp;
  try {
    dp.assign(states, Count{0});
  } catch (const std::bad_alloc&) {
    throw std::runtime_error("hamiltonian census: cannot allocate tables for " +
                             std::to_string(n) + " vertices");
  }
  for (std::size_t v = 0; v < n; ++v)
    if (starts & (1u << v)) dp[(std::size_t{1} << v) * n + v] = 1;
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const Count* row = &dp[std::size_t{mask} * n];
    for (std::size_t v = 0; v < n; ++v) {
      if (row[v] == 0) continue;
      std::uint32_t next = out[v] & ~mask;
      while (next) {
        const auto w = static_cast<std::size_t>(__builtin_ctz(next));
        next &= next - 1;
        dp[(std::size_t{mask | (1u << w)}) * n + w] += row[v];
      }
    }
  }
  return std::vector<Count>(dp.begin() + static_cast<std::ptrdiff_t>(std::size_t{full} * n),
                            dp.end());
}

std::vector<std::uint32_t> out_masks(const Digraph& g) {
  std::vector<std::uint32_t> out(g.size(), 0);
  for (auto [u, v] : g.arcs()) out[u] |= 1u << v;
  return out;
}

std::uint32_t to_mask(const VertexSet& s, std::size_t n) {
  std::uint32_t m = 0;
  for (auto v : s.members())
    if (v < n) m |= 1u << v;
  return m;
}

void check_census_size(const Digraph& g) {
  if (g.size() > kMaxCensusVertices)
    throw std::invalid_argument("hamiltonian census: at most " +
                                std::to_string(kMaxCensusVertices) + " vertices supported");
}

std::vector<Integer> end_counts_exact(const Digraph& g, std::uint32_t starts) {
  const auto out = out_masks(g);
  std::vector<Integer> r;
  if (g.size() <= 20) {
    for (auto c : end_counts<std::uint64_t>(out, starts)) r.push_back(to_integer(c));
  } else {
    for (auto c : end_counts<u128>(out, starts)) r.push_back(to_integer(c));
  }
  return r;
}

}  // namespace

Digraph stockmeyer_A(std::size_t n) {
  check_order(n, "stockmeyer_A");
  const std::size_t m = std::size_t{1} << n;
  Digraph g(m);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      forward(i, j) ? g.add_arc(i - 1, j - 1) : g.add_arc(j - 1, i - 1);
  return g;
}

Digraph stockmeyer_B(std::size_t n) {
  check_order(n, "stockmeyer_B");
  return extended(n, true);
}

Digraph stockmeyer_C(std::size_t n) {
  check_order(n, "stockmeyer_C");
  return extended(n, false);
}

bool hypomorphy_check(std::size_t n) {
  if (n < 1 || n > 3) throw std::invalid_argument("hypomorphy_check: n must be in 1..3");
  const Digraph b = stockmeyer_B(n);
  const Digraph c = stockmeyer_C(n);
  const std::size_t m = std::size_t{1} << n;
  auto without = [&](std::size_t k) {
    VertexSet w = VertexSet::all(m + 1);
    w.erase(k);
    return w;
  };
  const Digraph a = stockmeyer_A(n);
  if (induced(b, without(0)) != a || induced(c, without(0)) != a) return false;
  for (std::size_t k = 1; k <= m; ++k)
    if (!are_isomorphic(induced(b, without(k)), induced(c, without(m + 1 - k)))) return false;
  return true;
}

Integer adjacency_determinant(const Digraph& g) {
  IntMatrix m(g.size());
  for (auto [u, v] : g.arcs()) m(u, v) = 1;
  return determinant(std::move(m));
}

HamiltonianCensus hamiltonian_census(const Digraph& g, const std::optional<std::vector<bool>>& odd) {
  check_census_size(g);
  const std::size_t n = g.size();
  if (odd && odd->size() != n)
    throw std::invalid_argument("hamiltonian_census: classification size mismatch");

  HamiltonianCensus census;
  const std::uint32_t all = (1u << n) - 1;
  if (odd) {
    std::uint32_t odd_mask = 0;
    for (std::size_t v = 0; v < n; ++v)
      if ((*odd)[v]) odd_mask |= 1u << v;
    const auto from_odd = end_counts_exact(g, odd_mask);
    const auto from_even = end_counts_exact(g, all & ~odd_mask);
    census.classified = true;
    for (std::size_t v = 0; v < n; ++v) {
      ((*odd)[v] ? census.paths_oo : census.paths_oe) += from_odd[v];
      ((*odd)[v] ? census.paths_eo : census.paths_ee) += from_even[v];
    }
    census.paths_total = census.paths_oo + census.paths_oe + census.paths_eo + census.paths_ee;
  } else {
    for (const auto& c : end_counts_exact(g, all)) census.paths_total += c;
  }

  if (n >= 2) {
    const auto from_zero = end_counts_exact(g, 1u);
    for (std::size_t v = 1; v < n; ++v)
      if (g.has_arc(v, 0)) census.cycles_total += from_zero[v];
  }
  return census;
}

Integer count_hamiltonian_paths(const Digraph& g, const VertexSet& from, const VertexSet& to) {
  check_census_size(g);
  const auto ends = end_counts_exact(g, to_mask(from, g.size()));
  Integer total = 0;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (to.contains(v)) total += ends[v];
  return total;
}

std::vector<bool> stockmeyer_A_odd_labels(std::size_t n) {
  check_order(n, "stockmeyer_A_odd_labels");
  std::vector<bool> odd(std::size_t{1} << n);
  for (std::size_t i = 0; i < odd.size(); ++i) odd[i] = (i + 1) % 2 == 1;
  return odd;
}

bool pouzet_identity_check(const Digraph& g, const Digraph& h) {
  if (g.size() != h.size()) throw std::invalid_argument("pouzet_identity_check: vertex counts differ");
  const Integer lhs = adjacency_determinant(g) - adjacency_determinant(h);
  Integer rhs = hamiltonian_census(g).cycles_total - hamiltonian_census(h).cycles_total;
  if (g.size() % 2 == 0) rhs = -rhs;
  return lhs == rhs;
}

namespace {

constexpr std::size_t kExplicitPathLimit = 2'000'000;

// Calls visit(path) for every Hamiltonian path of g.
void for_each_hamiltonian_path(const Digraph& g,
                               const std::function<void(const std::vector<std::size_t>&)>& visit) {
  const std::size_t n = g.size();
  const auto out = out_masks(g);
  std::vector<std::size_t> path;
  std::function<void(std::uint32_t)> extend = [&](std::uint32_t used) {
    if (path.size() == n) {
      visit(path);
      return;
    }
    std::uint32_t next = out[path.back()] & ~used;
    while (next) {
      const auto w = static_cast<std::size_t>(__builtin_ctz(next));
      next &= next - 1;
      path.push_back(w);
      extend(used | (1u << w));
      path.pop_back();
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    extend(1u << s);
  }
}

std::uint64_t encode(const std::vector<std::size_t>& path) {
  std::uint64_t code = 0;
  for (auto v : path) code = (code << 4) | v;
  return code;
}

}  // namespace

bool mirror_bijection_check(std::size_t n) {
  if (n < 1 || n > 4) throw std::invalid_argument("mirror_bijection_check: n must be in 1..4");
  const Digraph a = stockmeyer_A(n);
  const auto odd = stockmeyer_A_odd_labels(n);
  const std::size_t m = a.size();
  auto mirror = [m](std::size_t i) { return m - 1 - i; };

  for (std::size_t i = 0; i < m; ++i) {
    if (odd[i] == odd[mirror(i)]) return false;
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && a.has_arc(i, j) != a.has_arc(mirror(j), mirror(i))) return false;
  }

  const auto census = hamiltonian_census(a, odd);
  if (census.paths_oo != census.paths_ee) return false;
  if (census.paths_total > kExplicitPathLimit) return true;

  std::set<std::uint64_t> oo;
  std::set<std::uint64_t> ee;
  std::vector<std::vector<std::size_t>> oo_paths;
  for_each_hamiltonian_path(a, [&](const std::vector<std::size_t>& p) {
    if (odd[p.front()] && odd[p.back()]) {
      oo.insert(encode(p));
      oo_paths.push_back(p);
    } else if (!odd[p.front()] && !odd[p.back()]) {
      ee.insert(encode(p));
    }
  });
  if (census.paths_oo != oo.size() || census.paths_ee != ee.size()) return false;

  std::set<std::uint64_t> image;
  for (const auto& p : oo_paths) {
    std::vector<std::size_t> q(m);
    for (std::size_t k = 0; k < m; ++k) q[k] = mirror(p[m - 1 - k]);
    for (std::size_t k = 0; k + 1 < m; ++k)
      if (!a.has_arc(q[k], q[k + 1])) return false;
    image.insert(encode(q));
  }
  return image == ee;
}

bool parity_check(std::size_t n) {
  if (n < 3 || n > kMaxStockmeyerOrder) throw std::invalid_argument("parity_check: n must be in 3..6");
  return stockmeyer_row(n).parity_differs;
}

StockmeyerRow stockmeyer_row(std::size_t n) {
  check_order(n, "stockmeyer_row");
  StockmeyerRow row;
  row.n = n;
  row.det_b = adjacency_determinant(stockmeyer_B(n));
  row.det_c = adjacency_determinant(stockmeyer_C(n));
  row.difference = row.det_b - row.det_c;
  row.parity_differs = mpz_odd_p(row.det_b.get_mpz_t()) != mpz_odd_p(row.det_c.get_mpz_t());
  return row;
}

}  // namespace idio
