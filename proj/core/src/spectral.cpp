#include "idio/spectral.hpp"

#include <algorithm>
#include <stdexcept>

#include "idio/parallel.hpp"

namespace idio {

PolyMatrix generalized_adjacency(const Digraph& g) {
  const std::size_t n = g.size();
  const MPoly y = MPoly::y();
  const MPoly z = MPoly::z();
  const MPoly digon = 1 + z;
  const MPoly reversed = y + z;
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool fwd = g.has_arc(i, j);
      const bool back = g.has_arc(j, i);
      if (fwd && back)
        m(i, j) = digon;
      else if (fwd)
        m(i, j) = 1;
      else if (back)
        m(i, j) = reversed;
      else
        m(i, j) = y;
    }
  }
  return m;
}

MPoly idiosyncratic(const Digraph& g) { return charpoly(generalized_adjacency(g)); }

MPoly adjacency_charpoly(const Digraph& g) {
  const std::size_t n = g.size();
  PolyMatrix m(n);
  for (auto [u, v] : g.arcs()) m(u, v) = 1;
  return charpoly(m);
}

MPoly seidel_charpoly(const Digraph& g) {
  const std::size_t n = g.size();
  PolyMatrix m(n);
  for (auto [u, v] : g.arcs()) {
    m(u, v) += 1;
    m(v, u) -= 1;
  }
  return charpoly(m);
}

Deck idio_deck(const Digraph& g, std::size_t k, unsigned threads) {
  if (k < 1 || k > g.size()) throw std::invalid_argument("idio_deck: k must be in 1..n");
  const auto subsets = k_subsets(g.size(), k);
  Deck deck{k, std::vector<std::string>(subsets.size())};
  parallel_for(subsets.size(), threads,
               [&](std::size_t i) { deck.polys[i] = idiosyncratic(induced(g, subsets[i])).str(); });
  std::sort(deck.polys.begin(), deck.polys.end());
  return deck;
}

bool spectral_consequences_check(const Digraph& g, const Digraph& h) {
  if (g.size() != h.size())
    throw std::invalid_argument("spectral_consequences_check: vertex counts differ");
  if (idiosyncratic(g) != idiosyncratic(h)) return true;
  return adjacency_charpoly(g) == adjacency_charpoly(h) &&
         adjacency_charpoly(complement(g)) == adjacency_charpoly(complement(h)) &&
         adjacency_charpoly(converse(g)) == adjacency_charpoly(converse(h));
}

}  // namespace idio
