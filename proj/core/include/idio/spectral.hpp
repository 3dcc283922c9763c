#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "idio/digraph.hpp"
#include "idio/matrix.hpp"
#include "idio/poly.hpp"

namespace idio {

/// A + y(J - A - I) + z*A^T. Off-diagonal entry (i, j) is 1 + z for a digon,
/// 1 for a lone arc i->j, y + z for a lone arc j->i and y otherwise.
PolyMatrix generalized_adjacency(const Digraph& g);

/// Characteristic polynomial of the generalized adjacency matrix.
MPoly idiosyncratic(const Digraph& g);

/// Characteristic polynomial of the 0/1 adjacency matrix.
MPoly adjacency_charpoly(const Digraph& g);

/// Characteristic polynomial of A - A^T.
MPoly seidel_charpoly(const Digraph& g);

/// Multiset of idiosyncratic polynomials of the k-vertex induced
/// subdigraphs, as sorted canonical strings.
struct Deck {
  std::size_t k = 0;
  std::vector<std::string> polys;

  friend bool operator==(const Deck&, const Deck&) = default;
};

/// Requires 1 <= k <= n (std::invalid_argument otherwise). threads = 0 picks
/// the default worker count; the result does not depend on it.
Deck idio_deck(const Digraph& g, std::size_t k, unsigned threads = 1);

/// Whether equal idiosyncratic polynomials come with equal characteristic
/// polynomials of the digraphs, their complements and their converses.
/// Vacuously true when the idiosyncratic polynomials differ.
bool spectral_consequences_check(const Digraph& g, const Digraph& h);

}  // namespace idio
