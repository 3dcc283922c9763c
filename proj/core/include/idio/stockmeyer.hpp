#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "idio/digraph.hpp"
#include "idio/poly.hpp"

namespace idio {

/// Largest odd divisor; requires x >= 1.
std::uint64_t odd_part(std::int64_t x);

inline constexpr std::size_t kMaxStockmeyerOrder = 6;

// Stockmeyer tournaments. A_n lives on labels 1..2^n stored at index
// label - 1. B_n and C_n add label 0 and store label i at index i.
Digraph stockmeyer_A(std::size_t n);
Digraph stockmeyer_B(std::size_t n);
Digraph stockmeyer_C(std::size_t n);

/// B_n - k isomorphic to C_n - (2^n + 1 - k) for every k in 1..2^n, and
/// B_n - 0 = C_n - 0 = A_n. Requires 1 <= n <= 3.
bool hypomorphy_check(std::size_t n);

/// Determinant of the 0/1 adjacency matrix.
Integer adjacency_determinant(const Digraph& g);

inline constexpr std::size_t kMaxCensusVertices = 24;

struct HamiltonianCensus {
  Integer paths_total;
  Integer cycles_total;
  // Filled when a classification is supplied. Index by (start odd, end odd):
  // oo, ee, oe, eo.
  bool classified = false;
  Integer paths_oo;
  Integer paths_ee;
  Integer paths_oe;
  Integer paths_eo;
};

/// Exact Hamiltonian path and cycle counts by subset dynamic programming.
/// odd[v] marks vertex v as belonging to the odd class. Throws
/// std::invalid_argument above kMaxCensusVertices vertices and
/// std::runtime_error if the tables cannot be allocated.
HamiltonianCensus hamiltonian_census(const Digraph& g,
                                     const std::optional<std::vector<bool>>& odd = std::nullopt);

/// Hamiltonian paths starting in `from` and ending in `to`.
Integer count_hamiltonian_paths(const Digraph& g, const VertexSet& from, const VertexSet& to);

/// Odd-label classification of A_n: index i holds label i + 1.
std::vector<bool> stockmeyer_A_odd_labels(std::size_t n);

/// det(G) - det(H) = (-1)^(n+1) (C(G) - C(H)), C counting Hamiltonian cycles.
bool pouzet_identity_check(const Digraph& g, const Digraph& h);

/// The mirror map x -> 2^n + 1 - x with path reversal sends the Hamiltonian
/// paths of A_n joining odd labels bijectively onto those joining even
/// labels. Requires 1 <= n <= 4. Paths are enumerated explicitly while their
/// number stays below an internal limit; beyond it the check relies on the
/// map being an arc-reversing involution plus the exact class counts.
bool mirror_bijection_check(std::size_t n);

/// det(B_n) and det(C_n) have different parity. Requires 3 <= n <= 6.
bool parity_check(std::size_t n);

struct StockmeyerRow {
  std::size_t n = 0;
  Integer det_b;
  Integer det_c;
  Integer difference;  // det_b - det_c
  bool parity_differs = false;
};

/// Requires 1 <= n <= 6.
StockmeyerRow stockmeyer_row(std::size_t n);

}  // namespace idio
