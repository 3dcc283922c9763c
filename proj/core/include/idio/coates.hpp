#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "idio/digraph.hpp"
#include "idio/matrix.hpp"
#include "idio/poly.hpp"

namespace idio {

/// Digraph whose relation may include loops.
class LoopDigraph {
 public:
  explicit LoopDigraph(std::size_t n);

  static LoopDigraph from_digraph(const Digraph& g);
  /// Nonzero entries become arcs.
  static LoopDigraph from_matrix(const IntMatrix& m);

  std::size_t size() const { return n_; }
  bool has_arc(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  void set_arc(std::size_t u, std::size_t v, bool present = true);

  IntMatrix matrix() const;

  friend bool operator==(const LoopDigraph&, const LoopDigraph&) = default;

 private:
  std::size_t n_;
  std::vector<Row> rows_;
};

/// A spanning union of vertex-disjoint cycles, loops counting as cycles of
/// length one, stored as a successor permutation.
struct LinearSubdigraph {
  std::vector<std::size_t> successor;
  std::size_t cycle_count = 0;

  bool contains(std::size_t u, std::size_t v) const { return successor[u] == v; }
  /// Every cycle reversed.
  LinearSubdigraph converse() const;

  friend bool operator==(const LinearSubdigraph&, const LinearSubdigraph&) = default;
  friend auto operator<=>(const LinearSubdigraph&, const LinearSubdigraph&) = default;
};

inline constexpr std::size_t kMaxCoatesVertices = 10;

/// In lexicographic order of the successor vectors. Requires at most
/// kMaxCoatesVertices vertices.
std::vector<LinearSubdigraph> linear_subdigraphs(const LoopDigraph& h);

/// (-1)^n times the sum of (-1)^|L| over the linear subdigraphs.
Integer coates_determinant(const LoopDigraph& h);

/// Vertices 0..n: arc (0, 1), digons {i, i+1} for i = 1..n-2, then (n-1, n)
/// in the first digraph and (n, n-1) in the second. Requires n >= 5.
std::pair<Digraph, Digraph> counterexample_pair(std::size_t n);

/// [[A + I, 1], [1^t, 1]] for a 0/1 matrix A with zero diagonal.
IntMatrix bordered_matrix(const IntMatrix& a);

struct CounterexampleReport {
  std::size_t n = 0;
  Integer det_diff;  // det of the first complement minus det of the second
  bool deck_all_equal = false;
  bool global_idio_equal = false;
  std::vector<std::array<std::size_t, 3>> flags_found;

  /// Equal proper decks, different polynomials, flags present and a nonzero
  /// determinant difference.
  bool separates() const {
    return deck_all_equal && !global_idio_equal && !flags_found.empty() && det_diff != 0;
  }
};

/// Requires 5 <= n <= 10. Induced subdigraphs that coincide in the two
/// digraphs are skipped rather than recomputed.
CounterexampleReport verify_counterexample(std::size_t n, unsigned threads = 1);

/// Linear subdigraphs split by membership of two reference arcs:
/// [0] both, [1] first only, [2] second only, [3] neither.
std::array<std::vector<LinearSubdigraph>, 4> partition_linear_subdigraphs(
    const LoopDigraph& h, std::pair<std::size_t, std::size_t> first,
    std::pair<std::size_t, std::size_t> second);

struct PartitionReport {
  std::array<std::size_t, 4> sizes{};
  std::array<std::size_t, 4> sizes_reversed{};
  bool both_single_hamiltonian = false;  // class [0] is one Hamiltonian cycle
  bool both_empty_reversed = false;      // class [0] empty after the reversal
  bool first_only_equal = false;
  bool second_only_converse = false;
  bool neither_equal = false;
  Integer bordered_det_diff;

  bool ok() const {
    return both_single_hamiltonian && both_empty_reversed && first_only_equal &&
           second_only_converse && neither_equal;
  }
};

/// Partition argument on the bordered digraphs of counterexample_pair(n),
/// reference arcs (0, 1) and the arc between n-1 and n. Requires 5 <= n <= 8.
PartitionReport counterexample_partition_check(std::size_t n);

/// Characteristic polynomials of [[A11, a b^t], [b c^t, A22]] and of the same
/// matrix with A22 transposed agree. std::invalid_argument on inconsistent
/// dimensions.
bool hlowey_check(const PolyMatrix& a11, const PolyMatrix& a22, const std::vector<MPoly>& alpha,
                  const std::vector<MPoly>& beta, const std::vector<MPoly>& gamma);

/// For a module W of g: the generalized adjacency matrices of g and of
/// invert_module(g, W), with W ordered last, agree outside the W-block, the
/// W-blocks are transposes, the off-diagonal blocks factor with the all-one
/// vector on the W side, and hlowey_check holds on that factorization.
/// Throws std::invalid_argument if W is empty or not a module.
bool module_block_check(const Digraph& g, const VertexSet& w);

}  // namespace idio
