#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "idio/digraph.hpp"
#include "idio/poly.hpp"

namespace idio {

/// A vertex bijection phi with (u, v) in G iff (phi[u], phi[v]) in H, found
/// by backtracking over (out, in, digon)-degree compatible candidates.
std::optional<std::vector<std::size_t>> find_isomorphism(const Digraph& g, const Digraph& h);
bool are_isomorphic(const Digraph& g, const Digraph& h);

/// Isomorphic, or isomorphic after reversing every arc of g.
bool are_hemimorphic(const Digraph& g, const Digraph& h);

/// g[W] and h[W] hemimorphic for every k-subset W, compared subset by subset.
bool k_hemimorphic(const Digraph& g, const Digraph& h, std::size_t k);

// Three-vertex digraphs up to hemimorphy and complementation. G1..G6 and F
// are the empty digraph, a single arc, the 3-cycle, the transitive
// tournament, the out-star, the 2-path and the flag. D (one digon plus an
// isolated vertex) completes the list: it is hemimorphic to none of the
// others, nor is its complement.
enum class ThreeLabel { G1, G2, G3, G4, G5, G6, F, D };

std::string to_string(ThreeLabel label);

struct ThreeClass {
  ThreeLabel label;
  bool complemented = false;

  friend bool operator==(const ThreeClass&, const ThreeClass&) = default;
};

std::string to_string(const ThreeClass& cls);

/// Classes whose complement is a different hemimorphy class.
bool has_distinct_complement(ThreeLabel label);

/// Every class, uncomplemented first: 13 entries.
std::vector<ThreeClass> all_three_classes();

Digraph three_class_representative(const ThreeClass& cls);

/// Requires a 3-vertex digraph (std::invalid_argument otherwise).
ThreeClass classify3(const Digraph& g);

struct Lemma3Row {
  ThreeClass cls;
  MPoly charpoly;             // P_G
  MPoly complement_charpoly;  // P of the complement
  bool matches_expected = false;
};

struct Lemma3Report {
  std::vector<Lemma3Row> table;
  std::size_t pairs_checked = 0;
  std::size_t idio_classes = 0;
  std::size_t charpoly_classes = 0;
  std::size_t hemimorphy_classes = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Runs the three-way equivalence (equal idiosyncratic polynomials, equal
/// charpoly and complement charpoly, hemimorphy) over all 64 x 64 ordered
/// pairs of labelled 3-vertex digraphs and checks the class polynomial table.
Lemma3Report lemma_3idio_check();

struct InversionTrace {
  Digraph start;
  Digraph end;
  std::vector<VertexSet> steps;
};

/// Checks that each step is a module of the current digraph and that the
/// replay ends exactly at trace.end.
bool replay_trace(const InversionTrace& trace);

inline constexpr std::size_t kMaxInversionVertices = 8;
inline constexpr std::size_t kDefaultInversionDepth = 6;

/// Breadth-first search for a shortest sequence of module inversions turning
/// g into h on the same labelled vertex set. nullopt means nothing was found
/// within depth_cap, which is inconclusive. Requires equal sizes and at most
/// kMaxInversionVertices vertices.
std::optional<InversionTrace> find_inversion_sequence(const Digraph& g, const Digraph& h,
                                                      std::size_t depth_cap = kDefaultInversionDepth);

enum class DeckComparison { Pointwise, Multiset };

struct TheoremVerdict {
  bool flag_free_g = false;
  bool flag_free_h = false;
  bool deck3_equal = false;
  bool idio_equal = false;
  bool violation = false;

  bool premises_hold() const { return flag_free_g && flag_free_h && deck3_equal; }
};

/// Tests the flag-free 3-deck reconstruction statement on one pair. Requires
/// equal sizes and n >= 5.
TheoremVerdict main_theorem_verify(const Digraph& g, const Digraph& h,
                                   DeckComparison mode = DeckComparison::Pointwise,
                                   unsigned threads = 1);

}  // namespace idio
