#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace idio {

inline constexpr std::size_t kMaxVertices = 128;

using Row = std::bitset<kMaxVertices>;
using Arc = std::pair<std::size_t, std::size_t>;

class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<std::size_t> members);
  explicit VertexSet(const std::vector<std::size_t>& members);

  static VertexSet all(std::size_t n);
  static VertexSet from_mask(std::uint64_t mask);

  void insert(std::size_t v) { bits_.set(check(v)); }
  void erase(std::size_t v) { bits_.reset(check(v)); }
  bool contains(std::size_t v) const { return v < kMaxVertices && bits_.test(v); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  /// Members in increasing order.
  std::vector<std::size_t> members() const;
  const Row& bits() const { return bits_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  static std::size_t check(std::size_t v) {
    if (v >= kMaxVertices) throw std::out_of_range("VertexSet: vertex out of range");
    return v;
  }

  Row bits_;
};

/// Loop-free digraph on vertices 0..n-1, stored as out- and in-neighbour
/// bitset rows.
class Digraph {
 public:
  explicit Digraph(std::size_t n);

  static Digraph from_arcs(std::size_t n, const std::vector<Arc>& arcs);

  std::size_t size() const { return n_; }

  bool has_arc(std::size_t u, std::size_t v) const { return out_[u].test(v); }
  void add_arc(std::size_t u, std::size_t v);
  void remove_arc(std::size_t u, std::size_t v);
  void set_arc(std::size_t u, std::size_t v, bool present);

  const Row& out_row(std::size_t u) const { return out_[u]; }
  const Row& in_row(std::size_t u) const { return in_[u]; }

  std::size_t out_degree(std::size_t u) const { return out_[u].count(); }
  std::size_t in_degree(std::size_t u) const { return in_[u].count(); }
  /// Number of v with both (u, v) and (v, u).
  std::size_t digon_degree(std::size_t u) const { return (out_[u] & in_[u]).count(); }

  std::size_t arc_count() const;
  /// Arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  /// Bit u*n + v set iff (u, v) is an arc; requires n <= 8.
  std::uint64_t code() const;
  static Digraph from_code(std::size_t n, std::uint64_t code);

  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  std::size_t n_;
  std::vector<Row> out_;
  std::vector<Row> in_;

  friend Digraph converse(const Digraph& g);
  friend Digraph invert_module(const Digraph& g, const VertexSet& w);
};

Digraph complement(const Digraph& g);
Digraph converse(const Digraph& g);

/// Subdigraph induced by w, relabelled in increasing order of original label.
Digraph induced(const Digraph& g, const VertexSet& w);

/// Every vertex outside w sees all of w the same way, in both directions.
bool is_module(const Digraph& g, const VertexSet& w);

/// Reverses every arc with both ends in w. Does not require w to be a module.
Digraph invert_module(const Digraph& g, const VertexSet& w);

/// All 3-subsets inducing a flag: one digon, one single arc, one non-adjacent
/// pair. Triples are listed in increasing lexicographic order.
std::vector<std::array<std::size_t, 3>> find_flags(const Digraph& g);
bool is_flag_free(const Digraph& g);

struct DigraphClass {
  bool is_tournament = false;
  bool is_oriented = false;
  bool is_symmetric = false;
  bool is_poset = false;

  friend bool operator==(const DigraphClass&, const DigraphClass&) = default;
};

DigraphClass classify(const Digraph& g);

/// Connectivity of the underlying undirected graph.
bool is_weakly_connected(const Digraph& g);

class OrientationError : public std::invalid_argument {
 public:
  enum class Kind { NotSymmetric, Disconnected, NotBipartite };

  OrientationError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// The two orientations of a connected bipartite graph across its
/// bipartition. The first orients every edge away from the side containing
/// vertex 0; the second is its converse.
std::pair<Digraph, Digraph> canonical_orientations(const Digraph& g);

/// Number of arcs of g[w].
std::size_t nu(const Digraph& g, const VertexSet& w);

/// All k-subsets of {0..n-1} in lexicographic order of their sorted members.
std::vector<VertexSet> k_subsets(std::size_t n, std::size_t k);

// Text format: first line n, then either "u v" arc lines or n rows of 0/1
// characters. '#' starts a comment.

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AdjacencyText {
  std::size_t n = 0;
  std::vector<Arc> arcs;  // may contain loops when allowed
};

AdjacencyText parse_adjacency_text(std::string_view text, bool allow_loops);
Digraph parse_digraph(std::string_view text);
Digraph read_digraph_file(const std::string& path);
std::string read_text_file(const std::string& path);

/// Edge-list form accepted by parse_digraph.
std::string format_digraph(const Digraph& g);

}  // namespace idio
