#include <doctest.h>

#include <stdexcept>

#include "generators.hpp"
#include "idio/digraph.hpp"

using namespace idio;
using idio::testing::Rng;

namespace {

Digraph flag() { return Digraph::from_arcs(3, {{0, 1}, {0, 2}, {2, 0}}); }

}  // namespace

TEST_SUITE("digraph") {
  TEST_CASE("arcs, degrees and codes") {
    Digraph g(4);
    g.add_arc(0, 1);
    g.add_arc(1, 0);
    g.add_arc(2, 3);
    CHECK(g.arc_count() == 3);
    CHECK(g.out_degree(0) == 1);
    CHECK(g.in_degree(3) == 1);
    CHECK(g.digon_degree(0) == 1);
    CHECK(g.digon_degree(2) == 0);
    CHECK(g.arcs() == std::vector<Arc>{{0, 1}, {1, 0}, {2, 3}});
    CHECK(Digraph::from_code(4, g.code()) == g);
    g.remove_arc(1, 0);
    CHECK_FALSE(g.has_arc(1, 0));
    CHECK_THROWS(g.add_arc(2, 2));
    CHECK_THROWS(Digraph(0));
    CHECK_THROWS(Digraph(kMaxVertices + 1));
    CHECK_THROWS(Digraph(9).code());
  }

  TEST_CASE("complement and converse follow their definitions") {
    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
      const Digraph g = testing::random_digraph(rng, testing::uniform(rng, 1, 9));
      const Digraph c = complement(g);
      const Digraph t = converse(g);
      for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t v = 0; v < g.size(); ++v) {
          if (u == v) continue;
          CHECK(c.has_arc(u, v) == !g.has_arc(u, v));
          CHECK(t.has_arc(u, v) == g.has_arc(v, u));
        }
      }
      CHECK(complement(c) == g);
      CHECK(converse(t) == g);
    }
  }

  TEST_CASE("induced subdigraphs relabel in increasing order") {
    const Digraph g = Digraph::from_arcs(5, {{4, 1}, {1, 3}, {0, 2}});
    const Digraph h = induced(g, {1, 3, 4});
    CHECK(h == Digraph::from_arcs(3, {{2, 0}, {0, 1}}));
    CHECK_THROWS(induced(g, VertexSet{}));
    CHECK_THROWS(induced(g, {1, 7}));
  }

  TEST_CASE("modules and their inversion") {
    // 0 dominates the digon {1, 2}; 3 is dominated by everything.
    const Digraph g = Digraph::from_arcs(4, {{0, 1}, {0, 2}, {1, 2}, {2, 1}, {0, 3}, {1, 3}, {2, 3}});
    CHECK(is_module(g, {1, 2}));
    CHECK(is_module(g, {0, 1, 2}));
    CHECK(is_module(g, {3}));
    CHECK(is_module(g, VertexSet::all(4)));
    CHECK_FALSE(is_module(g, {0, 3}));
    const Digraph inv = invert_module(g, {0, 1, 2});
    CHECK(inv.has_arc(1, 0));
    CHECK_FALSE(inv.has_arc(0, 1));
    CHECK(inv.has_arc(1, 3));
    CHECK(invert_module(inv, {0, 1, 2}) == g);
    CHECK(invert_module(g, VertexSet::all(4)) == converse(g));
  }

  TEST_CASE("random modules stay modules after inversion") {
    Rng rng(32);
    for (int i = 0; i < 100; ++i) {
      const Digraph g = testing::random_flag_free(rng, testing::uniform(rng, 3, 8));
      for (const auto& w : testing::nontrivial_modules(g)) {
        const Digraph h = invert_module(g, w);
        CHECK(is_module(h, w));
        CHECK(invert_module(h, w) == g);
      }
    }
  }

  TEST_CASE("flags") {
    CHECK(find_flags(flag()).size() == 1);
    const Digraph other = Digraph::from_arcs(3, {{1, 0}, {0, 2}, {2, 0}});
    CHECK_FALSE(is_flag_free(other));
    CHECK(is_flag_free(Digraph::from_arcs(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}})));
    CHECK(find_flags(converse(flag())).size() == 1);
    CHECK(find_flags(complement(flag())).size() == 1);

    const Digraph g = Digraph::from_arcs(5, {{0, 1}, {1, 2}, {2, 1}, {3, 4}, {4, 3}, {2, 3}});
    const auto flags = find_flags(g);
    REQUIRE(flags.size() == 3);
    CHECK(flags[0] == std::array<std::size_t, 3>{0, 1, 2});
    CHECK(flags[1] == std::array<std::size_t, 3>{1, 2, 3});
    CHECK(flags[2] == std::array<std::size_t, 3>{2, 3, 4});
  }

  TEST_CASE("generated flag-free digraphs are flag-free") {
    Rng rng(33);
    for (int i = 0; i < 500; ++i) {
      const Digraph g = testing::random_flag_free(rng, testing::uniform(rng, 1, 9));
      CHECK(is_flag_free(g));
      CHECK(is_flag_free(testing::random_inversions(rng, g, 3)));
    }
  }

  TEST_CASE("classification") {
    Rng rng(34);
    const DigraphClass t = classify(testing::random_tournament(rng, 6));
    CHECK(t.is_tournament);
    CHECK(t.is_oriented);
    CHECK_FALSE(t.is_symmetric);
    CHECK(classify(testing::random_symmetric(rng, 5)).is_symmetric);
    CHECK(classify(Digraph::from_arcs(3, {{0, 1}, {1, 2}, {0, 2}})).is_poset);
    CHECK_FALSE(classify(Digraph::from_arcs(3, {{0, 1}, {1, 2}})).is_poset);
    CHECK_FALSE(classify(Digraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}})).is_poset);
    const DigraphClass empty = classify(Digraph(3));
    CHECK(empty.is_symmetric);
    CHECK(empty.is_oriented);
    CHECK(empty.is_poset);
    CHECK_FALSE(empty.is_tournament);
  }

  TEST_CASE("canonical orientations of bipartite graphs") {
    const Digraph path = Digraph::from_arcs(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
    const auto [a, b] = canonical_orientations(path);
    CHECK(a == Digraph::from_arcs(3, {{0, 1}, {2, 1}}));
    CHECK(b == converse(a));

    Rng rng(35);
    for (int i = 0; i < 50; ++i) {
      const Digraph g = testing::random_connected_bipartite(rng, testing::uniform(rng, 2, 9));
      const auto [o, p] = canonical_orientations(g);
      CHECK(o.arc_count() * 2 == g.arc_count());
      for (std::size_t v = 0; v < g.size(); ++v)
        CHECK((o.out_degree(v) == 0 || o.in_degree(v) == 0));
      CHECK(p == converse(o));
    }

    auto kind = [](const Digraph& g) {
      try {
        canonical_orientations(g);
      } catch (const OrientationError& e) {
        return static_cast<int>(e.kind());
      }
      return -1;
    };
    CHECK(kind(Digraph::from_arcs(2, {{0, 1}})) == static_cast<int>(OrientationError::Kind::NotSymmetric));
    CHECK(kind(Digraph(2)) == static_cast<int>(OrientationError::Kind::Disconnected));
    const Digraph triangle = Digraph::from_arcs(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
    CHECK(kind(triangle) == static_cast<int>(OrientationError::Kind::NotBipartite));
  }

  TEST_CASE("connectivity, arc counts and subsets") {
    CHECK(is_weakly_connected(Digraph::from_arcs(3, {{0, 1}, {2, 1}})));
    CHECK_FALSE(is_weakly_connected(Digraph::from_arcs(3, {{0, 1}})));
    CHECK(is_weakly_connected(Digraph(1)));
    const Digraph g = Digraph::from_arcs(4, {{0, 1}, {1, 0}, {2, 3}});
    CHECK(nu(g, {0, 1, 2}) == 2);
    CHECK(nu(g, VertexSet::all(4)) == 3);
    const auto subsets = k_subsets(5, 3);
    CHECK(subsets.size() == 10);
    CHECK(subsets.front() == VertexSet{0, 1, 2});
    CHECK(subsets[1] == VertexSet{0, 1, 3});
    CHECK(subsets.back() == VertexSet{2, 3, 4});
    CHECK(k_subsets(4, 0).size() == 1);
    CHECK(k_subsets(3, 4).empty());
  }

  TEST_CASE("vertex sets") {
    VertexSet s{3, 1};
    s.insert(5);
    CHECK(s.members() == std::vector<std::size_t>{1, 3, 5});
    s.erase(3);
    CHECK(s.size() == 2);
    CHECK(VertexSet::from_mask(0b1010) == VertexSet{1, 3});
    CHECK(VertexSet::all(3) == VertexSet{0, 1, 2});
    CHECK_THROWS(s.insert(kMaxVertices));
  }

  TEST_CASE("text format") {
    const Digraph g = parse_digraph("# comment\n3\n0 1  # trailing\n\n1 2\n");
    CHECK(g == Digraph::from_arcs(3, {{0, 1}, {1, 2}}));
    CHECK(parse_digraph("3\n010\n001\n100\n") == Digraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK(parse_digraph(format_digraph(g)) == g);
    CHECK(parse_digraph("1\n") == Digraph(1));

    auto message = [](const char* text) {
      try {
        parse_digraph(text);
      } catch (const ParseError& e) {
        return std::string(e.what());
      }
      return std::string();
    };
    CHECK(message("3\n0 1\n1 3\n").find("line 3") == 0);
    CHECK(message("3\n0 0\n").find("line 2") == 0);
    CHECK(message("3\n010\n001\n").find("line 3") == 0);
    CHECK(message("2\n01\n11\n").find("line 3") == 0);
    CHECK(message("x\n") != "");
    CHECK(message("") != "");
    CHECK(message("2\n0 1 2\n") != "");
    CHECK(message("2\n-1 0\n") != "");

    const AdjacencyText loops = parse_adjacency_text("2\n0 0\n0 1\n", true);
    CHECK(loops.arcs == std::vector<Arc>{{0, 0}, {0, 1}});
    CHECK_THROWS_AS(read_digraph_file("/nonexistent/file"), std::runtime_error);
  }
}
