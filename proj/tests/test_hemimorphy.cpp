#include <doctest.h>

#include <stdexcept>

#include "generators.hpp"
#include "idio/hemimorphy.hpp"
#include "idio/spectral.hpp"
#include "oracles.hpp"

using namespace idio;
using idio::testing::Rng;

TEST_SUITE("hemimorphy") {
  TEST_CASE("isomorphism search agrees with brute force") {
    Rng rng(51);
    for (int i = 0; i < 300; ++i) {
      const std::size_t n = testing::uniform(rng, 1, 6);
      const Digraph g = testing::random_digraph(rng, n, 0.4);
      const Digraph h = i % 2 ? testing::relabel(g, testing::random_permutation(rng, n))
                              : testing::random_digraph(rng, n, 0.4);
      const auto phi = find_isomorphism(g, h);
      CHECK(phi.has_value() == testing::brute_isomorphic(g, h));
      if (phi) {
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = 0; v < n; ++v)
            if (u != v) CHECK(g.has_arc(u, v) == h.has_arc((*phi)[u], (*phi)[v]));
      }
      CHECK(are_hemimorphic(g, h) == testing::brute_hemimorphic(g, h));
    }
    CHECK_FALSE(are_isomorphic(Digraph(2), Digraph(3)));
  }

  TEST_CASE("isomorphism on larger relabelled tournaments") {
    Rng rng(52);
    for (int i = 0; i < 20; ++i) {
      const Digraph g = testing::random_tournament(rng, 16);
      CHECK(are_isomorphic(g, testing::relabel(g, testing::random_permutation(rng, 16))));
    }
  }

  TEST_CASE("three-vertex classes") {
    const auto classes = all_three_classes();
    CHECK(classes.size() == 13);
    for (std::size_t a = 0; a < classes.size(); ++a) {
      const Digraph rep = three_class_representative(classes[a]);
      CHECK(classify3(rep) == classes[a]);
      for (std::size_t b = a + 1; b < classes.size(); ++b)
        CHECK_FALSE(testing::brute_hemimorphic(rep, three_class_representative(classes[b])));
    }
    CHECK(classify3(Digraph::from_arcs(3, {{2, 1}, {2, 0}, {0, 2}})).label == ThreeLabel::F);
    CHECK(classify3(Digraph::from_arcs(3, {{1, 0}, {2, 0}})) == ThreeClass{ThreeLabel::G5, false});
    CHECK(classify3(complement(Digraph(3))) == ThreeClass{ThreeLabel::G1, true});
    CHECK(to_string(ThreeClass{ThreeLabel::D, true}) == "co-D");
    CHECK_THROWS_AS(classify3(Digraph(4)), std::invalid_argument);
    CHECK_THROWS_AS(three_class_representative({ThreeLabel::G3, true}), std::invalid_argument);
  }

  TEST_CASE("digon class polynomials") {
    const Digraph d = three_class_representative({ThreeLabel::D, false});
    CHECK(testing::leibniz_charpoly(to_poly_matrix(testing::adjacency_matrix(d))).str() == "X^3 - X");
    CHECK(testing::leibniz_charpoly(to_poly_matrix(testing::adjacency_matrix(complement(d)))).str() == "X^3 - 2*X");
  }

  TEST_CASE("three-way equivalence on all 3-vertex digraphs") {
    const Lemma3Report r = lemma_3idio_check();
    CHECK(r.ok());
    CHECK(r.pairs_checked == 4096);
    CHECK(r.idio_classes == 13);
    CHECK(r.charpoly_classes == 13);
    CHECK(r.hemimorphy_classes == 13);
    for (const auto& row : r.table) CHECK(row.matches_expected);
  }

  TEST_CASE("k-hemimorphy") {
    Rng rng(53);
    const Digraph g = testing::random_flag_free(rng, 6);
    CHECK(k_hemimorphic(g, g, 3));
    CHECK(k_hemimorphic(g, converse(g), 6));
    const Digraph c3 = Digraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
    const Digraph t3 = Digraph::from_arcs(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k_hemimorphic(c3, t3, 2));
    CHECK_FALSE(k_hemimorphic(c3, t3, 3));
    CHECK_THROWS_AS(k_hemimorphic(c3, t3, 0), std::invalid_argument);
  }

  TEST_CASE("inversion search finds planted sequences") {
    Rng rng(54);
    for (int i = 0; i < 60; ++i) {
      const Digraph g = testing::random_flag_free(rng, testing::uniform(rng, 2, 6));
      const Digraph h = testing::random_inversions(rng, g, 2);
      const auto trace = find_inversion_sequence(g, h, 2);
      REQUIRE(trace.has_value());
      CHECK(trace->steps.size() <= 2);
      CHECK(replay_trace(*trace));
    }
    const Digraph g = Digraph::from_arcs(3, {{0, 1}});
    const auto same = find_inversion_sequence(g, g);
    REQUIRE(same.has_value());
    CHECK(same->steps.empty());
    CHECK_FALSE(find_inversion_sequence(g, Digraph(3)).has_value());
    CHECK_THROWS_AS(find_inversion_sequence(Digraph(9), Digraph(9)), std::invalid_argument);
  }

  TEST_CASE("replay rejects non-modules and wrong endpoints") {
    const Digraph path = Digraph::from_arcs(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(replay_trace({path, Digraph::from_arcs(3, {{1, 0}, {1, 2}}), {VertexSet{0, 1}}}));
    CHECK(replay_trace({path, converse(path), {VertexSet{0, 1, 2}}}));
    CHECK_FALSE(replay_trace({path, path, {VertexSet{0, 1, 2}}}));
  }

  TEST_CASE("main theorem verdicts") {
    Rng rng(55);
    for (int i = 0; i < 30; ++i) {
      const Digraph g = testing::random_flag_free(rng, testing::uniform(rng, 5, 7));
      const Digraph h = testing::random_inversions(rng, g, 3);
      for (auto mode : {DeckComparison::Pointwise, DeckComparison::Multiset}) {
        const TheoremVerdict v = main_theorem_verify(g, h, mode, 2);
        CHECK(v.premises_hold());
        CHECK(v.idio_equal);
        CHECK_FALSE(v.violation);
      }
    }
    const Digraph g = Digraph::from_arcs(5, {{0, 1}, {1, 2}, {2, 1}});
    const TheoremVerdict v = main_theorem_verify(g, g);
    CHECK_FALSE(v.flag_free_g);
    CHECK_FALSE(v.premises_hold());
    CHECK_FALSE(v.violation);
    CHECK_THROWS_AS(main_theorem_verify(Digraph(4), Digraph(4)), std::invalid_argument);
    CHECK_THROWS_AS(main_theorem_verify(Digraph(5), Digraph(6)), std::invalid_argument);
  }
}
