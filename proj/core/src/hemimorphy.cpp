#include "idio/hemimorphy.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "idio/parallel.hpp"
#include "idio/spectral.hpp"

namespace idio {

namespace {

using Profile = std::tuple<std::size_t, std::size_t, std::size_t>;

Profile profile(const Digraph& g, std::size_t v) {
  return {g.out_degree(v), g.in_degree(v), g.digon_degree(v)};
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Digraph& g, const Digraph& h)
      : g_(g), h_(h), n_(g.size()), map_(n_, kUnmapped), used_(n_, false) {
    for (std::size_t v = 0; v < n_; ++v) {
      gp_.push_back(profile(g, v));
      hp_.push_back(profile(h, v));
    }
    // Most constrained vertices first: rarest profile, then highest degree.
    std::map<Profile, std::size_t> freq;
    for (const auto& p : gp_) ++freq[p];
    order_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      if (freq[gp_[a]] != freq[gp_[b]]) return freq[gp_[a]] < freq[gp_[b]];
      return std::get<0>(gp_[a]) + std::get<1>(gp_[a]) > std::get<0>(gp_[b]) + std::get<1>(gp_[b]);
    });
  }

  std::optional<std::vector<std::size_t>> run() {
    auto sorted_g = gp_;
    auto sorted_h = hp_;
    std::sort(sorted_g.begin(), sorted_g.end());
    std::sort(sorted_h.begin(), sorted_h.end());
    if (sorted_g != sorted_h) return std::nullopt;
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const std::size_t v = order_[depth];
    for (std::size_t w = 0; w < n_; ++w) {
      if (used_[w] || hp_[w] != gp_[v] || !consistent(v, w, depth)) continue;
      map_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
      map_[v] = kUnmapped;
    }
    return false;
  }

  bool consistent(std::size_t v, std::size_t w, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const std::size_t u = order_[i];
      const std::size_t x = map_[u];
      if (g_.has_arc(u, v) != h_.has_arc(x, w) || g_.has_arc(v, u) != h_.has_arc(w, x))
        return false;
    }
    return true;
  }

  const Digraph& g_;
  const Digraph& h_;
  std::size_t n_;
  std::vector<Profile> gp_;
  std::vector<Profile> hp_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Digraph& g, const Digraph& h) {
  if (g.size() != h.size() || g.arc_count() != h.arc_count()) return std::nullopt;
  return IsomorphismSearch(g, h).run();
}

bool are_isomorphic(const Digraph& g, const Digraph& h) { return find_isomorphism(g, h).has_value(); }

bool are_hemimorphic(const Digraph& g, const Digraph& h) {
  return are_isomorphic(g, h) || are_isomorphic(converse(g), h);
}

bool k_hemimorphic(const Digraph& g, const Digraph& h, std::size_t k) {
  if (g.size() != h.size()) throw std::invalid_argument("k_hemimorphic: vertex counts differ");
  if (k < 1 || k > g.size()) throw std::invalid_argument("k_hemimorphic: k must be in 1..n");
  for (const auto& w : k_subsets(g.size(), k)) {
    Digraph gw = induced(g, w);
    Digraph hw = induced(h, w);
    if (gw != hw && !are_hemimorphic(gw, hw)) return false;
  }
  return true;
}

std::string to_string(ThreeLabel label) {
  switch (label) {
    case ThreeLabel::G1: return "G1";
    case ThreeLabel::G2: return "G2";
    case ThreeLabel::G3: return "G3";
    case ThreeLabel::G4: return "G4";
    case ThreeLabel::G5: return "G5";
    case ThreeLabel::G6: return "G6";
    case ThreeLabel::F: return "F";
    case ThreeLabel::D: return "D";
  }
  return "?";
}

std::string to_string(const ThreeClass& cls) {
  return cls.complemented ? "co-" + to_string(cls.label) : to_string(cls.label);
}

bool has_distinct_complement(ThreeLabel label) {
  return label != ThreeLabel::G3 && label != ThreeLabel::G4 && label != ThreeLabel::F;
}

std::vector<ThreeClass> all_three_classes() {
  const ThreeLabel labels[] = {ThreeLabel::G1, ThreeLabel::G2, ThreeLabel::G3, ThreeLabel::G4,
                               ThreeLabel::G5, ThreeLabel::G6, ThreeLabel::F,  ThreeLabel::D};
  std::vector<ThreeClass> out;
  for (auto l : labels) out.push_back({l, false});
  for (auto l : labels)
    if (has_distinct_complement(l)) out.push_back({l, true});
  return out;
}

Digraph three_class_representative(const ThreeClass& cls) {
  std::vector<Arc> arcs;
  switch (cls.label) {
    case ThreeLabel::G1: break;
    case ThreeLabel::G2: arcs = {{0, 1}}; break;
    case ThreeLabel::G3: arcs = {{0, 1}, {1, 2}, {2, 0}}; break;
    case ThreeLabel::G4: arcs = {{0, 1}, {0, 2}, {1, 2}}; break;
    case ThreeLabel::G5: arcs = {{0, 1}, {0, 2}}; break;
    case ThreeLabel::G6: arcs = {{0, 1}, {1, 2}}; break;
    case ThreeLabel::F: arcs = {{0, 1}, {0, 2}, {2, 0}}; break;
    case ThreeLabel::D: arcs = {{0, 1}, {1, 0}}; break;
  }
  Digraph g = Digraph::from_arcs(3, arcs);
  if (cls.complemented) {
    if (!has_distinct_complement(cls.label))
      throw std::invalid_argument("three_class_representative: class is self-complementary");
    return complement(g);
  }
  return g;
}

ThreeClass classify3(const Digraph& g) {
  if (g.size() != 3) throw std::invalid_argument("classify3: requires exactly 3 vertices");
  for (const auto& cls : all_three_classes())
    if (are_hemimorphic(three_class_representative(cls), g)) return cls;
  throw std::logic_error("classify3: no class matched");
}

namespace {

struct ExpectedPair {
  ThreeLabel label;
  const char* charpoly;
  const char* complement_charpoly;
};

// Class polynomial table. The D row is not part of the classical list of
// seven and was computed by hand.
constexpr ExpectedPair kExpectedTable[] = {
    {ThreeLabel::G1, "X^3", "X^3 - 3*X - 2"},
    {ThreeLabel::G2, "X^3", "X^3 - 2*X - 1"},
    {ThreeLabel::G3, "X^3 - 1", "X^3 - 1"},
    {ThreeLabel::G4, "X^3", "X^3"},
    {ThreeLabel::G5, "X^3", "X^3 - X"},
    {ThreeLabel::G6, "X^3", "X^3 - X - 1"},
    {ThreeLabel::F, "X^3 - X", "X^3 - X"},
    {ThreeLabel::D, "X^3 - X", "X^3 - 2*X"},
};

template <typename Key>
std::size_t count_distinct(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

}  // namespace

Lemma3Report lemma_3idio_check() {
  Lemma3Report report;

  for (const auto& cls : all_three_classes()) {
    Digraph rep = three_class_representative(cls);
    Lemma3Row row{cls, adjacency_charpoly(rep), adjacency_charpoly(complement(rep)), false};
    for (const auto& e : kExpectedTable) {
      if (e.label != cls.label) continue;
      MPoly p = MPoly::parse(e.charpoly);
      MPoly q = MPoly::parse(e.complement_charpoly);
      if (cls.complemented) std::swap(p, q);
      row.matches_expected = row.charpoly == p && row.complement_charpoly == q;
    }
    if (!row.matches_expected)
      report.violations.push_back("class " + to_string(cls) + ": polynomials " +
                                  row.charpoly.str() + " / " + row.complement_charpoly.str() +
                                  " differ from the table");
    report.table.push_back(std::move(row));
  }

  const Arc slots[] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  std::vector<Digraph> all;
  for (unsigned mask = 0; mask < 64; ++mask) {
    Digraph g(3);
    for (unsigned b = 0; b < 6; ++b)
      if (mask & (1u << b)) g.add_arc(slots[b].first, slots[b].second);
    all.push_back(g);
  }

  std::vector<std::string> idio_key;
  std::vector<std::string> charpoly_key;
  std::vector<ThreeClass> classes;
  for (const auto& g : all) {
    idio_key.push_back(idiosyncratic(g).str());
    charpoly_key.push_back(adjacency_charpoly(g).str() + " | " +
                           adjacency_charpoly(complement(g)).str());
    classes.push_back(classify3(g));
  }

  std::vector<std::size_t> hemi_rep(all.size());
  for (std::size_t a = 0; a < all.size(); ++a) {
    hemi_rep[a] = a;
    for (std::size_t b = 0; b < a; ++b) {
      if (hemi_rep[b] == b && are_hemimorphic(all[a], all[b])) {
        hemi_rep[a] = b;
        break;
      }
    }
  }

  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = 0; b < all.size(); ++b) {
      ++report.pairs_checked;
      const bool same_idio = idio_key[a] == idio_key[b];
      const bool same_charpolys = charpoly_key[a] == charpoly_key[b];
      const bool hemimorphic = are_hemimorphic(all[a], all[b]);
      if (same_idio != same_charpolys || same_charpolys != hemimorphic) {
        report.violations.push_back("pair (" + std::to_string(a) + ", " + std::to_string(b) +
                                    "): idio " + std::to_string(same_idio) + ", charpolys " +
                                    std::to_string(same_charpolys) + ", hemimorphic " +
                                    std::to_string(hemimorphic));
      }
      if (hemimorphic != (classes[a] == classes[b]))
        report.violations.push_back("pair (" + std::to_string(a) + ", " + std::to_string(b) +
                                    "): classify3 disagrees with hemimorphy");
    }
  }

  report.idio_classes = count_distinct(idio_key);
  report.charpoly_classes = count_distinct(charpoly_key);
  report.hemimorphy_classes = count_distinct(hemi_rep);
  return report;
}

bool replay_trace(const InversionTrace& trace) {
  if (trace.start.size() != trace.end.size()) return false;
  Digraph current = trace.start;
  for (const auto& w : trace.steps) {
    for (auto v : w.members())
      if (v >= current.size()) return false;
    if (!is_module(current, w)) return false;
    current = invert_module(current, w);
  }
  return current == trace.end;
}

std::optional<InversionTrace> find_inversion_sequence(const Digraph& g, const Digraph& h,
                                                      std::size_t depth_cap) {
  const std::size_t n = g.size();
  if (h.size() != n) throw std::invalid_argument("find_inversion_sequence: vertex counts differ");
  if (n > kMaxInversionVertices)
    throw std::invalid_argument("find_inversion_sequence: at most " +
                                std::to_string(kMaxInversionVertices) + " vertices supported");

  InversionTrace trace{g, h, {}};
  const std::uint64_t start = g.code();
  const std::uint64_t target = h.code();
  if (start == target) return trace;

  std::vector<std::uint32_t> candidates;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
    if (std::popcount(mask) >= 2) candidates.push_back(mask);

  struct Parent {
    std::uint64_t code;
    std::uint32_t mask;
  };
  std::unordered_map<std::uint64_t, Parent> parent;
  parent.emplace(start, Parent{start, 0});

  std::vector<std::uint64_t> frontier{start};
  for (std::size_t depth = 0; depth < depth_cap && !frontier.empty(); ++depth) {
    std::vector<std::uint64_t> next;
    for (auto code : frontier) {
      const Digraph current = Digraph::from_code(n, code);
      for (auto mask : candidates) {
        const VertexSet w = VertexSet::from_mask(mask);
        if (!is_module(current, w)) continue;
        const std::uint64_t reached = invert_module(current, w).code();
        if (!parent.emplace(reached, Parent{code, mask}).second) continue;
        if (reached == target) {
          for (std::uint64_t at = target; at != start; at = parent.at(at).code)
            trace.steps.push_back(VertexSet::from_mask(parent.at(at).mask));
          std::reverse(trace.steps.begin(), trace.steps.end());
          return trace;
        }
        next.push_back(reached);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

TheoremVerdict main_theorem_verify(const Digraph& g, const Digraph& h, DeckComparison mode,
                                   unsigned threads) {
  if (g.size() != h.size()) throw std::invalid_argument("main_theorem_verify: vertex counts differ");
  if (g.size() < 5) throw std::invalid_argument("main_theorem_verify: requires at least 5 vertices");

  TheoremVerdict v;
  v.flag_free_g = is_flag_free(g);
  v.flag_free_h = is_flag_free(h);

  if (mode == DeckComparison::Multiset) {
    v.deck3_equal = idio_deck(g, 3, threads) == idio_deck(h, 3, threads);
  } else {
    const auto subsets = k_subsets(g.size(), 3);
    std::vector<char> equal(subsets.size(), 0);
    parallel_for(subsets.size(), threads, [&](std::size_t i) {
      Digraph gw = induced(g, subsets[i]);
      Digraph hw = induced(h, subsets[i]);
      equal[i] = gw == hw || idiosyncratic(gw) == idiosyncratic(hw);
    });
    v.deck3_equal = std::all_of(equal.begin(), equal.end(), [](char c) { return c != 0; });
  }

  v.idio_equal = idiosyncratic(g) == idiosyncratic(h);
  v.violation = v.premises_hold() && !v.idio_equal;
  return v;
}

}  // namespace idio
