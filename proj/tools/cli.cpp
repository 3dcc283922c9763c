#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

#include "idio/coates.hpp"
#include "idio/hemimorphy.hpp"
#include "idio/matrix.hpp"
#include "idio/parallel.hpp"
#include "idio/serialize.hpp"
#include "idio/spectral.hpp"
#include "idio/stockmeyer.hpp"

namespace idio::cli {

namespace {

// Raised for bad arguments that CLI11 cannot catch by itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* pass_fail(bool b) { return b ? "PASS" : "FAIL"; }
int verdict(bool ok) { return ok ? kPass : kCheckFailed; }

std::string set_string(const std::vector<std::size_t>& members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(members[i]);
  }
  return s + "}";
}

std::string arc_list(const Digraph& g) {
  std::string s;
  for (auto [u, v] : g.arcs()) {
    if (!s.empty()) s += " ";
    s += std::to_string(u) + "->" + std::to_string(v);
  }
  return s.empty() ? "(none)" : s;
}

struct Options {
  unsigned threads = 0;
  std::string file_a;
  std::string file_b;
  bool complement = false;
  bool converse = false;
  bool seidel = false;
  std::size_t k = 0;
  bool json = false;
  std::size_t deck_k = 0;
  bool main_theorem = false;
  bool multiset = false;
  std::size_t n = 0;
  bool census = false;
  bool parity = false;
  bool pouzet = false;
  bool hypomorphy = false;
  bool mirror = false;
  std::size_t depth = kDefaultInversionDepth;
};

int cmd_idio(const Options& o, std::ostream& out) {
  out << idiosyncratic(read_digraph_file(o.file_a)).str() << '\n';
  return kPass;
}

int cmd_charpoly(const Options& o, std::ostream& out) {
  const Digraph g = read_digraph_file(o.file_a);
  MPoly p;
  if (o.complement)
    p = adjacency_charpoly(complement(g));
  else if (o.converse)
    p = adjacency_charpoly(converse(g));
  else if (o.seidel)
    p = seidel_charpoly(g);
  else
    p = adjacency_charpoly(g);
  out << p.str() << '\n';
  return kPass;
}

int cmd_deck(const Options& o, std::ostream& out, std::ostream& err) {
  const Digraph g = read_digraph_file(o.file_a);
  if (o.k < 1 || o.k > g.size()) throw UsageError("-k must be between 1 and the vertex count");
  err << "computing the " << o.k << "-deck\n";
  const Deck deck = idio_deck(g, o.k, o.threads);
  if (o.json) {
    out << nlohmann::json(deck).dump(2) << '\n';
  } else {
    for (const auto& p : deck.polys) out << p << '\n';
  }
  return kPass;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const Digraph g = read_digraph_file(o.file_a);
  const Digraph h = read_digraph_file(o.file_b);
  if (g.size() != h.size()) throw UsageError("digraphs have different vertex counts");

  if (o.main_theorem) {
    if (g.size() < 5) throw UsageError("--main-theorem needs at least 5 vertices");
    err << "checking the 3-deck and both polynomials\n";
    const TheoremVerdict v = main_theorem_verify(
        g, h, o.multiset ? DeckComparison::Multiset : DeckComparison::Pointwise, o.threads);
    if (o.json) {
      out << nlohmann::json(v).dump(2) << '\n';
    } else {
      out << "flag-free first: " << yes_no(v.flag_free_g) << '\n'
          << "flag-free second: " << yes_no(v.flag_free_h) << '\n'
          << (o.multiset ? "3-deck multisets equal: " : "3-subsets pointwise equal: ")
          << yes_no(v.deck3_equal) << '\n'
          << "idiosyncratic equal: " << yes_no(v.idio_equal) << '\n'
          << "verdict: "
          << (v.violation ? "VIOLATION" : v.premises_hold() ? "PASS" : "PREMISES NOT MET") << '\n';
    }
    return verdict(!v.violation);
  }

  if (o.deck_k > 0) {
    if (o.deck_k > g.size()) throw UsageError("--deck must not exceed the vertex count");
    const Deck a = idio_deck(g, o.deck_k, o.threads);
    const Deck b = idio_deck(h, o.deck_k, o.threads);
    const bool equal = a == b;
    if (o.json)
      out << nlohmann::json{{"k", o.deck_k}, {"equal", equal}}.dump(2) << '\n';
    else
      out << o.deck_k << "-deck: " << (equal ? "equal" : "different") << '\n';
    return verdict(equal);
  }

  const bool equal = idiosyncratic(g) == idiosyncratic(h);
  if (o.json)
    out << nlohmann::json{{"idio_equal", equal}}.dump(2) << '\n';
  else
    out << "idiosyncratic: " << (equal ? "equal" : "different") << '\n';
  return verdict(equal);
}

int cmd_lemma3(std::ostream& out) {
  const Lemma3Report r = lemma_3idio_check();
  out << "class\tP\tP of complement\n";
  for (const auto& row : r.table) {
    if (row.cls.complemented) continue;
    out << to_string(row.cls) << '\t' << row.charpoly.str() << '\t'
        << row.complement_charpoly.str() << '\n';
  }
  out << "pairs checked: " << r.pairs_checked << '\n'
      << "classes: idiosyncratic " << r.idio_classes << ", charpoly pairs " << r.charpoly_classes
      << ", hemimorphy " << r.hemimorphy_classes << '\n';
  for (const auto& v : r.violations) out << "violation: " << v << '\n';
  out << "three equivalences agree: " << pass_fail(r.ok()) << '\n';
  return verdict(r.ok());
}

int cmd_stockmeyer(const Options& o, std::ostream& out, std::ostream& err) {
  const std::size_t n = o.n;
  const std::string sub = "_" + std::to_string(n);
  if (o.parity) {
    if (n < 3) throw UsageError("--parity needs n >= 3");
    const bool ok = parity_check(n);
    out << "det(B" << sub << ") mod 2 ≠ det(C" << sub << ") mod 2: " << pass_fail(ok) << '\n';
    return verdict(ok);
  }
  if (o.hypomorphy) {
    if (n > 3) throw UsageError("--hypomorphy supports n <= 3");
    const bool ok = hypomorphy_check(n);
    out << "B" << sub << " - k isomorphic to C" << sub << " - (2^" << n
        << " + 1 - k) for every k: " << pass_fail(ok) << '\n';
    return verdict(ok);
  }
  if (o.mirror) {
    if (n > 4) throw UsageError("--mirror supports n <= 4");
    const auto c = hamiltonian_census(stockmeyer_A(n), stockmeyer_A_odd_labels(n));
    const bool ok = mirror_bijection_check(n);
    out << "|P_oo| = " << c.paths_oo << ", |P_ee| = " << c.paths_ee << '\n'
        << "mirror map bijective: " << pass_fail(ok) << '\n';
    return verdict(ok);
  }
  if (o.census || o.pouzet) {
    if (n > 4) throw UsageError("--census and --pouzet support n <= 4");
    err << "counting Hamiltonian paths and cycles\n";
    const Digraph b = stockmeyer_B(n);
    const Digraph c = stockmeyer_C(n);
    const auto cb = hamiltonian_census(b);
    const auto cc = hamiltonian_census(c);
    if (o.pouzet) {
      const Integer lhs = adjacency_determinant(b) - adjacency_determinant(c);
      Integer rhs = cb.cycles_total - cc.cycles_total;
      if (b.size() % 2 == 0) rhs = -rhs;
      const bool ok = pouzet_identity_check(b, c);
      out << "det(B" << sub << ") - det(C" << sub << ") = " << lhs << '\n'
          << "(-1)^(" << b.size() << "+1) (C(B" << sub << ") - C(C" << sub << ")) = " << rhs << '\n'
          << "identity: " << pass_fail(ok) << '\n';
      return verdict(ok);
    }
    const auto ca = hamiltonian_census(stockmeyer_A(n), stockmeyer_A_odd_labels(n));
    out << "digraph\tpaths\tcycles\tP_oo\tP_ee\tP_oe\tP_eo\n"
        << "A" << sub << '\t' << ca.paths_total << '\t' << ca.cycles_total << '\t' << ca.paths_oo
        << '\t' << ca.paths_ee << '\t' << ca.paths_oe << '\t' << ca.paths_eo << '\n'
        << "B" << sub << '\t' << cb.paths_total << '\t' << cb.cycles_total << "\t-\t-\t-\t-\n"
        << "C" << sub << '\t' << cc.paths_total << '\t' << cc.cycles_total << "\t-\t-\t-\t-\n";
    const bool odd = mpz_odd_p(ca.paths_total.get_mpz_t()) && mpz_odd_p(cb.paths_total.get_mpz_t()) &&
                     mpz_odd_p(cc.paths_total.get_mpz_t());
    out << "odd path counts: " << pass_fail(odd) << '\n';
    return verdict(odd);
  }
  const StockmeyerRow row = stockmeyer_row(n);
  out << "n\tdet(B_n)\tdet(C_n)\tdifference\tparity\n"
      << row.n << '\t' << row.det_b << '\t' << row.det_c << '\t' << row.difference << '\t'
      << (row.parity_differs ? "differs" : "same") << '\n';
  return kPass;
}

int cmd_counterexample(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n < 5 || o.n > 10) throw UsageError("-n must be between 5 and 10");
  err << "comparing all proper induced subdigraphs\n";
  const CounterexampleReport r = verify_counterexample(o.n, o.threads);
  if (o.json) {
    out << nlohmann::json(r).dump(2) << '\n';
  } else {
    out << "n: " << r.n << '\n'
        << "det difference of complements: " << r.det_diff << '\n'
        << "proper induced subdigraphs agree: " << yes_no(r.deck_all_equal) << '\n'
        << "idiosyncratic polynomials equal: " << yes_no(r.global_idio_equal) << '\n'
        << "flags:";
    for (const auto& f : r.flags_found) out << ' ' << set_string({f.begin(), f.end()});
    out << '\n' << "separating pair: " << pass_fail(r.separates()) << '\n';
  }
  return verdict(r.separates());
}

int cmd_coates(const Options& o, std::ostream& out) {
  const AdjacencyText text = parse_adjacency_text(read_text_file(o.file_a), true);
  if (text.n > kMaxCoatesVertices)
    throw UsageError("coates supports at most " + std::to_string(kMaxCoatesVertices) + " vertices");
  LoopDigraph h(text.n);
  for (auto [u, v] : text.arcs) h.set_arc(u, v);
  const auto linear = linear_subdigraphs(h);
  std::map<std::size_t, std::size_t> by_cycles;
  for (const auto& l : linear) ++by_cycles[l.cycle_count];
  const Integer coates = coates_determinant(h);
  const Integer elimination = determinant(h.matrix());
  out << "linear subdigraphs: " << linear.size() << '\n' << "by cycle count:";
  for (auto [c, count] : by_cycles) out << ' ' << c << ':' << count;
  out << '\n'
      << "coates determinant: " << coates << '\n'
      << "elimination determinant: " << elimination << '\n'
      << "agree: " << pass_fail(coates == elimination) << '\n';
  return verdict(coates == elimination);
}

int cmd_inversion(const Options& o, std::ostream& out, std::ostream& err) {
  const Digraph g = read_digraph_file(o.file_a);
  const Digraph h = read_digraph_file(o.file_b);
  if (g.size() != h.size()) throw UsageError("digraphs have different vertex counts");
  if (g.size() > kMaxInversionVertices)
    throw UsageError("inversion supports at most " + std::to_string(kMaxInversionVertices) + " vertices");
  err << "searching up to depth " << o.depth << '\n';
  const auto trace = find_inversion_sequence(g, h, o.depth);
  if (!trace) {
    out << "NOT-FOUND\n";
    return kCheckFailed;
  }
  for (const auto& w : trace->steps) out << "invert " << set_string(w.members()) << '\n';
  out << "steps: " << trace->steps.size() << '\n';
  return kPass;
}

int cmd_orient(const Options& o, std::ostream& out) {
  const Digraph g = read_digraph_file(o.file_a);
  std::pair<Digraph, Digraph> both{Digraph(1), Digraph(1)};
  try {
    both = canonical_orientations(g);
  } catch (const OrientationError& e) {
    throw UsageError(e.what());
  }
  const MPoly p = adjacency_charpoly(g);
  bool ok = true;
  int index = 1;
  for (const Digraph* d : {&both.first, &both.second}) {
    const MPoly q = seidel_charpoly(*d);
    const bool holds = gaussian_identity_check(p, q, static_cast<unsigned>(g.size()));
    ok = ok && holds;
    out << "orientation " << index++ << ": " << arc_list(*d) << '\n'
        << "  idiosyncratic: " << idiosyncratic(*d).str() << '\n'
        << "  seidel: " << q.str() << '\n';
  }
  out << "adjacency charpoly: " << p.str() << '\n'
      << "Q(X) = i^n P(-iX): " << pass_fail(ok) << '\n';
  return verdict(ok);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Idiosyncratic polynomials of digraphs", "idio"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "Worker threads (0 = IDIO_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);

  std::function<int()> action;

  auto* idio = app.add_subcommand("idio", "Print the idiosyncratic polynomial");
  idio->add_option("file", o.file_a, "Digraph file")->required();
  idio->callback([&] { action = [&] { return cmd_idio(o, out); }; });

  auto* charpoly = app.add_subcommand("charpoly", "Print a characteristic polynomial");
  charpoly->add_option("file", o.file_a, "Digraph file")->required();
  auto* f_complement = charpoly->add_flag("--complement", o.complement, "Of the complement");
  auto* f_converse = charpoly->add_flag("--converse", o.converse, "Of the converse");
  auto* f_seidel = charpoly->add_flag("--seidel", o.seidel, "Of A - A^T");
  f_complement->excludes(f_converse)->excludes(f_seidel);
  f_converse->excludes(f_seidel);
  charpoly->callback([&] { action = [&] { return cmd_charpoly(o, out); }; });

  auto* deck = app.add_subcommand("deck", "Print the k-deck of idiosyncratic polynomials");
  deck->add_option("file", o.file_a, "Digraph file")->required();
  deck->add_option("-k", o.k, "Subset size")->required();
  deck->add_flag("--json", o.json, "JSON output");
  deck->callback([&] { action = [&] { return cmd_deck(o, out, err); }; });

  auto* compare = app.add_subcommand("compare", "Compare two digraphs");
  compare->add_option("first", o.file_a, "Digraph file")->required();
  compare->add_option("second", o.file_b, "Digraph file")->required();
  auto* f_deck = compare->add_option("--deck", o.deck_k, "Compare k-decks")->check(CLI::PositiveNumber);
  auto* f_main = compare->add_flag("--main-theorem", o.main_theorem,
                                   "Flag-free 3-deck reconstruction verdict");
  f_deck->excludes(f_main);
  compare->add_flag("--multiset", o.multiset, "Compare 3-decks as multisets")->needs(f_main);
  compare->add_flag("--json", o.json, "JSON output");
  compare->callback([&] { action = [&] { return cmd_compare(o, out, err); }; });

  auto* lemma3 = app.add_subcommand("lemma3", "Exhaustive check on 3-vertex digraphs");
  lemma3->callback([&] { action = [&] { return cmd_lemma3(out); }; });

  auto* stock = app.add_subcommand("stockmeyer", "Stockmeyer tournaments");
  stock->add_option("-n", o.n, "Order (2^n + 1 vertices)")->required()->check(CLI::Range(1, 6));
  auto* s_census = stock->add_flag("--census", o.census, "Hamiltonian path and cycle counts");
  auto* s_parity = stock->add_flag("--parity", o.parity, "Determinant parity check");
  auto* s_pouzet = stock->add_flag("--pouzet", o.pouzet, "Determinant and cycle count identity");
  auto* s_hypo = stock->add_flag("--hypomorphy", o.hypomorphy, "Vertex-deleted isomorphisms");
  auto* s_mirror = stock->add_flag("--mirror", o.mirror, "Mirror bijection on Hamiltonian paths");
  const std::vector<CLI::Option*> modes{s_census, s_parity, s_pouzet, s_hypo, s_mirror};
  for (std::size_t i = 0; i < modes.size(); ++i)
    for (std::size_t j = i + 1; j < modes.size(); ++j) modes[i]->excludes(modes[j]);
  stock->callback([&] { action = [&] { return cmd_stockmeyer(o, out, err); }; });

  auto* counter = app.add_subcommand("counterexample", "Pair with equal proper decks");
  counter->add_option("-n", o.n, "Largest vertex label")->required();
  counter->add_flag("--json", o.json, "JSON output");
  counter->callback([&] { action = [&] { return cmd_counterexample(o, out, err); }; });

  auto* coates = app.add_subcommand("coates", "Determinant via linear subdigraphs");
  coates->add_option("file", o.file_a, "Digraph file, loops allowed")->required();
  coates->callback([&] { action = [&] { return cmd_coates(o, out); }; });

  auto* inversion = app.add_subcommand("inversion", "Search for a module inversion sequence");
  inversion->add_option("first", o.file_a, "Digraph file")->required();
  inversion->add_option("second", o.file_b, "Digraph file")->required();
  inversion->add_option("--depth", o.depth, "Maximum number of inversions");
  inversion->callback([&] { action = [&] { return cmd_inversion(o, out, err); }; });

  auto* orient = app.add_subcommand("orient", "Canonical orientations of a bipartite graph");
  orient->add_option("file", o.file_a, "Symmetric digraph file")->required();
  orient->callback([&] { action = [&] { return cmd_orient(o, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace idio::cli
