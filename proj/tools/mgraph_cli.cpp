// Command-line front end. Exit status: 0 decided, 1 input error, 2 budget.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mgraph/digraph.hpp"
#include "mgraph/embed.hpp"
#include "mgraph/error.hpp"
#include "mgraph/families.hpp"
#include "mgraph/invariants.hpp"
#include "mgraph/recognize.hpp"
#include "mgraph/trees.hpp"
#include "mgraph/witness.hpp"
#include "mgraph/zelinka.hpp"

using namespace mgraph;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;

struct BudgetFlags {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 600;
  int workers = 1;

  Budget budget() const { return {max_nodes, max_seconds, workers}; }
};

void add_budget_flags(CLI::App* app, BudgetFlags& flags) {
  app->add_option("--max-nodes", flags.max_nodes, "search node budget")->capture_default_str();
  app->add_option("--max-seconds", flags.max_seconds, "wall-clock budget in seconds")
      ->capture_default_str();
  app->add_option("--workers", flags.workers, "worker threads")->capture_default_str();
}

template <typename Fn>
auto with_input(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") return fn(std::cin);
  std::ifstream file(path);
  if (!file) throw InputError("cannot open `" + path + "`");
  return fn(file);
}

AnyGraph load_graph(const std::string& path) {
  return with_input(path, [](std::istream& in) { return read_graph(in); });
}

Digraph load_digraph(const std::string& path) {
  auto g = load_graph(path);
  if (auto* d = std::get_if<Digraph>(&g)) return *d;
  throw InputError("expected a directed graph");
}

SimpleGraph load_simple(const std::string& path) {
  auto g = load_graph(path);
  if (auto* s = std::get_if<SimpleGraph>(&g)) return *s;
  throw InputError("expected an undirected graph");
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(10) << x;
  return s.str();
}

std::string fmt(const Rational& q) {
  std::ostringstream s;
  s << q << " (~" << std::setprecision(10) << static_cast<double>(q) << ")";
  return s.str();
}

// ---------------------------------------------------------------------------

int check_zelinka(const std::string& path) {
  const auto g = load_digraph(path);
  const auto p = profile(g);
  std::cout << "components " << p.components.size() << '\n';
  for (std::size_t i = 0; i < p.components.size(); ++i) {
    std::cout << "component " << i << " cycle_length " << p.components[i].cycle_length
              << " depth " << p.components[i].depth << '\n';
  }
  const auto m = decide_monoid(p);
  const auto s = decide_semigroup(p);
  std::cout << "monoid " << yes_no(m.has_value());
  if (m) std::cout << " component " << *m;
  std::cout << "\nsemigroup " << yes_no(s.has_value());
  if (s) std::cout << " component " << *s;
  std::cout << '\n';
  return 0;
}

int construct_zelinka(const std::string& path, bool semigroup) {
  const auto g = load_digraph(path);
  WitnessRecord r;
  r.mode = semigroup ? WitnessMode::semigroup_digraph : WitnessMode::monoid_digraph;
  r.witness = semigroup ? construct_semigroup(g) : construct_monoid(g);
  r.graph = g;
  write_witness(std::cout, r);
  return 0;
}

int embed_cmd(const std::string& path) {
  const auto g = load_graph(path);
  Embedding e;
  if (const auto* d = std::get_if<Digraph>(&g)) {
    e = embed_monoid(*d, greedy_cover(*d, d->max_out_degree()));
  } else {
    e = embed_undirected(std::get<SimpleGraph>(g));
  }
  WitnessRecord r;
  r.mode = WitnessMode::embedding;
  r.witness = e.witness;
  r.component = e.identity_component;
  if (std::holds_alternative<Digraph>(g)) {
    r.graph = e.digraph;
  } else {
    r.graph = g;
  }
  std::cout << "# monoid order " << e.witness.table.order() << ", |C| = "
            << e.witness.connection.size() << '\n';
  write_witness(std::cout, r);
  return 0;
}

int recognize_cmd(const std::string& path, const std::string& mode, bool generated,
                  int connection_size, const BudgetFlags& flags) {
  SearchOptions options;
  options.budget = flags.budget();
  options.require_generated = generated;
  if (connection_size > 0) options.connection_size = connection_size;
  SearchOutcome outcome;
  WitnessRecord r;
  if (mode == "monoid-graph") {
    const auto g = load_simple(path);
    outcome = recognize_monoid_graph(g, options);
    r.mode = generated ? WitnessMode::generated_monoid_tree : WitnessMode::monoid_graph;
    r.graph = g;
  } else {
    const auto g = load_digraph(path);
    if (mode == "monoid-digraph") {
      outcome = recognize_monoid_digraph(g, options);
      r.mode = WitnessMode::monoid_digraph;
    } else if (mode == "semigroup-digraph") {
      outcome = recognize_semigroup_digraph(g, options);
      r.mode = WitnessMode::semigroup_digraph;
    } else if (mode == "sabidussi") {
      outcome = sabidussi_check(g, options);
      r.mode = WitnessMode::monoid_digraph;
    } else {
      throw InputError("unknown mode `" + mode + "`");
    }
    r.graph = g;
  }
  // Report lines are comments so the whole output feeds verify-witness.
  std::cout << "# status " << to_string(outcome.status) << '\n';
  std::cout << "# nodes " << outcome.nodes << '\n';
  if (outcome.witness) {
    r.witness = *outcome.witness;
    write_witness(std::cout, r);
  }
  return outcome.status == SearchStatus::budget_exceeded ? kExitBudget : 0;
}

int invariants_cmd(const std::string& path, int k, int ell) {
  const auto g = load_simple(path);
  const int n = g.order();
  std::cout << "order " << n << '\n' << "edges " << g.edge_count() << '\n';
  if (n >= 2 && n <= 20) std::cout << "arboricity " << arboricity(g) << '\n';
  std::cout << "pseudoarboricity " << pseudoarboricity(g) << '\n';
  if (n <= 40) std::cout << "independence_number " << independence_number(g) << '\n';
  if (n >= 2) std::cout << "vertex_connectivity " << vertex_connectivity(g) << '\n';
  const auto p = spectrum(g);
  std::cout << "eigenvalues";
  for (double mu : p.eigenvalues) std::cout << ' ' << fmt(mu);
  std::cout << '\n';
  if (!p.degree) {
    std::cout << "regular no\n";
    return 0;
  }
  std::cout << "regular yes\ndegree " << *p.degree << "\nlambda " << fmt(*p.lambda) << '\n';
  std::cout << "connectivity_bound " << connectivity_bound(p) << '\n';
  if (*p.degree >= 1) std::cout << "beta_upper_bound " << fmt(beta_upper_bound(p, k)) << '\n';
  if (*p.degree >= 2) {
    std::cout << "beta_lower_bound " << fmt(beta_lower_bound(n, *p.degree, *p.degree, k)) << '\n';
  }
  try {
    std::cout << "beta " << beta(g, k) << '\n';
  } catch (const BudgetError& e) {
    std::cout << "beta budget-exceeded\n";
  } catch (const InputError& e) {
    std::cout << "beta undefined (" << e.what() << ")\n";
  }
  const auto cert = nonmonoid_certificate(g, k, ell);
  std::cout << "[certificate]\nk " << k << "\nell " << ell << '\n';
  for (const auto& h : cert.hypotheses) {
    std::cout << "hypothesis " << h.name << ": " << (h.holds ? "holds" : "fails") << '\n';
  }
  std::cout << "lower " << fmt(cert.lower) << "\nupper " << fmt(cert.upper) << '\n';
  std::cout << "conclusive " << yes_no(cert.conclusive) << "\n[end]\n";
  return 0;
}

int gen_cmd(const std::vector<std::string>& args, bool witness) {
  if (args.empty()) throw InputError("gen needs a family name");
  const std::string& family = args[0];
  auto arg = [&](std::size_t i) {
    if (i >= args.size()) throw InputError("gen " + family + ": missing parameter");
    try {
      return std::stoi(args[i]);
    } catch (const std::logic_error&) {
      throw InputError("gen " + family + ": parameter `" + args[i] + "` is not an integer");
    }
  };
  if (family == "Gkl") {
    write_graph(std::cout, gen_Gkl(arg(1), arg(2)));
  } else if (family == "Gklk") {
    write_graph(std::cout, gen_Gklk(arg(1), arg(2), arg(3)));
  } else if (family == "threshold") {
    std::vector<ThresholdStep> steps;
    const std::string seq = args.size() > 1 ? args[1] : "";
    for (char c : seq) {
      if (c == 'i') {
        steps.push_back(ThresholdStep::isolated);
      } else if (c == 'd') {
        steps.push_back(ThresholdStep::dominating);
      } else {
        throw InputError("threshold steps are `i` (isolated) and `d` (dominating)");
      }
    }
    auto t = gen_threshold(steps);
    if (witness) {
      write_witness(std::cout, WitnessRecord{WitnessMode::monoid_graph, t.witness, t.graph, {}});
    } else {
      write_graph(std::cout, t.graph);
    }
  } else if (family == "K4-Cl") {
    write_graph(std::cout, gen_K4_Cl(arg(1)));
  } else if (family == "perfect-kary") {
    write_graph(std::cout, gen_perfect_kary(arg(1), arg(2)).tree);
  } else if (family == "Tplus") {
    write_graph(std::cout, gen_Tplus(arg(1), arg(2)).tree);
  } else if (family == "fig2") {
    write_graph(std::cout, fig2_digraph());
  } else if (family == "smallest-tree") {
    write_graph(std::cout, smallest_nongenerated_tree());
  } else {
    throw InputError("unknown family `" + family + "`");
  }
  return 0;
}

int tree_classify_cmd(const std::string& path, bool escalate, const BudgetFlags& flags) {
  const auto t = load_simple(path);
  TreeClassifyOptions options;
  options.escalate = escalate;
  options.budget = flags.budget();
  const auto v = classify_tree(t, options);
  std::cout << "# verdict " << to_string(v.status) << '\n';
  if (v.escalated) std::cout << "# escalated yes\n";
  std::cout << "# candidate\tsufficient\tsymmetry_free\tnecessary\n";
  for (const auto& c : v.candidates) {
    std::cout << "# " << c.e << '\t' << yes_no(c.sufficient) << '\t'
              << yes_no(c.symmetry_free) << '\t';
    if (c.necessary.passed) {
      std::cout << "pass";
    } else {
      std::cout << "fail part " << c.necessary.part << " x=" << c.necessary.x;
      if (c.necessary.c) std::cout << " c=" << *c.necessary.c;
    }
    std::cout << '\n';
  }
  if (v.witness) {
    write_witness(std::cout, WitnessRecord{WitnessMode::generated_monoid_tree, *v.witness, t, {}});
  }
  if (v.status == TreeStatus::undecided && v.escalated) return kExitBudget;
  return 0;
}

int census_cmd(const std::string& mode, int order, const std::string& cls,
               const BudgetFlags& flags) {
  CensusMode m;
  GraphClass c;
  if (mode == "monoid-graph") {
    m = CensusMode::monoid_graph;
  } else if (mode == "monoid-digraph") {
    m = CensusMode::monoid_digraph;
  } else if (mode == "semigroup-digraph") {
    m = CensusMode::semigroup_digraph;
  } else {
    throw InputError("unknown mode `" + mode + "`");
  }
  if (cls == "simple") {
    c = GraphClass::simple;
  } else if (cls == "digraph") {
    c = GraphClass::digraph_min_outdeg1;
  } else if (cls == "outregular") {
    c = GraphClass::digraph_outregular;
  } else if (cls == "functional") {
    c = GraphClass::one_outregular;
  } else if (cls == "tree") {
    c = GraphClass::free_tree;
  } else if (cls.empty()) {
    c = m == CensusMode::monoid_graph ? GraphClass::simple : GraphClass::digraph_min_outdeg1;
  } else {
    throw InputError("unknown class `" + cls + "`");
  }
  SearchOptions options;
  options.budget = flags.budget();
  const auto report = classify_all(order, m, c, options);
  for (const auto& e : report.entries) {
    std::cout << e.canonical << '\t' << to_string(e.status) << '\t' << e.nodes << '\n';
  }
  std::cout << "# classes " << report.entries.size() << " witnesses " << report.witnesses
            << " negatives " << report.negatives << " undecided " << report.undecided << '\n';
  return report.undecided ? kExitBudget : 0;
}

int verify_cmd(const std::string& path) {
  const auto r = with_input(path, [](std::istream& in) { return read_witness(in); });
  const auto v = verify(r);
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::cout << "mode " << to_string(r.mode) << '\n';
  std::cout << "table_valid " << flag(v.table_valid) << '\n';
  std::cout << "identity_law " << flag(v.identity_law) << '\n';
  std::cout << "graph_equal " << flag(v.graph_equal) << '\n';
  if (v.generated) std::cout << "generated " << flag(*v.generated) << '\n';
  std::cout << "verified " << flag(v.all()) << '\n';
  return v.all() ? 0 : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley graphs of semigroups and monoids"};
  app.require_subcommand(1);
  std::string input;
  BudgetFlags flags;

  auto* cz = app.add_subcommand("check-zelinka", "profile a 1-outregular digraph and decide it");
  cz->add_option("input", input, "graph file (default stdin)");

  bool semigroup = false;
  auto* kz = app.add_subcommand("construct-zelinka", "build a witness for a 1-outregular digraph");
  kz->add_option("input", input, "graph file (default stdin)");
  kz->add_flag("--semigroup", semigroup, "identity-free witness");

  auto* em = app.add_subcommand("embed", "transition monoid embedding");
  em->add_option("input", input, "graph file (default stdin)");

  std::string mode = "monoid-digraph";
  bool generated = false;
  int connection_size = 0;
  auto* rc = app.add_subcommand("recognize", "table search for a Cayley representation");
  rc->add_option("input", input, "graph file (default stdin)");
  rc->add_option("--mode", mode, "monoid-digraph | semigroup-digraph | monoid-graph | sabidussi")
      ->capture_default_str();
  rc->add_flag("--generated", generated, "require the connection set to generate the monoid");
  rc->add_option("--connection-size", connection_size, "only connection sets of this size");
  add_budget_flags(rc, flags);

  int k = 0;
  int ell = 0;
  auto* iv = app.add_subcommand("invariants", "invariants, spectrum and beta bounds");
  iv->add_option("input", input, "graph file (default stdin)");
  iv->add_option("--k", k, "number of selection maps / joining edges")->capture_default_str();
  iv->add_option("--ell", ell, "size of the joined clique")->capture_default_str();

  std::vector<std::string> gen_args;
  bool gen_witness = false;
  auto* gn = app.add_subcommand("gen", "generate a named family member");
  gn->add_option("family", gen_args,
                 "Gkl k l | Gklk k l kappa | threshold [i|d]* | K4-Cl l | perfect-kary k h | "
                 "Tplus k h | fig2 | smallest-tree")
      ->required();
  gn->add_flag("--witness", gen_witness, "threshold: print the witness record");

  bool escalate = false;
  auto* tc = app.add_subcommand("tree-classify", "decide generated monoid trees");
  tc->add_option("input", input, "graph file (default stdin)");
  tc->add_flag("--escalate", escalate, "search tables when the conditions are inconclusive");
  add_budget_flags(tc, flags);

  std::string census_mode = "monoid-graph";
  std::string census_class;
  int order = 0;
  auto* cs = app.add_subcommand("census", "classify every isomorphism class of an order");
  cs->add_option("--mode", census_mode, "monoid-graph | monoid-digraph | semigroup-digraph")
      ->capture_default_str();
  cs->add_option("--order", order, "number of vertices")->required();
  cs->add_option("--class", census_class, "simple | digraph | outregular | functional | tree");
  add_budget_flags(cs, flags);

  auto* vw = app.add_subcommand("verify-witness", "recheck a witness record");
  vw->add_option("input", input, "record file (default stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (cz->parsed()) return check_zelinka(input);
    if (kz->parsed()) return construct_zelinka(input, semigroup);
    if (em->parsed()) return embed_cmd(input);
    if (rc->parsed()) return recognize_cmd(input, mode, generated, connection_size, flags);
    if (iv->parsed()) return invariants_cmd(input, k, ell);
    if (gn->parsed()) return gen_cmd(gen_args, gen_witness);
    if (tc->parsed()) return tree_classify_cmd(input, escalate, flags);
    if (cs->parsed()) return census_cmd(census_mode, order, census_class, flags);
    if (vw->parsed()) return verify_cmd(input);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  }
  return kExitInput;
}
