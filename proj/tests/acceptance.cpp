// Acceptance suite: one PASS/FAIL line per criterion A1..A13.
// Usage: acceptance [--extended]   (--extended adds the order-6 graph census to A5)
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

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

// Pinned tolerances.
constexpr double kTraceTolerance = 1e-6;

struct Result {
  bool pass = false;
  std::string detail;
};

struct Failure {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

std::string seconds(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << " s";
  return out.str();
}

int run(const std::string& id, double limit_seconds, const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    r.detail = body();
    r.pass = true;
  } catch (const Failure& f) {
    r.detail = f.what;
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.pass && elapsed > limit_seconds) {
    r.pass = false;
    r.detail += "; exceeded the time limit";
  }
  std::cout << id << ' ' << (r.pass ? "PASS" : "FAIL") << "  " << r.detail << " ["
            << seconds(elapsed) << ", limit " << seconds(limit_seconds) << "]" << std::endl;
  return r.pass ? 0 : 1;
}

bool round_trips(const Digraph& g, const CayleyWitness& w, WitnessMode mode) {
  return verify(WitnessRecord{mode, w, g, {}}).all();
}

SimpleGraph complete(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph cycle(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph petersen() {
  SimpleGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

std::string a1() {
  const auto r = recognize_semigroup_digraph(fig2_digraph());
  require(r.status == SearchStatus::exhausted_no,
          std::string("fig2 semigroup search returned ") + to_string(r.status));
  return "fig2 digraph is not a semigroup digraph: ExhaustedNo after " +
         std::to_string(r.nodes) + " nodes";
}

std::string a2() {
  const auto r = classify_all(3, CensusMode::semigroup_digraph, GraphClass::digraph_outregular);
  require(r.undecided == 0, std::to_string(r.undecided) + " classes undecided");
  require(r.negatives == 3, std::to_string(r.negatives) + " negatives, expected 3");
  return std::to_string(r.entries.size()) + " outregular 3-vertex classes, " +
         std::to_string(r.negatives) + " non-semigroup";
}

std::string zelinka_protocol(int max_order, bool semigroup) {
  SearchOptions opts;
  opts.connection_size = 1;
  int total = 0;
  int positive = 0;
  for (int n = 1; n <= max_order; ++n) {
    for (const auto& g : enumerate_digraphs(n, GraphClass::one_outregular)) {
      ++total;
      const auto p = profile(g);
      const bool decided = semigroup ? decide_semigroup(p).has_value() : decide_monoid(p).has_value();
      const auto s = semigroup ? recognize_semigroup_digraph(g, opts) : recognize_monoid_digraph(g, opts);
      require(s.status != SearchStatus::budget_exceeded, "search budget exceeded");
      require(decided == (s.status == SearchStatus::witness),
              "disagreement on a digraph of order " + std::to_string(n));
      if (decided) {
        ++positive;
        const auto w = semigroup ? construct_semigroup(g) : construct_monoid(g);
        require(round_trips(g, w, semigroup ? WitnessMode::semigroup_digraph
                                             : WitnessMode::monoid_digraph),
                "construction does not round-trip");
        if (semigroup) require(!w.table.identity(), "semigroup witness carries an identity");
      }
    }
  }
  return std::to_string(total) + " functional digraphs of order <= " + std::to_string(max_order) +
         " agree, " + std::to_string(positive) + " constructions round-trip";
}

std::string a5(bool extended) {
  std::string detail;
  for (int n : extended ? std::vector<int>{5, 6} : std::vector<int>{5}) {
    int count = 0;
    SearchOptions opts;
    if (n == 6) opts.budget.max_seconds = 7200;
    for (const auto& g : enumerate_graphs(n)) {
      const auto r = recognize_monoid_graph(g, opts);
      require(r.status == SearchStatus::witness,
              "order-" + std::to_string(n) + " graph returned " + to_string(r.status));
      require(verify(WitnessRecord{WitnessMode::monoid_graph, *r.witness, g, {}}).all(),
              "witness does not verify");
      ++count;
    }
    detail += std::to_string(count) + " graphs of order " + std::to_string(n) + " are monoid graphs; ";
  }
  if (!extended) detail += "order 6 runs with --extended";
  return detail;
}

std::string a6() {
  SearchOptions opts;
  opts.prune.orbit_candidates = false;  // all 9 identity candidates
  opts.budget.max_nodes = 1'000'000'000'000ULL;
  opts.budget.max_seconds = 24 * 3600;
  const auto g = gen_K4_Cl(5);
  const auto r = recognize_monoid_graph(g, opts);
  require(r.status == SearchStatus::exhausted_no,
          std::string("K4 u C5 returned ") + to_string(r.status));
  return "K4 u C5 is not a monoid graph: ExhaustedNo over 9 identity candidates, " +
         std::to_string(r.nodes) + " nodes";
}

std::string a7() {
  std::mt19937 rng(20240607);
  int largest = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int kmax = 1 + static_cast<int>(rng() % 3);
    Digraph g(n);
    for (Vertex v = 0; v < n; ++v) {
      const int d = std::min(n, 1 + static_cast<int>(rng() % kmax));
      while (g.out_degree(v) < d) g.add_arc(v, static_cast<Vertex>(rng() % n));
    }
    const int k = g.max_out_degree();
    const auto e = embed_monoid(g, greedy_cover(g, k));
    require(verify_embedding(e), "embedding " + std::to_string(i) + " does not verify");
    require(e.witness.connection.size() == static_cast<std::size_t>(k), "|C| != k");
    require(verify(WitnessRecord{WitnessMode::embedding, e.witness, g, e.identity_component}).all(),
            "embedding record does not verify");
    largest = std::max(largest, e.witness.table.order());
  }
  return "200 random sink-free digraphs embed with |C| = k; largest monoid has " +
         std::to_string(largest) + " elements";
}

std::string a8() {
  int thresholds = 0;
  for (int len = 0; len <= 6; ++len) {
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::vector<ThresholdStep> steps;
      for (int i = 0; i < len; ++i)
        steps.push_back(mask >> i & 1 ? ThresholdStep::dominating : ThresholdStep::isolated);
      const auto t = gen_threshold(steps);
      require(verify(WitnessRecord{WitnessMode::monoid_graph, t.witness, t.graph, {}}).all(),
              "threshold witness does not verify");
      ++thresholds;
    }
  }
  int forests = 0;
  auto check_forest = [&](const SimpleGraph& f) {
    const auto w = forest_witness(f);
    require(w.connection.size() == 1, "forest witness has |C| != 1");
    require(verify(WitnessRecord{WitnessMode::monoid_graph, w, f, {}}).all(),
            "forest witness does not verify");
    ++forests;
  };
  for (int n = 1; n <= 8; ++n)
    for (const auto& t : enumerate_graphs(n, GraphClass::free_tree)) check_forest(t);
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : enumerate_graphs(n))
      if (static_cast<int>(g.edge_count()) == n - weak_components(g).count) check_forest(g);
  return std::to_string(thresholds) + " threshold graphs and " + std::to_string(forests) +
         " trees/forests carry verified witnesses";
}

std::string a9() {
  const int params[][3] = {{4, 5, 1}, {4, 5, 2}, {3, 4, 1}, {6, 4, 2}, {6, 4, 3}};
  for (auto [k, l, kappa] : params) {
    const std::string tag = "G_{" + std::to_string(k) + "," + std::to_string(l) + "," +
                            std::to_string(kappa) + "}";
    const auto g = gen_Gklk(k, l, kappa);
    const int v0 = (k / kappa) * k;
    require(gklk_layer0_size(k, kappa) == v0, tag + ": |V0| mismatch");
    require(g.order() == v0 + (l - 1) * k, tag + ": wrong order");
    require(g.min_out_degree() == k && g.max_out_degree() == k, tag + ": not k-outregular");
    require(is_strongly_connected(g), tag + ": not strongly connected");
    require(strong_connectivity(g) == kappa, tag + ": strong connectivity != kappa");
    require(vertex_connectivity(underlying_graph(g)) == k + kappa,
            tag + ": underlying connectivity != k + kappa");
  }
  return "5 parameter sets: k-outregular, strong connectivity kappa, underlying connectivity k+kappa";
}

std::string a10() {
  std::ostringstream detail;
  for (const auto& [name, g] : {std::pair{"Petersen", petersen()}, std::pair{"C5", cycle(5)}}) {
    const auto p = spectrum(g);
    double sum = 0;
    double squares = 0;
    for (double mu : p.eigenvalues) {
      sum += mu;
      squares += mu * mu;
    }
    require(std::abs(sum) <= kTraceTolerance, std::string(name) + ": trace != 0");
    require(std::abs(squares - 2.0 * g.edge_count()) <= kTraceTolerance,
            std::string(name) + ": trace of A^2 != 2m");
    for (int k = 0; k <= 1; ++k) {
      const int b = beta(g, k);
      const Rational upper = beta_upper_bound(p, k);
      const Rational lower = beta_lower_bound(g.order(), g.min_degree(), g.max_degree(), k);
      require(Rational(b) <= upper, std::string(name) + ": beta above the upper bound");
      require(lower <= Rational(b), std::string(name) + ": beta below the lower bound");
      detail << name << " k=" << k << ": " << lower << " <= " << b << " <= "
             << static_cast<double>(upper) << "; ";
    }
  }
  return detail.str();
}

std::string a11() {
  int checked = 0;
  auto check = [&](const SimpleGraph& g, const std::string& name) {
    const int bound = connectivity_bound(spectrum(g));
    const int exact = vertex_connectivity(g);
    require(bound <= exact, name + ": bound " + std::to_string(bound) + " > connectivity " +
                                std::to_string(exact));
    ++checked;
  };
  check(petersen(), "Petersen");
  for (int n = 2; n <= 8; ++n) check(complete(n), "K" + std::to_string(n));
  for (int n = 3; n <= 10; ++n) check(cycle(n), "C" + std::to_string(n));
  for (int n = 4; n <= 8; n += 2)
    for (const auto& g : enumerate_regular_graphs(n, 3)) check(g, "cubic graph");
  return std::to_string(checked) + " regular graphs satisfy bound <= vertex connectivity";
}

std::string a12() {
  int no = 0;
  int trees = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& t : enumerate_graphs(n, GraphClass::free_tree)) {
      ++trees;
      const auto v = classify_tree(t);
      require(v.status != TreeStatus::undecided, "undecided tree of order " + std::to_string(n));
      if (v.status == TreeStatus::no) ++no;
    }
  }
  require(no == 1, std::to_string(no) + " trees of order <= 7 classified No, expected 1");
  int undecided8 = 0;
  for (const auto& t : enumerate_graphs(8, GraphClass::free_tree))
    if (classify_tree(t).status == TreeStatus::undecided) ++undecided8;
  require(undecided8 >= 1, "no undecided tree of order 8");
  require(classify_tree(gen_Tplus(3, 2).tree).status == TreeStatus::no, "T+_{3,2} not No");
  for (int k = 1; k <= 3; ++k) {
    for (int h = 0; h <= 3; ++h) {
      const auto t = gen_perfect_kary(k, h).tree;
      const auto v = classify_tree(t);
      require(v.status == TreeStatus::yes && v.witness, "perfect tree not Yes");
      const auto check = verify(WitnessRecord{WitnessMode::generated_monoid_tree, *v.witness, t, {}});
      require(check.all() && check.generated.value_or(false), "perfect tree witness fails");
    }
  }
  return std::to_string(trees) + " trees of order <= 7 decided with one No; " +
         std::to_string(undecided8) + " undecided at order 8; T+_{3,2} No; T_{k,h} Yes";
}

std::string a13() {
  int total = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : enumerate_digraphs(n, GraphClass::digraph_min_outdeg1)) {
      const auto a = sabidussi_check(g);
      const auto b = recognize_monoid_digraph(g);
      require(a.status != SearchStatus::budget_exceeded && b.status != SearchStatus::budget_exceeded,
              "budget exceeded");
      require(a.status == b.status, "disagreement on a digraph of order " + std::to_string(n));
      ++total;
    }
  }
  return std::to_string(total) + " digraphs of order <= 4 agree";
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) {
      extended = true;
    } else {
      std::cerr << "usage: acceptance [--extended]\n";
      return 2;
    }
  }
  int failures = 0;
  failures += run("A1", 1, a1);
  failures += run("A2", 10, a2);
  failures += run("A3", 300, [] { return zelinka_protocol(6, false); });
  failures += run("A4", 600, [] { return zelinka_protocol(5, true); });
  failures += run("A5", extended ? 7200 : 600, [&] { return a5(extended); });
  failures += run("A6", 24 * 3600, a6);
  failures += run("A7", 60, a7);
  failures += run("A8", 60, a8);
  failures += run("A9", 60, a9);
  failures += run("A10", 120, a10);
  failures += run("A11", 120, a11);
  failures += run("A12", 300, a12);
  failures += run("A13", 600, a13);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
