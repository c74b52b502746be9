#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "mgraph/digraph.hpp"
#include "mgraph/error.hpp"
#include "mgraph/families.hpp"
#include "oracles.hpp"

using namespace mgraph;

namespace {

SimpleGraph cycle(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph path(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph complete(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Digraph directed_cycle(int n) {
  Digraph g(n);
  for (int i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n);
  return g;
}

SimpleGraph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("graph containers use set semantics") {
  Digraph d(2);
  CHECK(d.add_arc(0, 1));
  CHECK_FALSE(d.add_arc(0, 1));
  CHECK(d.add_arc(1, 1));
  CHECK(d.arc_count() == 2);
  CHECK_THROWS_AS(d.add_arc(0, 2), InputError);
  SimpleGraph g(2);
  CHECK(g.add_edge(1, 0));
  CHECK_FALSE(g.add_edge(0, 1));
  CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
}

TEST_CASE("underlying_graph") {
  Digraph loops(2);
  loops.add_arc(0, 0);
  loops.add_arc(1, 1);
  CHECK(underlying_graph(loops).edge_count() == 0);
  Digraph two(2);
  two.add_arc(0, 1);
  two.add_arc(1, 0);
  CHECK(underlying_graph(two).edge_count() == 1);
  CHECK(underlying_graph(fig2_digraph()) == path(3));
}

TEST_CASE("graph text format") {
  std::stringstream s;
  write_graph(s, fig2_digraph());
  CHECK(std::get<Digraph>(read_graph(s)) == fig2_digraph());
  std::stringstream u;
  write_graph(u, cycle(5));
  CHECK(std::get<SimpleGraph>(read_graph(u)) == cycle(5));
  std::istringstream comments("# c\n2 undirected\n\n0 1 # edge\n");
  CHECK(std::get<SimpleGraph>(read_graph(comments)).edge_count() == 1);
  std::istringstream bad("3 directed\n0 1\n0 7\n");
  try {
    read_graph(bad);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream loop("2 undirected\n1 1\n");
  CHECK_THROWS_AS(read_graph(loop), InputError);
  std::istringstream kind("2 mixed\n");
  CHECK_THROWS_AS(read_graph(kind), InputError);
}

TEST_CASE("weak_components") {
  const auto k4c5 = gen_K4_Cl(5);
  const auto comps = weak_components(k4c5);
  REQUIRE(comps.count == 2);
  auto members = comps.members();
  std::vector<std::size_t> sizes{members[0].size(), members[1].size()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{4, 5});
  CHECK(weak_components(SimpleGraph(6)).count == 6);
  CHECK(weak_components(path(6)).count == 1);
}

TEST_CASE("strong connectivity") {
  CHECK(is_strongly_connected(directed_cycle(3)));
  Digraph arc(2);
  arc.add_arc(0, 1);
  CHECK_FALSE(is_strongly_connected(arc));
  CHECK(is_strongly_connected(gen_Gklk(4, 5, 2)));
  CHECK(strong_connectivity(directed_cycle(6)) == 1);
  CHECK(strong_connectivity(gen_Gklk(4, 5, 2)) == 2);
  CHECK(strong_connectivity(symmetric_digraph(complete(3))) == 2);
}

TEST_CASE("vertex_connectivity") {
  CHECK(vertex_connectivity(underlying_graph(gen_Gklk(4, 5, 2))) == 6);
  CHECK(vertex_connectivity(path(3)) == 1);
  CHECK(vertex_connectivity(complete(4)) == 3);
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    const auto g = random_graph(rng, 2 + i % 7, 0.55);
    REQUIRE(vertex_connectivity(g) == oracle::vertex_connectivity(g));
  }
}

TEST_CASE("canonical_form") {
  std::vector<Vertex> perm{3, 0, 4, 1, 2};
  CHECK(canonical_form(cycle(5)) == canonical_form(relabel(cycle(5), perm)));
  CHECK(canonical_form(cycle(5)) != canonical_form(path(5)));
  CHECK(canonical_form(SimpleGraph(3)) != canonical_form(Digraph(3)));

  SUBCASE("agrees with brute-force isomorphism") {
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
      const int n = 2 + i % 6;
      const auto a = random_graph(rng, n, 0.5);
      const auto b = random_graph(rng, n, 0.5);
      REQUIRE((canonical_form(a) == canonical_form(b)) == oracle::isomorphic(a, b));
    }
    for (int i = 0; i < 200; ++i) {
      const int n = 1 + i % 5;
      std::bernoulli_distribution coin(0.4);
      Digraph a(n), b(n);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          if (coin(rng)) a.add_arc(u, v);
          if (coin(rng)) b.add_arc(u, v);
        }
      REQUIRE((canonical_form(a) == canonical_form(b)) == oracle::isomorphic(a, b));
    }
  }

  SUBCASE("relabeling invariance with colors") {
    std::mt19937 rng(9);
    for (int i = 0; i < 50; ++i) {
      const int n = 3 + i % 6;
      const auto g = random_graph(rng, n, 0.4);
      std::vector<int> colors(n);
      for (auto& c : colors) c = static_cast<int>(rng() % 2);
      std::vector<Vertex> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      std::vector<int> moved(n);
      for (int v = 0; v < n; ++v) moved[p[v]] = colors[v];
      REQUIRE(canonical_form(g, colors) == canonical_form(relabel(g, p), moved));
    }
  }

  SUBCASE("6-vertex simple graphs give 156 classes") {
    std::set<std::string> seen;
    const int n = 6;
    for (unsigned mask = 0; mask < (1u << 15); ++mask) {
      SimpleGraph g(n);
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          if (mask >> bit & 1) g.add_edge(u, v);
      seen.insert(canonical_form(g));
    }
    CHECK(seen.size() == 156);
  }

  CHECK_THROWS_AS(canonical_form(cycle(11)), InputError);
  CHECK_NOTHROW(canonical_form(cycle(11), {}, 20));
}

TEST_CASE("canonical_relabeling produces the canonical graph") {
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    const int n = 2 + i % 5;
    std::bernoulli_distribution coin(0.4);
    Digraph a(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (coin(rng)) a.add_arc(u, v);
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    const auto b = relabel(a, p);
    REQUIRE(relabel(a, canonical_relabeling(a)) == relabel(b, canonical_relabeling(b)));
  }
}

TEST_CASE("automorphism_orbits") {
  const auto star = [] {
    SimpleGraph g(4);
    for (int i = 1; i < 4; ++i) g.add_edge(0, i);
    return g;
  }();
  const auto orbits = automorphism_orbits(star);
  CHECK(orbits[1] == orbits[2]);
  CHECK(orbits[2] == orbits[3]);
  CHECK(orbits[0] != orbits[1]);
  const auto p4 = automorphism_orbits(path(4));
  CHECK(p4[0] == p4[3]);
  CHECK(p4[1] == p4[2]);
  CHECK(p4[0] != p4[1]);
  const auto c = automorphism_orbits(directed_cycle(5));
  CHECK(std::all_of(c.begin(), c.end(), [&](int o) { return o == c[0]; }));
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_graphs(3).size() == 4);
  CHECK(enumerate_graphs(4).size() == 11);
  CHECK(enumerate_graphs(5).size() == 34);
  CHECK(enumerate_graphs(6).size() == 156);
  CHECK(enumerate_graphs(7, GraphClass::free_tree).size() == 11);
  CHECK(enumerate_graphs(8, GraphClass::free_tree).size() == 23);
  CHECK(enumerate_regular_graphs(8, 3).size() == 6);
  CHECK(enumerate_regular_graphs(10, 3).size() == 21);
  CHECK(enumerate_regular_graphs(6, 2).size() == 2);
  // Functional digraphs up to isomorphism (OEIS A001372).
  const std::vector<std::size_t> functional{1, 3, 7, 19, 47, 130, 343};
  for (int n = 1; n <= 7; ++n) {
    CHECK(enumerate_digraphs(n, GraphClass::one_outregular).size() == functional[n - 1]);
  }
}

TEST_CASE("digraph enumeration matches brute-force classes") {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::string> all;
    std::set<std::string> regular;
    const int cells = n * n;
    for (unsigned mask = 0; mask < (1u << cells); ++mask) {
      Digraph g(n);
      for (int i = 0; i < cells; ++i)
        if (mask >> i & 1) g.add_arc(i / n, i % n);
      if (g.min_out_degree() < 1) continue;
      const auto key = oracle::brute_canonical(g);
      all.insert(key);
      if (g.min_out_degree() == g.max_out_degree()) regular.insert(key);
    }
    std::set<std::string> got_all;
    for (const auto& g : enumerate_digraphs(n, GraphClass::digraph_min_outdeg1)) {
      got_all.insert(oracle::brute_canonical(g));
    }
    std::set<std::string> got_regular;
    for (const auto& g : enumerate_digraphs(n, GraphClass::digraph_outregular)) {
      got_regular.insert(oracle::brute_canonical(g));
    }
    CHECK(got_all == all);
    CHECK(got_regular == regular);
    CHECK(enumerate_digraphs(n, GraphClass::digraph_min_outdeg1).size() == all.size());
  }
}
