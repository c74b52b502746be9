#include <algorithm>
#include <set>

#include "doctest.h"
#include "graphs.hpp"
#include "mgraph/digraph.hpp"
#include "mgraph/error.hpp"
#include "mgraph/families.hpp"
#include "mgraph/trees.hpp"
#include "oracles.hpp"

using namespace mgraph;

TEST_CASE("gen_Gkl") {
  const auto g45 = gen_Gkl(4, 5);
  CHECK(g45.order() == 32);
  CHECK(g45.min_out_degree() == 4);
  CHECK(g45.max_out_degree() == 4);
  const auto g22 = gen_Gkl(2, 2);
  CHECK(g22.order() == 6);
  for (int k = 1; k <= 4; ++k) {
    for (int l = 2; l <= 5; ++l) {
      const auto g = gen_Gkl(k, l);
      REQUIRE(g.order() == k * k + (l - 1) * k);
      REQUIRE(g.min_out_degree() == k);
      REQUIRE(g.max_out_degree() == k);
    }
  }
  CHECK_THROWS_AS(gen_Gkl(0, 3), InputError);
}

TEST_CASE("gen_Gklk") {
  CHECK(gen_Gklk(4, 5, 1) == gen_Gkl(4, 5));
  const auto g = gen_Gklk(4, 5, 2);
  CHECK(gklk_layer0_size(4, 2) == 8);
  CHECK(g.order() == 24);
  CHECK(strong_connectivity(g) == 2);
  CHECK(vertex_connectivity(underlying_graph(g)) == 6);
  CHECK_THROWS_AS(gen_Gklk(4, 5, 0), InputError);
}

TEST_CASE("gen_threshold") {
  const auto k1 = gen_threshold({});
  CHECK(k1.graph.order() == 1);
  CHECK(k1.witness.table.order() == 1);
  const auto k2 = gen_threshold({ThresholdStep::dominating});
  CHECK(k2.graph.edge_count() == 1);
  CHECK(k2.witness.table.order() == 2);
  const auto g = gen_threshold(
      {ThresholdStep::dominating, ThresholdStep::isolated, ThresholdStep::dominating});
  CHECK(g.graph.order() == 4);
  CHECK(g.graph.edge_count() == 4);
  CHECK(validate_table(g.witness.table).ok());
  Digraph cay(4);
  for (int s = 0; s < 4; ++s)
    for (Element c : g.witness.connection) cay.add_arc(s, g.witness.table(s, c));
  CHECK(relabel(g.graph, g.witness.bijection) == underlying_graph(cay));
}

TEST_CASE("gen_K4_Cl") {
  const auto g = gen_K4_Cl(5);
  CHECK(g.order() == 9);
  CHECK(g.edge_count() == 11);
  CHECK(gen_K4_Cl(6).order() == 10);
  CHECK(oracle::isomorphic(gen_K4_Cl(3), [] {
    SimpleGraph h(7);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) h.add_edge(i, j);
    h.add_edge(4, 5);
    h.add_edge(5, 6);
    h.add_edge(4, 6);
    return h;
  }()));
  CHECK_THROWS_AS(gen_K4_Cl(2), InputError);
}

TEST_CASE("perfect trees") {
  CHECK(gen_perfect_kary(3, 3).tree.order() == 40);
  CHECK(gen_perfect_kary(1, 4).tree == testgraphs::path(5));
  CHECK(gen_perfect_kary(2, 0).tree.order() == 1);
  CHECK(gen_perfect_kary(3, 3).root == 0);
  const auto plus = gen_Tplus(3, 3);
  CHECK(plus.tree.order() == 41);
  CHECK(oracle::isomorphic(gen_Tplus(1, 1).tree, testgraphs::path(3)));
  for (int k = 1; k <= 3; ++k) {
    for (int h = 1; h <= 3; ++h) {
      const auto a = analyze(gen_Tplus(k, h).tree, 0);
      REQUIRE(gen_Tplus(k, h).tree.order() == gen_perfect_kary(k, h).tree.order() + 1);
      REQUIRE(*std::max_element(a.depth.begin(), a.depth.end()) == h);
    }
  }
}

TEST_CASE("fig2_digraph") {
  const auto g = fig2_digraph();
  CHECK(g.min_out_degree() == 2);
  CHECK(g.max_out_degree() == 2);
  CHECK(underlying_graph(g) == testgraphs::path(3));
}

TEST_CASE("smallest_nongenerated_tree") {
  const auto t = smallest_nongenerated_tree();
  CHECK(t.order() == 7);
  CHECK(classify_tree(t).status == TreeStatus::no);
}
