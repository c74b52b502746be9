#pragma once

#include <cstddef>
#include <vector>

#include "mgraph/algebra.hpp"
#include "mgraph/graph.hpp"

namespace mgraph {

// Endofunctions of 0..ground_size-1.
struct FunctionFamily {
  int ground_size = 0;
  std::vector<Transformation> maps;
};

// k maps covering every arc: map i sends v to the least arc target of v not
// yet covered, or to the least target when all are covered. Throws
// InputError on a sink or an out-degree above k.
FunctionFamily greedy_cover(const Digraph& g, int k);

// Composition closure with the identity first, then breadth-first order.
// Throws BudgetError beyond `cap` maps.
inline constexpr std::size_t kClosureCap = 1'000'000;
std::vector<Transformation> closure(const FunctionFamily& fam, std::size_t cap = kClosureCap);

// Largest monoid materialized as a table.
inline constexpr int kEmbeddingTableCap = 6000;

// Monoid on V followed by the closure: element v < |V| is vertex v, element
// |V| + i is closure map i (|V| itself is the identity map).
struct Embedding {
  CayleyWitness witness;
  std::vector<Transformation> maps;
  std::vector<Element> identity_component;  // elements of the closure, sorted
  Digraph digraph;                          // the realized digraph
};

// Removing the component of the identity from Cay(M, family) leaves g.
// Throws InputError naming an arc the family leaves or fails to cover, and
// BudgetError when the monoid exceeds kEmbeddingTableCap.
Embedding embed_monoid(const Digraph& g, const FunctionFamily& fam);

// Orients g with maximum out-degree p(g), reverses one edge at every sink
// so the orientation is sink-free without changing the underlying graph,
// and embeds with |C| = p(g). Throws InputError on isolated vertices.
Embedding embed_undirected(const SimpleGraph& g);

// Recomputes the witness Cayley digraph and checks that dropping the
// identity component yields `digraph` exactly and that the table is a monoid.
bool verify_embedding(const Embedding& e);

}  // namespace mgraph
