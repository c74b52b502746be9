#pragma once

#include <optional>
#include <vector>

#include "mgraph/algebra.hpp"
#include "mgraph/graph.hpp"

namespace mgraph {

// Shape of one weak component of a 1-outregular digraph.
struct ComponentProfile {
  std::vector<Vertex> cycle;  // starts at the least cycle vertex, successor order
  int cycle_length = 0;       // z
  int depth = 0;              // l: largest distance of a vertex to the cycle
};

struct OutregularProfile {
  std::vector<ComponentProfile> components;  // numbered as in weak_components
  std::vector<int> component_of;
  std::vector<int> depth;           // distance to the cycle, 0 on the cycle
  std::vector<Vertex> successor;    // the unique out-neighbor
  std::vector<int> cycle_position;  // index in the component cycle, -1 off cycle
};

// Throws InputError naming a vertex whose out-degree is not 1.
OutregularProfile profile(const Digraph& g);

// End vertex of the walk of length k from x.
Vertex walk(const OutregularProfile& p, Vertex x, long long k);

// Index of the least component C with z(D) | z(C) and l(D) <= l(C) + slack
// for every component D, where slack is 0 for monoids and 1 for semigroups.
std::optional<int> decide_monoid(const OutregularProfile& p);
std::optional<int> decide_semigroup(const OutregularProfile& p);

// Witness with connection {a} reproducing g arc for arc under the identity
// bijection. The monoid version has an identity; the semigroup one has none.
// Throws InputError if the corresponding decision is negative.
CayleyWitness construct_monoid(const Digraph& g);
CayleyWitness construct_semigroup(const Digraph& g);

// Orients every tree of the forest towards its least vertex, adds a loop
// there and builds the monoid. The underlying graph of the resulting Cayley
// digraph is f. Throws InputError if f has a cycle.
CayleyWitness forest_witness(const SimpleGraph& f);

}  // namespace mgraph
