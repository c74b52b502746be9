#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mgraph/graph.hpp"

namespace mgraph {

struct ComponentDecomposition {
  std::vector<int> component;  // dense ids 0..count-1, numbered by least vertex
  int count = 0;

  std::vector<std::vector<Vertex>> members() const;
};

// Weak components for digraphs, ordinary components for simple graphs.
ComponentDecomposition weak_components(const Digraph& g);
ComponentDecomposition weak_components(const SimpleGraph& g);

bool is_strongly_connected(const Digraph& g);

// Largest kappa such that every directed vertex cut has at least kappa
// vertices and kappa + 1 <= order. Throws InputError if g is not strongly
// connected or has fewer than two vertices.
int strong_connectivity(const Digraph& g);

// Exact vertex connectivity (n - 1 for complete graphs, 0 if disconnected).
// Requires order >= 2.
int vertex_connectivity(const SimpleGraph& g);

// Canonical string: equal for two graphs iff they are isomorphic. Computed as
// the lexicographically least adjacency matrix over all vertex orders that
// are compatible with an isomorphism-invariant refinement of the vertices.
// `colors` optionally fixes an initial vertex coloring that isomorphisms must
// preserve. Throws InputError above `cap` vertices.
inline constexpr int kDefaultCanonicalCap = 10;
std::string canonical_form(const Digraph& g, std::span<const int> colors = {},
                           int cap = kDefaultCanonicalCap);
std::string canonical_form(const SimpleGraph& g, std::span<const int> colors = {},
                           int cap = kDefaultCanonicalCap);

// Printable hex rendering of a canonical string.
std::string to_hex(const std::string& canonical);

// A vertex order realizing the canonical form: canonical_relabeling(g)[v] is
// the position of v. relabel(g, p) is the same graph for isomorphic inputs.
std::vector<Vertex> canonical_relabeling(const Digraph& g, std::span<const int> colors = {},
                                         int cap = kDefaultCanonicalCap);

// Automorphism orbits: orbit[v] is the least vertex in the orbit of v.
std::vector<Vertex> automorphism_orbits(const Digraph& g, int cap = kDefaultCanonicalCap);
std::vector<Vertex> automorphism_orbits(const SimpleGraph& g, int cap = kDefaultCanonicalCap);

enum class GraphClass {
  simple,                 // all simple graphs, n <= 8
  digraph_min_outdeg1,    // loops allowed, every out-degree >= 1, n <= 4
  digraph_outregular,     // loops allowed, all out-degrees equal and >= 1, n <= 4
  one_outregular,         // functional digraphs, n <= 7
  free_tree,              // unlabeled trees, n <= 12
};

// One representative per isomorphism class, in canonical-string order.
std::vector<Digraph> enumerate_digraphs(int n, GraphClass cls);
std::vector<SimpleGraph> enumerate_graphs(int n, GraphClass cls = GraphClass::simple);

// All d-regular simple graphs on n vertices up to isomorphism (n <= 10).
std::vector<SimpleGraph> enumerate_regular_graphs(int n, int d);

}  // namespace mgraph
