#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace mgraph {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;
using Edge = std::pair<Vertex, Vertex>;

// Directed graph on vertices 0..order-1. Loops are allowed, parallel arcs are
// not: adding an arc twice is a no-op.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int order);
  Digraph(int order, std::span<const Arc> arcs);

  int order() const noexcept { return order_; }
  std::size_t arc_count() const noexcept { return arc_count_; }

  // Returns false when the arc was already present.
  bool add_arc(Vertex u, Vertex v);
  bool has_arc(Vertex u, Vertex v) const;

  // Sorted adjacency lists.
  const std::vector<Vertex>& out(Vertex u) const { return out_[u]; }
  const std::vector<Vertex>& in(Vertex u) const { return in_[u]; }
  int out_degree(Vertex u) const { return static_cast<int>(out_[u].size()); }
  int in_degree(Vertex u) const { return static_cast<int>(in_[u].size()); }
  int min_out_degree() const;
  int max_out_degree() const;

  // All arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  bool operator==(const Digraph& other) const {
    return order_ == other.order_ && out_ == other.out_;
  }

 private:
  void check_vertex(Vertex v) const;

  int order_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

// Simple undirected graph: no loops, no parallel edges.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int order);
  SimpleGraph(int order, std::span<const Edge> edges);

  int order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  // Throws InputError on a loop. Returns false when already present.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  const std::vector<Vertex>& neighbors(Vertex u) const { return adj_[u]; }
  int degree(Vertex u) const { return static_cast<int>(adj_[u].size()); }
  int min_degree() const;
  int max_degree() const;

  // Edges {u,v} with u < v, lexicographic.
  std::vector<Edge> edges() const;

  bool operator==(const SimpleGraph& other) const {
    return order_ == other.order_ && adj_ == other.adj_;
  }

 private:
  void check_vertex(Vertex v) const;

  int order_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

struct ColoredArc {
  Vertex source;
  Vertex target;
  int color;

  auto operator<=>(const ColoredArc&) const = default;
};

// Multi-digraph whose arcs carry a color; parallel arcs of different colors
// are kept.
class ColoredMultiDigraph {
 public:
  ColoredMultiDigraph() = default;
  explicit ColoredMultiDigraph(int order) : order_(order) {}

  int order() const noexcept { return order_; }
  void add_arc(Vertex u, Vertex v, int color);
  const std::vector<ColoredArc>& arcs() const noexcept { return arcs_; }

  // Arcs compared as multisets.
  bool operator==(const ColoredMultiDigraph& other) const;

 private:
  int order_ = 0;
  std::vector<ColoredArc> arcs_;
};

// Orientation and loops dropped.
SimpleGraph underlying_graph(const Digraph& g);
SimpleGraph underlying_graph(const ColoredMultiDigraph& g);

// Every edge as an arc in both directions.
Digraph symmetric_digraph(const SimpleGraph& g);

// Subgraph induced by `keep` (in that order); vertex keep[i] becomes i.
Digraph induced_subgraph(const Digraph& g, std::span<const Vertex> keep);
SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> keep);

// Arc (u,v) becomes (perm[u], perm[v]); perm must be a permutation.
Digraph relabel(const Digraph& g, std::span<const Vertex> perm);
SimpleGraph relabel(const SimpleGraph& g, std::span<const Vertex> perm);

// Text format: first line `n directed|undirected`, then one `u v` per line.
// Blank lines and lines starting with '#' are ignored.
using AnyGraph = std::variant<Digraph, SimpleGraph>;

AnyGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Digraph& g);
void write_graph(std::ostream& out, const SimpleGraph& g);
void write_graph(std::ostream& out, const AnyGraph& g);

}  // namespace mgraph
