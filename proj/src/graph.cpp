#include "mgraph/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "mgraph/error.hpp"

namespace mgraph {

namespace {

bool insert_sorted(std::vector<Vertex>& list, Vertex v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) return false;
  list.insert(it, v);
  return true;
}

bool contains_sorted(const std::vector<Vertex>& list, Vertex v) {
  return std::binary_search(list.begin(), list.end(), v);
}

}  // namespace

// ---------------------------------------------------------------------------
// Digraph

Digraph::Digraph(int order) : order_(order), out_(order), in_(order) {
  if (order < 0) throw InputError("negative graph order");
}

Digraph::Digraph(int order, std::span<const Arc> arcs) : Digraph(order) {
  for (auto [u, v] : arcs) add_arc(u, v);
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order_) {
    throw InputError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(order_));
  }
}

bool Digraph::add_arc(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (!insert_sorted(out_[u], v)) return false;
  insert_sorted(in_[v], u);
  ++arc_count_;
  return true;
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  if (u < 0 || u >= order_ || v < 0 || v >= order_) return false;
  return contains_sorted(out_[u], v);
}

int Digraph::min_out_degree() const {
  int best = order_ == 0 ? 0 : out_degree(0);
  for (Vertex v = 1; v < order_; ++v) best = std::min(best, out_degree(v));
  return best;
}

int Digraph::max_out_degree() const {
  int best = 0;
  for (Vertex v = 0; v < order_; ++v) best = std::max(best, out_degree(v));
  return best;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < order_; ++u) {
    for (Vertex v : out_[u]) result.emplace_back(u, v);
  }
  return result;
}

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(int order) : order_(order), adj_(order) {
  if (order < 0) throw InputError("negative graph order");
}

SimpleGraph::SimpleGraph(int order, std::span<const Edge> edges)
    : SimpleGraph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order_) {
    throw InputError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(order_));
  }
}

bool SimpleGraph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("loop at vertex " + std::to_string(u) +
                               " in a simple graph");
  if (!insert_sorted(adj_[u], v)) return false;
  insert_sorted(adj_[v], u);
  ++edge_count_;
  return true;
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= order_ || v < 0 || v >= order_) return false;
  return contains_sorted(adj_[u], v);
}

int SimpleGraph::min_degree() const {
  int best = order_ == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < order_; ++v) best = std::min(best, degree(v));
  return best;
}

int SimpleGraph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < order_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (Vertex u = 0; u < order_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// ColoredMultiDigraph

void ColoredMultiDigraph::add_arc(Vertex u, Vertex v, int color) {
  if (u < 0 || u >= order_ || v < 0 || v >= order_) {
    throw InputError("colored arc endpoint out of range");
  }
  arcs_.push_back({u, v, color});
}

bool ColoredMultiDigraph::operator==(const ColoredMultiDigraph& other) const {
  if (order_ != other.order_ || arcs_.size() != other.arcs_.size()) return false;
  auto a = arcs_;
  auto b = other.arcs_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// ---------------------------------------------------------------------------

SimpleGraph underlying_graph(const Digraph& g) {
  SimpleGraph result(g.order());
  for (auto [u, v] : g.arcs()) {
    if (u != v) result.add_edge(u, v);
  }
  return result;
}

SimpleGraph underlying_graph(const ColoredMultiDigraph& g) {
  SimpleGraph result(g.order());
  for (const auto& arc : g.arcs()) {
    if (arc.source != arc.target) result.add_edge(arc.source, arc.target);
  }
  return result;
}

Digraph symmetric_digraph(const SimpleGraph& g) {
  Digraph result(g.order());
  for (auto [u, v] : g.edges()) {
    result.add_arc(u, v);
    result.add_arc(v, u);
  }
  return result;
}

namespace {

std::vector<int> position_map(int order, std::span<const Vertex> keep) {
  std::vector<int> pos(order, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= order || pos[keep[i]] != -1) {
      throw InputError("invalid vertex selection");
    }
    pos[keep[i]] = static_cast<int>(i);
  }
  return pos;
}

}  // namespace

Digraph induced_subgraph(const Digraph& g, std::span<const Vertex> keep) {
  auto pos = position_map(g.order(), keep);
  Digraph result(static_cast<int>(keep.size()));
  for (auto [u, v] : g.arcs()) {
    if (pos[u] >= 0 && pos[v] >= 0) result.add_arc(pos[u], pos[v]);
  }
  return result;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> keep) {
  auto pos = position_map(g.order(), keep);
  SimpleGraph result(static_cast<int>(keep.size()));
  for (auto [u, v] : g.edges()) {
    if (pos[u] >= 0 && pos[v] >= 0) result.add_edge(pos[u], pos[v]);
  }
  return result;
}

Digraph relabel(const Digraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw InputError("relabeling has wrong length");
  }
  position_map(g.order(), perm);
  Digraph result(g.order());
  for (auto [u, v] : g.arcs()) result.add_arc(perm[u], perm[v]);
  return result;
}

SimpleGraph relabel(const SimpleGraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw InputError("relabeling has wrong length");
  }
  position_map(g.order(), perm);
  SimpleGraph result(g.order());
  for (auto [u, v] : g.edges()) result.add_edge(perm[u], perm[v]);
  return result;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    return true;
  }
  return false;
}

}  // namespace

AnyGraph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) {
    throw InputError("empty graph input");
  }
  std::istringstream header(line);
  long long n = -1;
  std::string kind;
  if (!(header >> n >> kind) || n < 0) {
    throw InputError("expected header `n directed|undirected`", line_no);
  }
  if (kind != "directed" && kind != "undirected") {
    throw InputError("graph kind must be `directed` or `undirected`, got `" +
                         kind + "`",
                     line_no);
  }
  if (n > 1'000'000) throw InputError("graph order too large", line_no);
  const bool directed = kind == "directed";
  Digraph dg(static_cast<int>(n));
  SimpleGraph sg(static_cast<int>(n));
  while (next_content_line(in, line, line_no)) {
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) {
      throw InputError("expected `u v`", line_no);
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("vertex out of range", line_no);
    }
    if (directed) {
      dg.add_arc(static_cast<int>(u), static_cast<int>(v));
    } else {
      if (u == v) throw InputError("loops are not allowed in undirected graphs", line_no);
      sg.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
  }
  if (directed) return dg;
  return sg;
}

void write_graph(std::ostream& out, const Digraph& g) {
  out << g.order() << " directed\n";
  for (auto [u, v] : g.arcs()) out << u << ' ' << v << '\n';
}

void write_graph(std::ostream& out, const SimpleGraph& g) {
  out << g.order() << " undirected\n";
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph(std::ostream& out, const AnyGraph& g) {
  std::visit([&out](const auto& graph) { write_graph(out, graph); }, g);
}

}  // namespace mgraph
