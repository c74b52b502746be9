#include "mgraph/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mgraph/digraph.hpp"
#include "mgraph/error.hpp"
#include "mgraph/trees.hpp"

namespace mgraph {

Digraph gen_Gkl(int k, int ell) {
  if (k < 1 || ell < 1) throw InputError("G_{k,l} needs k, l >= 1");
  if (k == 1) {
    // Layer 0 is a single vertex; the merge below would be trivial anyway.
    Digraph g(1 + (ell - 1));
    for (int i = 0; i + 1 < ell; ++i) g.add_arc(i, i + 1);
    g.add_arc(ell - 1, 0);
    return g;
  }
  return gen_Gklk(k, ell, 1);
}

int gklk_layer0_size(int k, int kappa) { return (k / kappa) * k; }

Digraph gen_Gklk(int k, int ell, int kappa) {
  if (k < 2 || ell < 1 || kappa < 1 || k / kappa < 1) {
    throw InputError("G_{k,l,kappa} needs k > 1, l >= 1, kappa >= 1 and floor(k/kappa) >= 1");
  }
  const int k2 = k * k;
  const int blocks = k / kappa;  // after merging a trailing partial block
  auto class_key = [&](int j) {
    const int block = std::min(j / (k * kappa), blocks - 1);
    return std::pair{block, j % k};
  };
  std::map<std::pair<int, int>, int> class_id;
  std::vector<int> merged(k2);
  for (int j = 0; j < k2; ++j) {
    auto [it, inserted] = class_id.emplace(class_key(j), static_cast<int>(class_id.size()));
    merged[j] = it->second;
  }
  const int v0 = static_cast<int>(class_id.size());
  auto layer = [&](int i, int j) { return i == 0 ? merged[j] : v0 + (i - 1) * k + j; };

  Digraph g(v0 + (ell - 1) * k);
  auto width = [&](int i) { return i == 0 ? k2 : k; };
  for (int i = 0; i + 1 < ell; ++i) {
    for (int j1 = 0; j1 < width(i); ++j1) {
      for (int j2 = 0; j2 < width(i + 1); ++j2) g.add_arc(layer(i, j1), layer(i + 1, j2));
    }
  }
  for (int j1 = 0; j1 < width(ell - 1); ++j1) {
    for (int j2 = 0; j2 < k2; ++j2) {
      if (j1 == j2 / k) g.add_arc(layer(ell - 1, j1), layer(0, j2));
    }
  }

  if (v0 != gklk_layer0_size(k, kappa)) throw std::logic_error("layer 0 has the wrong size");
  if (ell >= 2) {
    if (g.min_out_degree() != k || g.max_out_degree() != k) {
      throw std::logic_error("G_{k,l,kappa} is not k-outregular");
    }
    if (!is_strongly_connected(g)) throw std::logic_error("G_{k,l,kappa} is not strongly connected");
  }
  return g;
}

ThresholdGraph gen_threshold(const std::vector<ThresholdStep>& steps) {
  const int n = static_cast<int>(steps.size()) + 1;
  SimpleGraph g(n);
  std::vector<Element> products(static_cast<std::size_t>(n) * n, 0);
  std::vector<Element> connection;
  for (int x = 1; x < n; ++x) {
    const bool dominating = steps[x - 1] == ThresholdStep::dominating;
    for (int v = 0; v < x; ++v) {
      if (dominating) g.add_edge(v, x);
    }
    if (dominating) connection.push_back(x);
  }
  // Element x absorbs every element added before it; the seed 0 is the identity.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      products[static_cast<std::size_t>(a) * n + b] = a == 0 ? b : b == 0 ? a : std::max(a, b);
    }
  }
  if (connection.empty()) connection.push_back(0);
  ThresholdGraph result{std::move(g), {}};
  result.witness.table = MulTable(n, std::move(products), 0);
  result.witness.connection = ConnectionSet(connection);
  result.witness.bijection.resize(n);
  for (int i = 0; i < n; ++i) result.witness.bijection[i] = i;
  if (underlying_graph(cayley_digraph(result.witness.table, result.witness.connection)) !=
      result.graph) {
    throw std::logic_error("threshold witness does not reproduce the graph");
  }
  return result;
}

SimpleGraph gen_K4_Cl(int ell) {
  if (ell < 3) throw InputError("cycle length must be at least 3");
  SimpleGraph g(4 + ell);
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) g.add_edge(u, v);
  }
  for (int i = 0; i < ell; ++i) g.add_edge(4 + i, 4 + (i + 1) % ell);
  return g;
}

namespace {

// Breadth-first perfect tree; depth[v] returned alongside.
std::pair<std::vector<Edge>, std::vector<int>> perfect_tree(int k, int h) {
  std::vector<Edge> edges;
  std::vector<int> depth{0};
  for (std::size_t head = 0; head < depth.size(); ++head) {
    if (depth[head] == h) continue;
    for (int c = 0; c < k; ++c) {
      const Vertex child = static_cast<Vertex>(depth.size());
      depth.push_back(depth[head] + 1);
      edges.emplace_back(static_cast<Vertex>(head), child);
    }
  }
  return {edges, depth};
}

}  // namespace

RootedTree gen_perfect_kary(int k, int h) {
  if (k < 1 || h < 0) throw InputError("perfect tree needs k >= 1, h >= 0");
  auto [edges, depth] = perfect_tree(k, h);
  return {SimpleGraph(static_cast<int>(depth.size()), edges), 0};
}

RootedTree gen_Tplus(int k, int h) {
  if (k < 1 || h < 1) throw InputError("T+ needs k >= 1, h >= 1");
  auto [edges, depth] = perfect_tree(k, h);
  const Vertex parent = static_cast<Vertex>(std::find(depth.begin(), depth.end(), h - 1) - depth.begin());
  const Vertex leaf = static_cast<Vertex>(depth.size());
  edges.emplace_back(parent, leaf);
  return {SimpleGraph(leaf + 1, edges), 0};
}

Digraph fig2_digraph() {
  Digraph g(3);
  for (auto [u, v] : {Arc{0, 0}, Arc{0, 1}, Arc{1, 0}, Arc{1, 2}, Arc{2, 1}, Arc{2, 2}}) {
    g.add_arc(u, v);
  }
  return g;
}

SimpleGraph smallest_nongenerated_tree() {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& t : enumerate_graphs(n, GraphClass::free_tree)) {
      if (classify_tree(t).status == TreeStatus::no) return t;
    }
  }
  throw std::logic_error("no tree of order at most 7 was classified negative");
}

}  // namespace mgraph
