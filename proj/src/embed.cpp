#include "mgraph/embed.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "mgraph/digraph.hpp"
#include "mgraph/error.hpp"
#include "mgraph/invariants.hpp"

namespace mgraph {

FunctionFamily greedy_cover(const Digraph& g, int k) {
  const int n = g.order();
  for (Vertex v = 0; v < n; ++v) {
    if (g.out_degree(v) == 0) throw InputError("vertex " + std::to_string(v) + " is a sink");
    if (g.out_degree(v) > k) {
      throw InputError("vertex " + std::to_string(v) + " has out-degree above " +
                       std::to_string(k));
    }
  }
  FunctionFamily fam{n, {}};
  std::vector<std::vector<char>> covered(n);
  for (Vertex v = 0; v < n; ++v) covered[v].assign(g.out_degree(v), 0);
  for (int i = 0; i < k; ++i) {
    Transformation f(n);
    for (Vertex v = 0; v < n; ++v) {
      const auto& targets = g.out(v);
      std::size_t pick = 0;
      for (std::size_t j = 0; j < targets.size(); ++j) {
        if (!covered[v][j]) {
          pick = j;
          break;
        }
      }
      covered[v][pick] = 1;
      f[v] = targets[pick];
    }
    fam.maps.push_back(std::move(f));
  }
  return fam;
}

namespace {

std::string key(const Transformation& f) {
  std::string s;
  s.reserve(f.size() * 2);
  for (Element x : f) {
    s.push_back(static_cast<char>(x & 0xff));
    s.push_back(static_cast<char>((x >> 8) & 0xff));
  }
  return s;
}

}  // namespace

namespace {

// BFS closure that also records step[i][g] = index of fam.maps[g] o maps[i].
struct ClosureGraph {
  std::vector<Transformation> maps;
  std::vector<std::vector<int>> step;
};

ClosureGraph closure_graph(const FunctionFamily& fam, std::size_t cap) {
  Transformation id(fam.ground_size);
  std::iota(id.begin(), id.end(), 0);
  ClosureGraph c{{id}, {}};
  std::unordered_map<std::string, int> index{{key(id), 0}};
  for (std::size_t head = 0; head < c.maps.size(); ++head) {
    std::vector<int> row;
    row.reserve(fam.maps.size());
    for (const auto& f : fam.maps) {
      Transformation h(fam.ground_size);
      for (int x = 0; x < fam.ground_size; ++x) h[x] = f[c.maps[head][x]];
      auto [it, inserted] = index.emplace(key(h), static_cast<int>(c.maps.size()));
      if (inserted) {
        if (c.maps.size() >= cap) throw BudgetError("closure exceeds " + std::to_string(cap) + " maps");
        c.maps.push_back(std::move(h));
      }
      row.push_back(it->second);
    }
    c.step.push_back(std::move(row));
  }
  return c;
}

}  // namespace

std::vector<Transformation> closure(const FunctionFamily& fam, std::size_t cap) {
  return closure_graph(fam, cap).maps;
}

Embedding embed_monoid(const Digraph& g, const FunctionFamily& fam) {
  const int n = g.order();
  if (fam.ground_size != n) throw InputError("family ground set does not match the digraph");
  for (const auto& f : fam.maps) {
    if (static_cast<int>(f.size()) != n) throw InputError("family map has wrong length");
    for (Vertex v = 0; v < n; ++v) {
      if (f[v] < 0 || f[v] >= n || !g.has_arc(v, f[v])) {
        throw InputError("family maps " + std::to_string(v) + " to " + std::to_string(f[v]) +
                         ", which is not an arc");
      }
    }
  }
  for (auto [u, v] : g.arcs()) {
    const bool hit = std::any_of(fam.maps.begin(), fam.maps.end(),
                                 [&](const Transformation& f) { return f[u] == v; });
    if (!hit) {
      throw InputError("arc (" + std::to_string(u) + "," + std::to_string(v) +
                       ") is not covered by the family");
    }
  }

  auto [maps, step] = closure_graph(fam, kClosureCap);
  const int m = static_cast<int>(maps.size());
  if (n + m > kEmbeddingTableCap) {
    throw BudgetError("embedding monoid has " + std::to_string(n + m) + " elements");
  }
  // BFS tree: maps[j] = fam.maps[via[j]] o maps[parent[j]].
  std::vector<int> parent(m, -1);
  std::vector<int> via(m, -1);
  for (int i = 0; i < m; ++i) {
    for (std::size_t g = 0; g < fam.maps.size(); ++g) {
      const int j = step[i][g];
      if (j != 0 && parent[j] < 0 && j > i) {
        parent[j] = i;
        via[j] = static_cast<int>(g);
      }
    }
  }

  const int order = n + m;
  std::vector<Element> products(static_cast<std::size_t>(order) * order);
  auto at = [&](int a, int b) -> Element& {
    return products[static_cast<std::size_t>(a) * order + b];
  };
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) at(x, y) = y;
    for (int i = 0; i < m; ++i) at(x, n + i) = maps[i][x];
  }
  for (int i = 0; i < m; ++i) {
    for (Vertex y = 0; y < n; ++y) at(n + i, y) = y;
    // f * g = g o f, filled along the BFS order of g.
    at(n + i, n) = n + i;
    for (int j = 1; j < m; ++j) at(n + i, n + j) = n + step[at(n + i, n + parent[j]) - n][via[j]];
  }

  std::vector<Element> connection;
  for (std::size_t g = 0; g < fam.maps.size(); ++g) connection.push_back(n + step[0][g]);

  Embedding result;
  result.witness.table = MulTable(order, std::move(products), n);
  result.witness.connection = ConnectionSet(connection);
  result.witness.bijection.resize(n);
  std::iota(result.witness.bijection.begin(), result.witness.bijection.end(), 0);
  result.maps = std::move(maps);
  result.identity_component.resize(m);
  std::iota(result.identity_component.begin(), result.identity_component.end(), n);
  result.digraph = g;
  return result;
}

Embedding embed_undirected(const SimpleGraph& g) {
  const int n = g.order();
  if (n == 0) throw InputError("graph has no vertices");
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) throw InputError("vertex " + std::to_string(v) + " is isolated");
  }
  const int p = pseudoarboricity(g);
  auto oriented = orientation_with_outdegree(g, p).orientation;
  if (!oriented) throw std::logic_error("no orientation at the pseudoarboricity");
  Digraph d = *oriented;
  for (Vertex v = 0; v < n; ++v) {
    if (oriented->out_degree(v) == 0) d.add_arc(v, oriented->in(v).front());
  }
  return embed_monoid(d, greedy_cover(d, p));
}

bool verify_embedding(const Embedding& e) {
  const auto& t = e.witness.table;
  const int order = t.order();
  if (!t.identity()) return false;
  const Element id = *t.identity();

  // Vertices and the family generate M as a semigroup, so Light's test applies.
  std::vector<Element> generators;
  for (Element x = 0; x < e.digraph.order(); ++x) generators.push_back(x);
  generators.insert(generators.end(), e.witness.connection.begin(), e.witness.connection.end());
  generators.push_back(id);
  try {
    if (!validate_table_generated(t, generators).ok()) return false;
  } catch (const InputError&) {
    return false;
  }

  Digraph cay(order);
  for (Element s = 0; s < order; ++s) {
    for (Element c : e.witness.connection) cay.add_arc(s, t(s, c));
  }
  const auto comps = weak_components(cay);
  std::vector<Element> identity_part;
  std::vector<Vertex> rest;
  for (Element x = 0; x < order; ++x) {
    (comps.component[x] == comps.component[id] ? identity_part : rest).push_back(x);
  }
  if (identity_part != e.identity_component) return false;
  std::vector<Vertex> position(order, -1);
  for (std::size_t i = 0; i < rest.size(); ++i) position[rest[i]] = static_cast<int>(i);
  if (static_cast<int>(rest.size()) != e.digraph.order()) return false;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (e.witness.bijection[i] != rest[i]) return false;
  }
  return induced_subgraph(cay, rest) == e.digraph;
}

}  // namespace mgraph
