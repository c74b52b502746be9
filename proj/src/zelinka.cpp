#include "mgraph/zelinka.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mgraph/digraph.hpp"
#include "mgraph/error.hpp"

namespace mgraph {

OutregularProfile profile(const Digraph& g) {
  const int n = g.order();
  OutregularProfile p;
  p.successor.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    if (g.out_degree(v) != 1) {
      throw InputError("vertex " + std::to_string(v) + " has out-degree " +
                       std::to_string(g.out_degree(v)) + ", expected 1");
    }
    p.successor[v] = g.out(v).front();
  }
  const auto comps = weak_components(g);
  p.component_of = comps.component;
  p.components.resize(comps.count);
  p.cycle_position.assign(n, -1);
  p.depth.assign(n, -1);

  // Walking n steps from any vertex lands on its component's cycle.
  std::vector<char> on_cycle(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    Vertex x = v;
    for (int i = 0; i < n; ++i) x = p.successor[x];
    if (on_cycle[x]) continue;
    Vertex y = x;
    do {
      on_cycle[y] = 1;
      y = p.successor[y];
    } while (y != x);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!on_cycle[v] || p.cycle_position[v] != -1) continue;
    auto& comp = p.components[p.component_of[v]];
    Vertex y = v;
    do {
      p.cycle_position[y] = static_cast<int>(comp.cycle.size());
      p.depth[y] = 0;
      comp.cycle.push_back(y);
      y = p.successor[y];
    } while (y != v);
    comp.cycle_length = static_cast<int>(comp.cycle.size());
  }
  for (Vertex v = 0; v < n; ++v) {
    int d = 0;
    for (Vertex x = v; !on_cycle[x]; x = p.successor[x]) ++d;
    p.depth[v] = d;
    auto& comp = p.components[p.component_of[v]];
    comp.depth = std::max(comp.depth, d);
  }
  return p;
}

Vertex walk(const OutregularProfile& p, Vertex x, long long k) {
  if (k < 0) throw InputError("walk length must be non-negative");
  while (k > 0 && p.cycle_position[x] < 0) {
    x = p.successor[x];
    --k;
  }
  if (k == 0) return x;
  const auto& cycle = p.components[p.component_of[x]].cycle;
  const long long z = static_cast<long long>(cycle.size());
  return cycle[static_cast<std::size_t>((p.cycle_position[x] + k) % z)];
}

namespace {

std::optional<int> decide(const OutregularProfile& p, int slack) {
  const int count = static_cast<int>(p.components.size());
  for (int c = 0; c < count; ++c) {
    const auto& big = p.components[c];
    bool ok = true;
    for (const auto& d : p.components) {
      if (big.cycle_length % d.cycle_length != 0 || d.depth > big.depth + slack) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
  return std::nullopt;
}

// Lowest-id vertex of component c at maximal depth.
Vertex deepest(const OutregularProfile& p, int c) {
  const int n = static_cast<int>(p.successor.size());
  for (Vertex v = 0; v < n; ++v) {
    if (p.component_of[v] == c && p.depth[v] == p.components[c].depth) return v;
  }
  throw std::logic_error("component without vertices");
}

MulTable monoid_table(const OutregularProfile& p, int c) {
  const int n = static_cast<int>(p.successor.size());
  const auto& comp = p.components[c];
  const Vertex e = deepest(p, c);
  const int span = comp.depth + comp.cycle_length - 1;
  const Vertex omega = walk(p, e, span);

  std::vector<int> r(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (p.component_of[v] != c) continue;
    int dist = 0;
    for (Vertex x = v; x != omega; x = p.successor[x]) ++dist;
    r[v] = span - dist;
  }
  std::vector<Element> products(static_cast<std::size_t>(n) * n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      Element value;
      if (x == e) {
        value = y;
      } else if (p.component_of[y] == c) {
        value = walk(p, x, r[y]);
      } else {
        value = y;
      }
      products[static_cast<std::size_t>(x) * n + y] = value;
    }
  }
  return MulTable(n, std::move(products), e);
}

std::vector<Element> identity_bijection(int n) {
  std::vector<Element> b(n);
  std::iota(b.begin(), b.end(), 0);
  return b;
}

void check_round_trip(const CayleyWitness& w, const Digraph& g) {
  if (!validate_table(w.table).ok() || cayley_digraph(w.table, w.connection) != g) {
    throw std::logic_error("constructed table does not reproduce the digraph");
  }
}

}  // namespace

std::optional<int> decide_monoid(const OutregularProfile& p) { return decide(p, 0); }

std::optional<int> decide_semigroup(const OutregularProfile& p) { return decide(p, 1); }

CayleyWitness construct_monoid(const Digraph& g) {
  const auto p = profile(g);
  const auto c = decide_monoid(p);
  if (!c) throw InputError("digraph is not a monoid digraph: no dominating component");
  CayleyWitness w;
  w.table = monoid_table(p, *c);
  w.connection = ConnectionSet{p.successor[*w.table.identity()]};
  w.bijection = identity_bijection(g.order());
  check_round_trip(w, g);
  return w;
}

CayleyWitness construct_semigroup(const Digraph& g) {
  const auto p = profile(g);
  const auto c = decide_semigroup(p);
  if (!c) throw InputError("digraph is not a semigroup digraph: no dominating component");
  const int n = g.order();

  // Hang a new source u below a deepest vertex of the chosen component; u is
  // then the unique deepest vertex there and becomes the identity.
  Digraph augmented(n + 1);
  for (auto [x, y] : g.arcs()) augmented.add_arc(x, y);
  const Vertex u = n;
  augmented.add_arc(u, deepest(p, *c));
  const auto q = profile(augmented);
  const MulTable full = monoid_table(q, q.component_of[u]);
  if (full.identity() != u) throw std::logic_error("augmented identity misplaced");

  std::vector<Element> products(static_cast<std::size_t>(n) * n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      const Element value = full(x, y);
      if (value == u) throw std::logic_error("product leaves the semigroup");
      products[static_cast<std::size_t>(x) * n + y] = value;
    }
  }
  CayleyWitness w;
  w.table = MulTable(n, std::move(products));
  w.connection = ConnectionSet{q.successor[u]};
  w.bijection = identity_bijection(n);
  check_round_trip(w, g);
  return w;
}

CayleyWitness forest_witness(const SimpleGraph& f) {
  const int n = f.order();
  if (n == 0) throw InputError("forest must have at least one vertex");
  if (static_cast<int>(f.edge_count()) + weak_components(f).count != n) {
    throw InputError("graph has a cycle");
  }
  std::vector<Vertex> parent(n, -1);
  std::vector<char> seen(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    parent[root] = root;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : f.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = x;
          stack.push_back(y);
        }
      }
    }
  }
  Digraph oriented(n);
  for (Vertex v = 0; v < n; ++v) oriented.add_arc(v, parent[v]);
  auto w = construct_monoid(oriented);
  if (underlying_graph(cayley_digraph(w.table, w.connection)) != f) {
    throw std::logic_error("forest witness does not reproduce the forest");
  }
  return w;
}

}  // namespace mgraph
