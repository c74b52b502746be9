#include "mgraph/digraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <queue>

#include "mgraph/error.hpp"

namespace mgraph {

std::vector<std::vector<Vertex>> ComponentDecomposition::members() const {
  std::vector<std::vector<Vertex>> result(count);
  for (Vertex v = 0; v < static_cast<int>(component.size()); ++v) {
    result[component[v]].push_back(v);
  }
  return result;
}

namespace {

template <typename NeighborFn>
ComponentDecomposition components_impl(int n, NeighborFn&& neighbors) {
  ComponentDecomposition result;
  result.component.assign(n, -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (result.component[s] != -1) continue;
    const int id = result.count++;
    result.component[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      neighbors(u, [&](Vertex v) {
        if (result.component[v] == -1) {
          result.component[v] = id;
          stack.push_back(v);
        }
      });
    }
  }
  return result;
}

}  // namespace

ComponentDecomposition weak_components(const Digraph& g) {
  return components_impl(g.order(), [&g](Vertex u, auto&& visit) {
    for (Vertex v : g.out(u)) visit(v);
    for (Vertex v : g.in(u)) visit(v);
  });
}

ComponentDecomposition weak_components(const SimpleGraph& g) {
  return components_impl(g.order(), [&g](Vertex u, auto&& visit) {
    for (Vertex v : g.neighbors(u)) visit(v);
  });
}

namespace {

int count_reachable(const Digraph& g, Vertex s, bool forward) {
  std::vector<char> seen(g.order());
  std::vector<Vertex> stack{s};
  seen[s] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : forward ? g.out(u) : g.in(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count;
}

// Unit vertex-capacity max flow between s and t on a split graph. Vertex v
// becomes v_in = 2v and v_out = 2v + 1; s and t are uncapacitated. Stops as
// soon as the flow reaches `limit`.
class VertexFlow {
 public:
  explicit VertexFlow(int n) : n_(n), cap_(4 * n * n, 0) {}

  void add_arc(Vertex u, Vertex v) { arcs_.emplace_back(u, v); }

  int max_flow(Vertex s, Vertex t, int limit) {
    const int m = 2 * n_;
    std::fill(cap_.begin(), cap_.end(), 0);
    const int big = n_ + 1;
    for (Vertex v = 0; v < n_; ++v) {
      cap(2 * v, 2 * v + 1) = (v == s || v == t) ? big : 1;
    }
    for (auto [u, v] : arcs_) {
      if (u != v) cap(2 * u + 1, 2 * v) = big;
    }
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    std::vector<int> parent(m);
    while (flow < limit) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[source] = source;
      std::queue<int> queue;
      queue.push(source);
      while (!queue.empty() && parent[sink] == -1) {
        const int u = queue.front();
        queue.pop();
        for (int v = 0; v < m; ++v) {
          if (parent[v] == -1 && cap(u, v) > 0) {
            parent[v] = u;
            queue.push(v);
          }
        }
      }
      if (parent[sink] == -1) break;
      for (int v = sink; v != source; v = parent[v]) {
        --cap(parent[v], v);
        ++cap(v, parent[v]);
      }
      ++flow;
    }
    return flow;
  }

 private:
  int& cap(int u, int v) { return cap_[u * 2 * n_ + v]; }

  int n_;
  std::vector<int> cap_;
  std::vector<Arc> arcs_;
};

}  // namespace

bool is_strongly_connected(const Digraph& g) {
  if (g.order() <= 1) return true;
  return count_reachable(g, 0, true) == g.order() &&
         count_reachable(g, 0, false) == g.order();
}

int strong_connectivity(const Digraph& g) {
  const int n = g.order();
  if (n < 2) throw InputError("strong connectivity needs at least two vertices");
  if (!is_strongly_connected(g)) throw InputError("digraph is not strongly connected");
  VertexFlow flow(n);
  for (auto [u, v] : g.arcs()) flow.add_arc(u, v);
  int best = n - 1;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = 0; t < n; ++t) {
      if (s == t || g.has_arc(s, t)) continue;
      best = std::min(best, flow.max_flow(s, t, best));
    }
  }
  return best;
}

int vertex_connectivity(const SimpleGraph& g) {
  const int n = g.order();
  if (n < 2) throw InputError("vertex connectivity needs at least two vertices");
  if (weak_components(g).count > 1) return 0;
  VertexFlow flow(n);
  for (auto [u, v] : g.edges()) {
    flow.add_arc(u, v);
    flow.add_arc(v, u);
  }
  int best = n - 1;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      best = std::min(best, flow.max_flow(s, t, best));
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace {

constexpr int kHardCap = 31;

struct DenseGraph {
  int n = 0;
  bool directed = false;
  std::vector<std::uint32_t> out;  // out[u] bit v: arc (u,v)
  std::vector<std::uint32_t> in;
};

DenseGraph dense(const Digraph& g) {
  DenseGraph d{g.order(), true, std::vector<std::uint32_t>(g.order()),
               std::vector<std::uint32_t>(g.order())};
  for (auto [u, v] : g.arcs()) {
    d.out[u] |= 1u << v;
    d.in[v] |= 1u << u;
  }
  return d;
}

DenseGraph dense(const SimpleGraph& g) {
  DenseGraph d{g.order(), false, std::vector<std::uint32_t>(g.order()),
               std::vector<std::uint32_t>(g.order())};
  for (auto [u, v] : g.edges()) {
    d.out[u] |= 1u << v;
    d.out[v] |= 1u << u;
  }
  d.in = d.out;
  return d;
}

// Iterated color refinement. Colors are ranks of isomorphism-invariant
// signatures, so the resulting ordered partition is canonical.
std::vector<int> refine(const DenseGraph& g, std::span<const int> initial) {
  const int n = g.n;
  std::vector<int> color(n);
  {
    std::vector<std::vector<int>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v] = {initial.empty() ? 0 : initial[v], std::popcount(g.out[v]),
                std::popcount(g.in[v]), static_cast<int>((g.out[v] >> v) & 1u)};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                  sorted.begin());
    }
  }
  int classes = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> outs;
      std::vector<int> ins;
      for (Vertex w = 0; w < n; ++w) {
        if ((g.out[v] >> w) & 1u) outs.push_back(color[w]);
        if (g.directed && ((g.in[v] >> w) & 1u)) ins.push_back(color[w]);
      }
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      sig[v].push_back(color[v]);
      sig[v].push_back(-1);
      sig[v].insert(sig[v].end(), outs.begin(), outs.end());
      sig[v].push_back(-2);
      sig[v].insert(sig[v].end(), ins.begin(), ins.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const int next_classes = static_cast<int>(sorted.size());
    for (Vertex v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                  sorted.begin());
    }
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return color;
}

// Branch and bound over vertex orders that list color classes in increasing
// order. The adjacency string is emitted block by block: placing the vertex at
// position k appends the entries between it and positions 0..k.
class CanonicalSearch {
 public:
  CanonicalSearch(const DenseGraph& g, std::vector<int> color)
      : g_(g), color_(std::move(color)), order_(g.n), cur_(g.n), best_(g.n) {
    slot_color_ = color_;
    std::sort(slot_color_.begin(), slot_color_.end());
  }

  void run() {
    placed_ = 0;
    dfs(0, true);
  }

  const std::vector<Vertex>& best_order() const { return best_order_; }
  const std::vector<std::uint64_t>& best_blocks() const { return best_; }

 private:
  std::uint64_t block(int k, Vertex v) const {
    std::uint64_t bits = 0;
    for (int j = 0; j < k; ++j) {
      const Vertex w = order_[j];
      bits = (bits << 1) | ((g_.out[v] >> w) & 1u);
      if (g_.directed) bits = (bits << 1) | ((g_.out[w] >> v) & 1u);
    }
    if (g_.directed) bits = (bits << 1) | ((g_.out[v] >> v) & 1u);
    return bits;
  }

  void dfs(int k, bool tight) {
    const int n = g_.n;
    if (k == n) {
      if (!have_best_ || !tight) {
        best_ = cur_;
        best_order_ = order_;
        have_best_ = true;
        ++version_;
      }
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if ((placed_ >> v) & 1u) continue;
      if (color_[v] != slot_color_[k]) continue;
      const std::uint64_t b = block(k, v);
      bool child_tight = false;
      if (have_best_ && tight) {
        if (b > best_[k]) continue;
        child_tight = b == best_[k];
      }
      order_[k] = v;
      cur_[k] = b;
      placed_ |= 1u << v;
      const auto before = version_;
      dfs(k + 1, have_best_ ? child_tight : false);
      placed_ &= ~(1u << v);
      // A new best found below this prefix shares the prefix.
      if (version_ != before) tight = true;
    }
  }

  const DenseGraph& g_;
  std::vector<int> color_;
  std::vector<int> slot_color_;
  std::vector<Vertex> order_;
  std::vector<std::uint64_t> cur_;
  std::vector<std::uint64_t> best_;
  std::vector<Vertex> best_order_;
  std::uint32_t placed_ = 0;
  bool have_best_ = false;
  std::uint64_t version_ = 0;
};

std::pair<std::string, std::vector<Vertex>> canonical_impl(const DenseGraph& g,
                                                           std::span<const int> colors,
                                                           int cap) {
  if (g.n > cap || g.n > kHardCap) {
    throw InputError("canonical form: order " + std::to_string(g.n) +
                     " exceeds cap " + std::to_string(std::min(cap, kHardCap)));
  }
  if (!colors.empty() && static_cast<int>(colors.size()) != g.n) {
    throw InputError("canonical form: color vector has wrong length");
  }
  auto color = refine(g, colors);
  CanonicalSearch search(g, color);
  search.run();
  const auto& order = search.best_order();

  std::string out;
  out.push_back(g.directed ? 'D' : 'U');
  out.push_back(static_cast<char>(g.n));
  if (!colors.empty()) {
    out.push_back('c');
    for (Vertex v : order) {
      const int c = colors[v];
      for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((c >> shift) & 0xff));
    }
  }
  std::uint8_t acc = 0;
  int nbits = 0;
  auto emit = [&](bool bit) {
    acc = static_cast<std::uint8_t>((acc << 1) | (bit ? 1 : 0));
    if (++nbits == 8) {
      out.push_back(static_cast<char>(acc));
      acc = 0;
      nbits = 0;
    }
  };
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) {
      if (!g.directed && j <= i) continue;
      emit((g.out[order[i]] >> order[j]) & 1u);
    }
  }
  if (nbits) out.push_back(static_cast<char>(acc << (8 - nbits)));

  std::vector<Vertex> position(g.n);
  for (int i = 0; i < g.n; ++i) position[order[i]] = i;
  return {out, position};
}

}  // namespace

std::string canonical_form(const Digraph& g, std::span<const int> colors, int cap) {
  return canonical_impl(dense(g), colors, cap).first;
}

std::string canonical_form(const SimpleGraph& g, std::span<const int> colors, int cap) {
  return canonical_impl(dense(g), colors, cap).first;
}

std::vector<Vertex> canonical_relabeling(const Digraph& g, std::span<const int> colors,
                                         int cap) {
  return canonical_impl(dense(g), colors, cap).second;
}

std::string to_hex(const std::string& canonical) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(canonical.size() * 2);
  for (unsigned char c : canonical) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xf]);
  }
  return out;
}

namespace {

template <typename G>
std::vector<Vertex> orbits_impl(const G& g, int cap) {
  const int n = g.order();
  std::vector<Vertex> orbit(n);
  std::map<std::string, Vertex> first;
  std::vector<int> colors(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    colors[v] = 1;
    auto key = canonical_form(g, colors, cap);
    colors[v] = 0;
    auto [it, inserted] = first.emplace(std::move(key), v);
    orbit[v] = it->second;
  }
  return orbit;
}

}  // namespace

std::vector<Vertex> automorphism_orbits(const Digraph& g, int cap) {
  return orbits_impl(g, cap);
}

std::vector<Vertex> automorphism_orbits(const SimpleGraph& g, int cap) {
  return orbits_impl(g, cap);
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

std::vector<SimpleGraph> extend_by_vertex(const std::vector<SimpleGraph>& smaller,
                                          int max_degree, int cap) {
  std::map<std::string, SimpleGraph> reps;
  for (const auto& h : smaller) {
    const int m = h.order();
    std::vector<Vertex> open;
    for (Vertex v = 0; v < m; ++v) {
      if (h.degree(v) < max_degree) open.push_back(v);
    }
    const std::uint32_t limit = 1u << open.size();
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
      if (std::popcount(mask) > max_degree) continue;
      SimpleGraph g(m + 1);
      for (auto [u, v] : h.edges()) g.add_edge(u, v);
      for (std::size_t i = 0; i < open.size(); ++i) {
        if ((mask >> i) & 1u) g.add_edge(open[i], m);
      }
      auto key = canonical_form(g, {}, cap);
      reps.try_emplace(std::move(key), std::move(g));
    }
  }
  std::vector<SimpleGraph> result;
  result.reserve(reps.size());
  for (auto& [key, g] : reps) result.push_back(std::move(g));
  return result;
}

std::vector<SimpleGraph> bounded_degree_graphs(int n, int max_degree) {
  std::vector<SimpleGraph> level{SimpleGraph(1)};
  for (int m = 2; m <= n; ++m) level = extend_by_vertex(level, max_degree, n);
  return level;
}

std::vector<SimpleGraph> free_trees(int n) {
  std::vector<SimpleGraph> level{SimpleGraph(1)};
  for (int m = 2; m <= n; ++m) {
    std::map<std::string, SimpleGraph> reps;
    for (const auto& t : level) {
      for (Vertex v = 0; v < t.order(); ++v) {
        SimpleGraph g(m);
        for (auto [a, b] : t.edges()) g.add_edge(a, b);
        g.add_edge(v, m - 1);
        auto key = canonical_form(g, {}, n);
        reps.try_emplace(std::move(key), std::move(g));
      }
    }
    level.clear();
    for (auto& [key, g] : reps) level.push_back(std::move(g));
  }
  return level;
}

}  // namespace

std::vector<SimpleGraph> enumerate_graphs(int n, GraphClass cls) {
  if (n < 1) throw InputError("enumeration needs n >= 1");
  switch (cls) {
    case GraphClass::simple:
      if (n > 8) throw InputError("simple graph enumeration is capped at n = 8");
      return bounded_degree_graphs(n, n);
    case GraphClass::free_tree:
      if (n > 12) throw InputError("tree enumeration is capped at n = 12");
      return free_trees(n);
    default:
      throw InputError("graph class is directed; use enumerate_digraphs");
  }
}

std::vector<SimpleGraph> enumerate_regular_graphs(int n, int d) {
  if (n < 1 || n > 10) throw InputError("regular graph enumeration needs 1 <= n <= 10");
  if (d < 0 || d >= n) return {};
  std::vector<SimpleGraph> result;
  for (auto& g : bounded_degree_graphs(n, d)) {
    if (g.min_degree() == d && g.max_degree() == d) result.push_back(std::move(g));
  }
  return result;
}

std::vector<Digraph> enumerate_digraphs(int n, GraphClass cls) {
  if (n < 1) throw InputError("enumeration needs n >= 1");
  std::map<std::string, Digraph> reps;
  auto consider = [&](Digraph g) {
    auto key = canonical_form(g, {}, n);
    reps.try_emplace(std::move(key), std::move(g));
  };
  switch (cls) {
    case GraphClass::digraph_min_outdeg1:
    case GraphClass::digraph_outregular: {
      if (n > 4) throw InputError("digraph enumeration is capped at n = 4");
      const std::uint32_t rows = (1u << n) - 1;  // non-empty out-neighborhoods
      std::vector<std::uint32_t> choice(n, 1);
      while (true) {
        bool keep = true;
        if (cls == GraphClass::digraph_outregular) {
          for (int v = 1; v < n; ++v) {
            if (std::popcount(choice[v]) != std::popcount(choice[0])) keep = false;
          }
        }
        if (keep) {
          Digraph g(n);
          for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = 0; v < n; ++v) {
              if ((choice[u] >> v) & 1u) g.add_arc(u, v);
            }
          }
          consider(std::move(g));
        }
        int pos = 0;
        while (pos < n && choice[pos] == rows) choice[pos++] = 1;
        if (pos == n) break;
        ++choice[pos];
      }
      break;
    }
    case GraphClass::one_outregular: {
      if (n > 7) throw InputError("functional digraph enumeration is capped at n = 7");
      std::vector<Vertex> succ(n, 0);
      while (true) {
        Digraph g(n);
        for (Vertex u = 0; u < n; ++u) g.add_arc(u, succ[u]);
        consider(std::move(g));
        int pos = 0;
        while (pos < n && succ[pos] == n - 1) succ[pos++] = 0;
        if (pos == n) break;
        ++succ[pos];
      }
      break;
    }
    default:
      throw InputError("graph class is undirected; use enumerate_graphs");
  }
  std::vector<Digraph> result;
  result.reserve(reps.size());
  for (auto& [key, g] : reps) result.push_back(std::move(g));
  return result;
}

}  // namespace mgraph
