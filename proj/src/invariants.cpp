#include "mgraph/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <queue>

#include <Eigen/Dense>

#include "mgraph/error.hpp"

namespace mgraph {

namespace {

// Dinic max flow on a small network.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : adj_(nodes), level_(nodes), iter_(nodes) {}

  void add(int u, int v, int cap) {
    adj_[u].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({v, cap});
    adj_[v].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({u, 0});
  }

  int run(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (int f = dfs(s, t, std::numeric_limits<int>::max())) flow += f;
    }
    return flow;
  }

  // Nodes reachable from s in the residual network.
  std::vector<char> reachable(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int id : adj_[u]) {
        const auto& e = edges_[id];
        if (e.cap > 0 && !seen[e.to]) {
          seen[e.to] = 1;
          stack.push_back(e.to);
        }
      }
    }
    return seen;
  }

  // Residual capacity of the arc added as the i-th call to add().
  int residual(int i) const { return edges_[2 * i].cap; }

 private:
  struct Edge {
    int to;
    int cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    level_[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int id : adj_[u]) {
        const auto& e = edges_[id];
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[u] + 1;
          queue.push(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int dfs(int u, int t, int pushed) {
    if (u == t) return pushed;
    for (int& i = iter_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
      const int id = adj_[u][i];
      auto& e = edges_[id];
      if (e.cap > 0 && level_[e.to] == level_[u] + 1) {
        if (int f = dfs(e.to, t, std::min(pushed, e.cap))) {
          e.cap -= f;
          edges_[id ^ 1].cap += f;
          return f;
        }
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

std::vector<std::uint64_t> adjacency_masks(const SimpleGraph& g) {
  std::vector<std::uint64_t> adj(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return adj;
}

int alpha(const std::vector<std::uint64_t>& adj, std::uint64_t candidates, int chosen,
          int best) {
  if (candidates == 0) return std::max(best, chosen);
  if (chosen + std::popcount(candidates) <= best) return best;
  int v_min = -1;
  int deg_min = std::numeric_limits<int>::max();
  int v_max = -1;
  int deg_max = -1;
  for (std::uint64_t rest = candidates; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const int d = std::popcount(adj[v] & candidates);
    if (d < deg_min) {
      deg_min = d;
      v_min = v;
    }
    if (d > deg_max) {
      deg_max = d;
      v_max = v;
    }
  }
  // A vertex of degree <= 1 lies in some maximum independent set.
  if (deg_min <= 1) {
    const std::uint64_t closed = adj[v_min] | (std::uint64_t{1} << v_min);
    return alpha(adj, candidates & ~closed, chosen + 1, best);
  }
  const std::uint64_t closed = adj[v_max] | (std::uint64_t{1} << v_max);
  best = alpha(adj, candidates & ~closed, chosen + 1, best);
  return alpha(adj, candidates & ~(std::uint64_t{1} << v_max), chosen, best);
}

void require_regular(const SpectralProfile& p) {
  if (!p.degree || !p.lambda) throw InputError("graph is not regular");
}

// ceil(q) for a rational q.
boost::multiprecision::cpp_int ceil_of(const Rational& q) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(q);
  const cpp_int den = boost::multiprecision::denominator(q);
  cpp_int quotient = num / den;
  if (quotient * den < num) ++quotient;
  return quotient;
}

}  // namespace

int arboricity(const SimpleGraph& g) {
  const int n = g.order();
  if (n > 20) throw InputError("arboricity is capped at order 20");
  const auto adj = adjacency_masks(g);
  int best = 0;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const int size = std::popcount(mask);
    if (size < 2) continue;
    int twice = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      twice += std::popcount(adj[std::countr_zero(rest)] & mask);
    }
    const int edges = twice / 2;
    best = std::max(best, (edges + size - 2) / (size - 1));
  }
  return best;
}

OrientationResult orientation_with_outdegree(const SimpleGraph& g, int k) {
  const int n = g.order();
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (k < 0) throw InputError("out-degree bound must be non-negative");
  // Nodes: source, m edge nodes, n vertex nodes, sink.
  const int source = 0;
  const int sink = 1 + m + n;
  MaxFlow flow(m + n + 2);
  for (int i = 0; i < m; ++i) flow.add(source, 1 + i, 1);
  for (int i = 0; i < m; ++i) {
    flow.add(1 + i, 1 + m + edges[i].first, 1);
    flow.add(1 + i, 1 + m + edges[i].second, 1);
  }
  for (Vertex v = 0; v < n; ++v) flow.add(1 + m + v, sink, k);

  OrientationResult result;
  if (flow.run(source, sink) == m) {
    Digraph d(n);
    for (int i = 0; i < m; ++i) {
      auto [u, v] = edges[i];
      // The endpoint receiving the edge's unit of flow is its tail.
      if (flow.residual(m + 2 * i) == 0) {
        d.add_arc(u, v);
      } else {
        d.add_arc(v, u);
      }
    }
    result.orientation = std::move(d);
  } else {
    const auto seen = flow.reachable(source);
    for (Vertex v = 0; v < n; ++v) {
      if (seen[1 + m + v]) result.dense_set.push_back(v);
    }
  }
  return result;
}

int pseudoarboricity(const SimpleGraph& g) {
  const int n = g.order();
  const int m = static_cast<int>(g.edge_count());
  if (m == 0) return 0;
  for (int k = (m + n - 1) / n;; ++k) {
    if (orientation_with_outdegree(g, k).orientation) return k;
  }
}

int independence_number(const SimpleGraph& g) {
  const int n = g.order();
  if (n > 40) throw InputError("independence number is capped at order 40");
  if (n == 0) return 0;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return alpha(adjacency_masks(g), all, 0, 0);
}

int beta(const SimpleGraph& g, int k, std::uint64_t budget) {
  const int n = g.order();
  if (k < 0) throw InputError("k must be non-negative");
  if (k == 0) return independence_number(g);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      throw InputError("vertex " + std::to_string(v) + " is isolated, no incident edge to select");
    }
  }
  if (n > 40) throw InputError("beta is capped at order 40");

  // Removing more edges never lowers the independence number, so every
  // vertex selects min(k, deg) distinct incident edges.
  const auto edges = g.edges();
  auto edge_index = [&](Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), Edge{u, v}) -
                            edges.begin());
  };
  std::vector<std::vector<std::vector<int>>> choices(n);
  long double count = 1;
  for (Vertex v = 0; v < n; ++v) {
    const auto& nb = g.neighbors(v);
    const int deg = static_cast<int>(nb.size());
    const int pick = std::min(k, deg);
    for (std::uint32_t mask = 0; mask < (1u << deg); ++mask) {
      if (std::popcount(mask) != pick) continue;
      std::vector<int> chosen;
      for (int i = 0; i < deg; ++i) {
        if ((mask >> i) & 1u) chosen.push_back(edge_index(v, nb[i]));
      }
      choices[v].push_back(std::move(chosen));
    }
    count *= static_cast<long double>(choices[v].size());
  }
  if (count > static_cast<long double>(budget)) {
    throw BudgetError("beta would scan more than " + std::to_string(budget) + " selections");
  }

  std::vector<int> removed(edges.size(), 0);
  std::vector<std::size_t> pos(n, 0);
  int best = 0;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  auto apply = [&](Vertex v, int delta) {
    for (int e : choices[v][pos[v]]) removed[e] += delta;
  };
  for (Vertex v = 0; v < n; ++v) apply(v, 1);
  while (true) {
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (removed[i]) continue;
      auto [u, v] = edges[i];
      adj[u] |= std::uint64_t{1} << v;
      adj[v] |= std::uint64_t{1} << u;
    }
    best = std::max(best, alpha(adj, all, 0, best));
    int v = 0;
    while (v < n) {
      apply(v, -1);
      if (++pos[v] < choices[v].size()) {
        apply(v, 1);
        break;
      }
      pos[v] = 0;
      apply(v, 1);
      ++v;
    }
    if (v == n) break;
  }
  return best;
}

SpectralProfile spectrum(const SimpleGraph& g) {
  const int n = g.order();
  if (n > 2000) throw InputError("spectrum is capped at order 2000");
  SpectralProfile p;
  p.n = n;
  if (n == 0) return p;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  for (int i = n - 1; i >= 0; --i) p.eigenvalues.push_back(values(i));
  if (g.min_degree() != g.max_degree()) return p;
  const int d = g.min_degree();
  p.degree = d;
  double lambda = 0;
  bool dropped_d = false;
  for (double mu : p.eigenvalues) {
    if (!dropped_d && std::abs(mu - d) <= kSpectralTolerance) {
      dropped_d = true;
      continue;
    }
    if (std::abs(mu + d) <= kSpectralTolerance) continue;
    lambda = std::max(lambda, std::abs(mu));
  }
  p.lambda = std::min(lambda, static_cast<double>(d));
  return p;
}

Rational round_up(double x) {
  const long long units = static_cast<long long>(std::ceil(x * 1e8));
  return Rational(units, 100'000'000LL);
}

MixingResult mixing_check(const SimpleGraph& g, const SpectralProfile& p,
                          std::span<const Vertex> s, std::span<const Vertex> t) {
  require_regular(p);
  const int n = g.order();
  std::vector<char> in_t(n, 0);
  for (Vertex v : t) in_t.at(v) = 1;
  long long ordered = 0;
  for (Vertex u : s) {
    for (Vertex v : g.neighbors(u)) ordered += in_t[v];
  }
  const double ss = static_cast<double>(s.size());
  const double tt = static_cast<double>(t.size());
  MixingResult r;
  r.deviation = std::abs(static_cast<double>(ordered) - *p.degree * ss * tt / n);
  r.bound = *p.lambda * std::sqrt(ss * tt * (1 - ss / n) * (1 - tt / n));
  r.holds = r.deviation <= r.bound + 1e-6;
  return r;
}

Rational beta_upper_bound(int n, int d, const Rational& lambda, int k) {
  if (d < 1) throw InputError("degree must be at least 1");
  return Rational(n) / d * (lambda + 2 * k);
}

Rational beta_upper_bound(const SpectralProfile& p, int k) {
  require_regular(p);
  return beta_upper_bound(p.n, *p.degree, round_up(*p.lambda), k);
}

Rational beta_lower_bound(int n, int delta, int max_degree, int k) {
  if (max_degree < 2) throw InputError("maximum degree must be at least 2");
  return Rational(n) / (max_degree - 1) * (Rational(delta, 2) - k - 1);
}

int connectivity_bound(const SpectralProfile& p) {
  require_regular(p);
  const int d = *p.degree;
  if (d == 0) return 0;
  Rational lambda = round_up(*p.lambda);
  if (lambda > d) lambda = d;
  const Rational gap = Rational(d) - lambda;
  const Rational value = gap * gap / d + 1;
  const auto k = ceil_of(value) - 1;
  return std::max(0, static_cast<int>(k));
}

namespace {

bool triangle_free(const SimpleGraph& g) {
  for (auto [u, v] : g.edges()) {
    for (Vertex w : g.neighbors(u)) {
      if (w != v && g.has_edge(v, w)) return false;
    }
  }
  return true;
}

NonmonoidCertificate confront(int n, int delta, int max_degree, std::optional<Rational> lambda,
                              int d, int k, int ell, std::vector<Hypothesis> hyps) {
  NonmonoidCertificate cert;
  hyps.push_back({"k >= 0", k >= 0});
  hyps.push_back({"max degree >= 2", max_degree >= 2});
  hyps.push_back({"ell > 2 max degree + 2k + 1", ell > 2 * max_degree + 2 * k + 1});
  if (max_degree >= 2) cert.lower = beta_lower_bound(n, delta, max_degree, k);
  if (lambda && d >= 1) cert.upper = beta_upper_bound(n, d, *lambda, k);
  cert.conclusive = std::all_of(hyps.begin(), hyps.end(), [](const Hypothesis& h) { return h.holds; }) &&
                    cert.lower > cert.upper;
  cert.hypotheses = std::move(hyps);
  return cert;
}

}  // namespace

NonmonoidCertificate nonmonoid_certificate(const SimpleGraph& g, int k, int ell) {
  const auto p = spectrum(g);
  std::vector<Hypothesis> hyps{{"regular", p.degree.has_value()},
                               {"triangle-free", triangle_free(g)}};
  std::optional<Rational> lambda;
  if (p.lambda) lambda = round_up(*p.lambda);
  return confront(g.order(), g.order() ? g.min_degree() : 0, g.order() ? g.max_degree() : 0,
                  lambda, p.degree.value_or(0), k, ell, std::move(hyps));
}

NonmonoidCertificate nonmonoid_certificate(int n, int d, const Rational& lambda, int k, int ell) {
  std::vector<Hypothesis> hyps{{"regular", true}, {"triangle-free (assumed)", true}};
  return confront(n, d, d, lambda, d, k, ell, std::move(hyps));
}

}  // namespace mgraph
