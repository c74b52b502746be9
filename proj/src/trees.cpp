#include "mgraph/trees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>

#include "mgraph/digraph.hpp"
#include "mgraph/error.hpp"
#include "mgraph/recognize.hpp"

namespace mgraph {

const char* to_string(TreeStatus s) {
  switch (s) {
    case TreeStatus::yes:
      return "Yes";
    case TreeStatus::no:
      return "No";
    case TreeStatus::undecided:
      return "Undecided";
  }
  return "?";
}

namespace {

void require_tree(const SimpleGraph& t) {
  if (t.order() == 0) throw InputError("tree has no vertices");
  if (static_cast<int>(t.edge_count()) != t.order() - 1 || weak_components(t).count != 1) {
    throw InputError("graph is not a tree");
  }
}

}  // namespace

RootedTreeAnalysis analyze(const SimpleGraph& t, Vertex e) {
  require_tree(t);
  const int n = t.order();
  if (e < 0 || e >= n) throw InputError("root out of range");
  RootedTreeAnalysis a{t, e, std::vector<int>(n, -1), std::vector<int>(n, 0),
                       std::vector<Vertex>(n, -1)};
  std::queue<Vertex> queue;
  a.depth[e] = 0;
  queue.push(e);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    for (Vertex y : t.neighbors(x)) {
      if (a.depth[y] >= 0) continue;
      a.depth[y] = a.depth[x] + 1;
      a.branch[y] = x == e ? y : a.branch[x];
      ++a.successors[x];
      queue.push(y);
    }
  }
  return a;
}

bool sufficient_check(const RootedTreeAnalysis& a) {
  const int n = a.tree.order();
  const int height = *std::max_element(a.depth.begin(), a.depth.end());
  std::vector<int> max_b(height + 1, 0);
  std::vector<int> min_b(height + 1, n);
  for (Vertex v = 0; v < n; ++v) {
    max_b[a.depth[v]] = std::max(max_b[a.depth[v]], a.successors[v]);
    min_b[a.depth[v]] = std::min(min_b[a.depth[v]], a.successors[v]);
  }
  int shallower_min = n;
  for (int d = 0; d <= height; ++d) {
    if (max_b[d] > shallower_min) return false;
    shallower_min = std::min(shallower_min, min_b[d]);
  }
  return true;
}

CayleyWitness construct_generated_witness(const RootedTreeAnalysis& a) {
  if (!sufficient_check(a)) throw InputError("the successor counts are not monotone in depth");
  const auto& t = a.tree;
  const int n = t.order();
  const Vertex e = a.root;

  if (n == 1) {
    return CayleyWitness{MulTable(1, {0}, 0), ConnectionSet{0}, {0}};
  }

  std::vector<int> size(n, 1);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return a.depth[x] > a.depth[y]; });
  for (Vertex v : order) {
    for (Vertex w : t.neighbors(v)) {
      if (a.depth[w] == a.depth[v] + 1) size[v] += size[w];
    }
  }
  // step[x][i]: end of the arc of color i from x.
  const int colors = static_cast<int>(t.neighbors(e).size());
  std::vector<std::vector<Vertex>> step(n, std::vector<Vertex>(colors));
  for (Vertex x = 0; x < n; ++x) {
    std::vector<Vertex> kids;
    for (Vertex w : t.neighbors(x)) {
      if (a.depth[w] == a.depth[x] + 1) kids.push_back(w);
    }
    std::sort(kids.begin(), kids.end(), [&](Vertex p, Vertex q) {
      return size[p] != size[q] ? size[p] > size[q] : p < q;
    });
    for (int i = 0; i < colors; ++i) {
      step[x][i] = kids.empty() ? x : kids[std::min<std::size_t>(i, kids.size() - 1)];
    }
  }
  // word[v]: colors along the path from e.
  std::vector<std::vector<int>> word(n);
  std::vector<Vertex> bfs{e};
  std::vector<char> seen(n, 0);
  seen[e] = 1;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const Vertex x = bfs[head];
    for (int i = 0; i < colors; ++i) {
      const Vertex y = step[x][i];
      if (seen[y]) continue;
      seen[y] = 1;
      word[y] = word[x];
      word[y].push_back(i);
      bfs.push_back(y);
    }
  }
  std::vector<Element> products(static_cast<std::size_t>(n) * n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      Vertex x = u;
      for (int i : word[v]) x = step[x][i];
      products[static_cast<std::size_t>(u) * n + v] = x;
    }
  }
  std::vector<Element> connection;
  for (int i = 0; i < colors; ++i) connection.push_back(step[e][i]);
  CayleyWitness w{MulTable(n, std::move(products), e), ConnectionSet(connection), {}};
  w.bijection.resize(n);
  for (Vertex v = 0; v < n; ++v) w.bijection[v] = v;

  if (!validate_table(w.table).ok()) throw std::logic_error("tree witness is not a monoid");
  for (Vertex x = 0; x < n; ++x) {
    for (int i = 0; i < colors; ++i) {
      if (w.table(x, step[e][i]) != step[x][i]) {
        throw std::logic_error("tree witness does not follow the colored tree");
      }
    }
  }
  if (underlying_graph(cayley_digraph(w.table, w.connection)) != t) {
    throw std::logic_error("tree witness does not reproduce the tree");
  }
  if (static_cast<int>(generated_submonoid(w.table, w.connection).size()) != n) {
    throw std::logic_error("tree witness is not generated by its connection set");
  }
  return w;
}

NecessaryResult necessary_check(const RootedTreeAnalysis& a, bool symmetry_free) {
  const int n = a.tree.order();
  const int height = *std::max_element(a.depth.begin(), a.depth.end());
  std::vector<int> max_b(height + 1, 0);
  for (Vertex v = 0; v < n; ++v) max_b[a.depth[v]] = std::max(max_b[a.depth[v]], a.successors[v]);
  for (Vertex x = 0; x < n; ++x) {
    if (x == a.root) continue;
    if (a.successors[x] > max_b[a.depth[x] - 1]) return {false, 1, x, std::nullopt};
  }
  if (!symmetry_free) return {};
  const auto& cs = a.tree.neighbors(a.root);
  for (Vertex x = 0; x < n; ++x) {
    const bool near = x == a.root || a.tree.has_edge(a.root, x);
    const int eps = near ? 0 : 1;
    for (Vertex c : cs) {
      bool found = false;
      for (Vertex y = 0; y < n && !found; ++y) {
        found = a.branch[y] == c && a.depth[y] <= a.depth[x] + 1 &&
                a.successors[y] <= a.successors[x] + eps;
      }
      if (!found) return {false, 2, x, c};
    }
  }
  return {};
}

std::vector<Vertex> neutral_candidates(const SimpleGraph& t) {
  require_tree(t);
  std::vector<Vertex> result;
  const int top = t.max_degree();
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) >= top - 1) result.push_back(v);
  }
  return result;
}

namespace {

// AHU encoding of the subtree hanging at v away from `parent`.
std::string rooted_code(const SimpleGraph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) kids.push_back(rooted_code(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string code = "(";
  for (const auto& k : kids) code += k;
  return code + ")";
}

}  // namespace

bool symmetry_condition(const SimpleGraph& t, Vertex e) {
  require_tree(t);
  for (Vertex c : t.neighbors(e)) {
    if (rooted_code(t, e, c) == rooted_code(t, c, e)) return false;
  }
  return true;
}

TreeVerdict classify_tree(const SimpleGraph& t, const TreeClassifyOptions& options) {
  require_tree(t);
  TreeVerdict verdict;
  const auto candidates = neutral_candidates(t);
  bool all_fail = true;
  for (Vertex e : candidates) {
    const auto a = analyze(t, e);
    CandidateReport report;
    report.e = e;
    report.sufficient = sufficient_check(a);
    report.symmetry_free = symmetry_condition(t, e);
    report.necessary = necessary_check(a, report.symmetry_free);
    if (report.sufficient && !necessary_check(a, false).passed) {
      throw std::logic_error("sufficient condition holds but the necessary one fails");
    }
    if (report.sufficient && !verdict.witness) verdict.witness = construct_generated_witness(a);
    if (report.necessary.passed) all_fail = false;
    verdict.candidates.push_back(report);
  }
  if (verdict.witness) {
    verdict.status = TreeStatus::yes;
  } else if (all_fail) {
    verdict.status = TreeStatus::no;
  } else if (options.escalate) {
    SearchOptions search;
    search.budget = options.budget;
    search.require_generated = true;
    auto outcome = recognize_monoid_graph(t, search);
    verdict.escalated = true;
    if (outcome.status == SearchStatus::witness) {
      verdict.status = TreeStatus::yes;
      verdict.witness = std::move(outcome.witness);
    } else if (outcome.status == SearchStatus::exhausted_no) {
      verdict.status = TreeStatus::no;
    }
  }
  return verdict;
}

}  // namespace mgraph
