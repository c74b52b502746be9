#include "mgraph/recognize.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "mgraph/error.hpp"
#include "table_search.hpp"

namespace mgraph {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::witness:
      return "Witness";
    case SearchStatus::exhausted_no:
      return "ExhaustedNo";
    case SearchStatus::budget_exceeded:
      return "BudgetExceeded";
  }
  return "?";
}

namespace {

constexpr int kMaxSearchOrder = 16;

std::vector<Element> identity_bijection(int n) {
  std::vector<Element> b(n);
  for (int i = 0; i < n; ++i) b[i] = i;
  return b;
}

// Runs the problems in order on a pool of workers; the first witness wins.
// In single-worker mode the witness is the one of the earliest problem.
SearchOutcome run_problems(const std::vector<detail::TableProblem>& problems,
                           const Budget& budget,
                           const std::function<bool(const CayleyWitness&)>& verify) {
  SharedBudget shared(budget);
  std::mutex mutex;
  std::optional<std::pair<std::size_t, CayleyWitness>> found;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> aborted{false};

  auto worker = [&]() {
    while (!shared.stopped()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= problems.size()) return;
      const auto& p = problems[i];
      auto result = detail::solve_table(p, shared);
      if (result.status == detail::EngineStatus::aborted) {
        if (shared.exhausted()) aborted.store(true);
        return;
      }
      if (result.status == detail::EngineStatus::found) {
        CayleyWitness w{MulTable(p.n, std::move(result.products), p.identity),
                        ConnectionSet(p.connection), identity_bijection(p.n)};
        if (!verify(w)) throw std::logic_error("table search produced an invalid witness");
        std::lock_guard lock(mutex);
        if (!found || found->first > i) found.emplace(i, std::move(w));
        shared.request_stop();
        return;
      }
    }
  };

  const int workers = std::max(1, std::min<int>(budget.workers, static_cast<int>(problems.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int i = 0; i < workers; ++i) {
      pool.emplace_back([&]() {
        try {
          worker();
        } catch (...) {
          std::lock_guard lock(error_mutex);
          error = std::current_exception();
          shared.request_stop();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  SearchOutcome outcome;
  outcome.nodes = shared.nodes();
  if (found) {
    outcome.status = SearchStatus::witness;
    outcome.witness = std::move(found->second);
  } else if (aborted.load()) {
    outcome.status = SearchStatus::budget_exceeded;
  } else {
    outcome.status = SearchStatus::exhausted_no;
  }
  return outcome;
}

bool directed_witness_ok(const CayleyWitness& w, const Digraph& g) {
  return validate_table(w.table).ok() && cayley_digraph(w.table, w.connection) == g;
}

bool undirected_witness_ok(const CayleyWitness& w, const SimpleGraph& g) {
  return validate_table(w.table).ok() &&
         underlying_graph(cayley_digraph(w.table, w.connection)) == g;
}

void check_order(int n) {
  if (n < 1) throw InputError("graph has no vertices");
  if (n > kMaxSearchOrder) {
    throw InputError("table search is capped at order " + std::to_string(kMaxSearchOrder));
  }
}

std::vector<Vertex> orbit_representatives(const std::vector<Vertex>& candidates,
                                          const std::vector<Vertex>& orbit) {
  std::vector<Vertex> result;
  std::vector<char> seen(orbit.size(), 0);
  for (Vertex v : candidates) {
    if (!seen[orbit[v]]) {
      seen[orbit[v]] = 1;
      result.push_back(v);
    }
  }
  return result;
}

}  // namespace

std::vector<Transformation> endomorphisms(const Digraph& g, std::uint64_t max_nodes) {
  const int n = g.order();
  std::vector<Transformation> result;
  Transformation phi(n, -1);
  std::uint64_t nodes = 0;
  std::function<void(int)> extend = [&](int v) {
    if (v == n) {
      result.push_back(phi);
      return;
    }
    for (Vertex image = 0; image < n; ++image) {
      if (++nodes > max_nodes) throw BudgetError("endomorphism enumeration exceeded its budget");
      phi[v] = image;
      bool ok = true;
      for (Vertex w : g.out(v)) {
        if (w <= v && !g.has_arc(image, phi[w])) ok = false;
      }
      for (Vertex w : g.in(v)) {
        if (w < v && !g.has_arc(phi[w], image)) ok = false;
      }
      if (ok) extend(v + 1);
    }
    phi[v] = -1;
  };
  extend(0);
  return result;
}

SearchOutcome sabidussi_check(const Digraph& g, const SearchOptions& options) {
  const int n = g.order();
  check_order(n);
  const auto ends = endomorphisms(g);
  SharedBudget budget(options.budget);
  SearchOutcome outcome;

  for (Vertex e = 0; e < n; ++e) {
    const auto& ne = g.out(e);
    if (ne.empty()) continue;
    // Candidate maps per x: phi(e) = x and phi(N+(e)) = N+(x).
    std::vector<std::vector<int>> cand(n);
    for (int i = 0; i < static_cast<int>(ends.size()); ++i) {
      const auto& phi = ends[i];
      const Vertex x = phi[e];
      std::vector<Vertex> image;
      for (Vertex c : ne) image.push_back(phi[c]);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (image != g.out(x)) continue;
      if (x == e) {
        bool identity = true;
        for (Vertex v = 0; v < n; ++v) identity = identity && phi[v] == v;
        if (!identity) continue;
      }
      cand[x].push_back(i);
    }
    std::vector<int> chosen(n, -1);
    bool aborted = false;
    // phi_x o phi_y must be phi_{phi_x(y)} whenever all three are chosen.
    auto consistent = [&](Vertex x) {
      for (Vertex y = 0; y < n; ++y) {
        if (chosen[y] < 0) continue;
        for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
          const auto& pa = ends[chosen[a]];
          const auto& pb = ends[chosen[b]];
          const Vertex z = pa[b];
          if (chosen[z] < 0) continue;
          const auto& pz = ends[chosen[z]];
          for (Vertex v = 0; v < n; ++v) {
            if (pa[pb[v]] != pz[v]) return false;
          }
        }
      }
      // Triples where x is the composite.
      for (Vertex a = 0; a < n; ++a) {
        if (chosen[a] < 0) continue;
        for (Vertex b = 0; b < n; ++b) {
          if (chosen[b] < 0 || ends[chosen[a]][b] != x) continue;
          for (Vertex v = 0; v < n; ++v) {
            if (ends[chosen[a]][ends[chosen[b]][v]] != ends[chosen[x]][v]) return false;
          }
        }
      }
      return true;
    };
    std::function<bool(Vertex)> pick = [&](Vertex x) -> bool {
      if (x == n) return true;
      for (int i : cand[x]) {
        if (!budget.tick()) {
          aborted = true;
          return false;
        }
        chosen[x] = i;
        if (consistent(x) && pick(x + 1)) return true;
        chosen[x] = -1;
        if (aborted) return false;
      }
      return false;
    };
    if (pick(0)) {
      std::vector<Element> products(static_cast<std::size_t>(n) * n);
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = 0; y < n; ++y) products[x * n + y] = ends[chosen[x]][y];
      }
      CayleyWitness w{MulTable(n, std::move(products), e), ConnectionSet(ne),
                      identity_bijection(n)};
      if (!directed_witness_ok(w, g)) {
        throw std::logic_error("endomorphism selection produced an invalid witness");
      }
      outcome.status = SearchStatus::witness;
      outcome.witness = std::move(w);
      outcome.nodes = budget.nodes();
      return outcome;
    }
    if (aborted) {
      outcome.status = SearchStatus::budget_exceeded;
      outcome.nodes = budget.nodes();
      return outcome;
    }
  }
  outcome.status = SearchStatus::exhausted_no;
  outcome.nodes = budget.nodes();
  return outcome;
}

SearchOutcome recognize_monoid_digraph(const Digraph& g, const SearchOptions& options) {
  const int n = g.order();
  check_order(n);
  const auto& prune = options.prune;
  std::vector<Vertex> candidates;
  for (Vertex e = 0; e < n; ++e) {
    if (g.out_degree(e) == 0) continue;
    if (prune.neutral_degree && g.out_degree(e) != g.max_out_degree()) continue;
    if (options.connection_size && g.out_degree(e) != *options.connection_size) continue;
    candidates.push_back(e);
  }
  if (prune.orbit_candidates) {
    candidates = orbit_representatives(candidates, automorphism_orbits(g, kMaxSearchOrder));
  }
  const bool strong = is_strongly_connected(g);
  std::vector<detail::TableProblem> problems;
  for (Vertex e : candidates) {
    detail::TableProblem p;
    p.n = n;
    p.identity = e;
    p.connection = g.out(e);
    p.directed = &g;
    p.endomorphism_rows = prune.endomorphism_rows;
    p.walk_domains = prune.walk_domains;
    p.left_cancellative = prune.left_cancellative && strong;
    p.require_generated = options.require_generated;
    problems.push_back(std::move(p));
  }
  return run_problems(problems, options.budget,
                      [&](const CayleyWitness& w) { return directed_witness_ok(w, g); });
}

SearchOutcome recognize_semigroup_digraph(const Digraph& g, const SearchOptions& options) {
  const int n = g.order();
  check_order(n);
  if (g.min_out_degree() == 0) {
    // Every element has |C| >= 1 out-arcs in a Cayley digraph.
    return SearchOutcome{SearchStatus::exhausted_no, std::nullopt, 0};
  }
  const auto& prune = options.prune;
  const bool functional = g.max_out_degree() == 1;
  std::vector<std::vector<Element>> sets;
  const std::uint32_t limit = 1u << n;
  for (int size = g.max_out_degree(); size <= n; ++size) {
    if (functional && size > 1) break;
    if (options.connection_size && size != *options.connection_size) continue;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
      if (std::popcount(mask) != size) continue;
      std::vector<Element> c;
      for (Element x = 0; x < n; ++x) {
        if ((mask >> x) & 1u) c.push_back(x);
      }
      sets.push_back(std::move(c));
    }
  }
  if (prune.orbit_candidates) {
    std::vector<std::vector<Element>> reps;
    std::vector<std::string> keys;
    for (auto& c : sets) {
      std::vector<int> colors(n, 0);
      for (Element x : c) colors[x] = 1;
      auto key = canonical_form(g, colors, kMaxSearchOrder);
      if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
      keys.push_back(std::move(key));
      reps.push_back(std::move(c));
    }
    sets = std::move(reps);
  }
  const bool strong = is_strongly_connected(g);
  std::vector<detail::TableProblem> problems;
  for (auto& c : sets) {
    detail::TableProblem p;
    p.n = n;
    p.connection = std::move(c);
    p.directed = &g;
    p.endomorphism_rows = prune.endomorphism_rows;
    p.walk_domains = prune.walk_domains;
    p.left_cancellative = prune.left_cancellative && strong;
    p.require_generated = options.require_generated;
    problems.push_back(std::move(p));
  }
  return run_problems(problems, options.budget,
                      [&](const CayleyWitness& w) { return directed_witness_ok(w, g); });
}

SearchOutcome recognize_monoid_graph(const SimpleGraph& g, const SearchOptions& options) {
  const int n = g.order();
  check_order(n);
  const auto& prune = options.prune;
  std::vector<Vertex> candidates(n);
  for (Vertex v = 0; v < n; ++v) candidates[v] = v;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  if (prune.orbit_candidates) {
    candidates = orbit_representatives(candidates, automorphism_orbits(g, kMaxSearchOrder));
  }
  std::vector<detail::TableProblem> problems;
  for (Vertex e : candidates) {
    std::vector<Element> c = g.neighbors(e);
    if (c.empty()) c.push_back(e);
    if (options.connection_size && static_cast<int>(c.size()) != *options.connection_size) {
      continue;
    }
    detail::TableProblem p;
    p.n = n;
    p.identity = e;
    p.connection = std::move(c);
    p.undirected = &g;
    p.endomorphism_rows = prune.endomorphism_rows;
    p.walk_domains = false;
    p.require_generated = options.require_generated;
    problems.push_back(std::move(p));
  }
  return run_problems(problems, options.budget,
                      [&](const CayleyWitness& w) { return undirected_witness_ok(w, g); });
}

CensusReport classify_all(int n, CensusMode mode, GraphClass cls, const SearchOptions& options) {
  CensusReport report;
  auto record = [&](std::string key, const SearchOutcome& o) {
    report.entries.push_back({to_hex(key), o.status, o.nodes});
    switch (o.status) {
      case SearchStatus::witness:
        ++report.witnesses;
        break;
      case SearchStatus::exhausted_no:
        ++report.negatives;
        break;
      case SearchStatus::budget_exceeded:
        ++report.undecided;
        break;
    }
  };
  if (mode == CensusMode::monoid_graph) {
    for (const auto& g : enumerate_graphs(n, cls)) {
      record(canonical_form(g, {}, kMaxSearchOrder), recognize_monoid_graph(g, options));
    }
  } else {
    for (const auto& g : enumerate_digraphs(n, cls)) {
      const auto outcome = mode == CensusMode::monoid_digraph
                               ? recognize_monoid_digraph(g, options)
                               : recognize_semigroup_digraph(g, options);
      record(canonical_form(g, {}, kMaxSearchOrder), outcome);
    }
  }
  return report;
}

}  // namespace mgraph
