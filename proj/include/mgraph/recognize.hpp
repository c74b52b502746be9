#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgraph/algebra.hpp"
#include "mgraph/digraph.hpp"
#include "mgraph/graph.hpp"
#include "mgraph/search.hpp"

namespace mgraph {

// Sound pruning rules of the table search. Each can be switched off to
// check that it never removes a solution.
struct PruneOptions {
  bool endomorphism_rows = true;  // left multiplications are graph endomorphisms
  bool walk_domains = true;       // x*y lies at walk distance |word(y)| from x
  bool left_cancellative = true;  // strongly connected => rows injective
  bool neutral_degree = true;     // identity of a monoid digraph has max out-degree
  bool orbit_candidates = true;   // one candidate per automorphism orbit
};

struct SearchOptions {
  Budget budget;
  PruneOptions prune;
  std::optional<int> connection_size;  // only connection sets of this size
  bool require_generated = false;      // the connection set generates the monoid
};

// All endomorphisms (arc-preserving self-maps) in lexicographic order.
// Throws BudgetError after `max_nodes` partial maps.
std::vector<Transformation> endomorphisms(const Digraph& g,
                                          std::uint64_t max_nodes = 10'000'000);

// Looks for e and endomorphisms phi_x with phi_x(e) = x, phi_e = id, closed
// under composition, with phi_x(N+(e)) = N+(x). The witness table is
// x*y = phi_x(y) with C = N+(e).
SearchOutcome sabidussi_check(const Digraph& g, const SearchOptions& options = {});

// Table search with identity e and C = N+(e) for every candidate e.
SearchOutcome recognize_monoid_digraph(const Digraph& g, const SearchOptions& options = {});

// Identity-free table search over connection sets C with |C| at least the
// maximum out-degree. Only singletons are tried for 1-outregular inputs.
SearchOutcome recognize_semigroup_digraph(const Digraph& g, const SearchOptions& options = {});

// Table search with identity e and C = N(e) (C = {e} when e is isolated);
// the underlying graph of Cay(M, C) must equal g.
SearchOutcome recognize_monoid_graph(const SimpleGraph& g, const SearchOptions& options = {});

enum class CensusMode { monoid_digraph, semigroup_digraph, monoid_graph };

struct CensusEntry {
  std::string canonical;  // hex
  SearchStatus status = SearchStatus::exhausted_no;
  std::uint64_t nodes = 0;
};

struct CensusReport {
  std::vector<CensusEntry> entries;
  int witnesses = 0;
  int negatives = 0;
  int undecided = 0;
};

// One search per isomorphism class of order n in the given class; each
// instance gets its own copy of the budget.
CensusReport classify_all(int n, CensusMode mode, GraphClass cls,
                          const SearchOptions& options = {});

}  // namespace mgraph
