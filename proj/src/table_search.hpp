#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mgraph/algebra.hpp"
#include "mgraph/graph.hpp"
#include "mgraph/search.hpp"

namespace mgraph::detail {

// One table completion problem: fill an n x n table (elements are the graph's
// vertices) so that it is associative, optionally unital at `identity`, and
// its Cayley graph with `connection` is the target graph.
struct TableProblem {
  int n = 0;
  std::optional<Element> identity;
  std::vector<Element> connection;
  const Digraph* directed = nullptr;        // exact arc set
  const SimpleGraph* undirected = nullptr;  // underlying graph

  bool endomorphism_rows = true;  // left multiplications preserve the graph
  bool walk_domains = true;       // x * (c1...ck) ends a length-k walk from x
  bool left_cancellative = false; // rows are injective
  bool require_generated = false; // connection generates the whole table
};

enum class EngineStatus { found, exhausted, aborted };

struct EngineResult {
  EngineStatus status = EngineStatus::exhausted;
  std::vector<Element> products;  // row-major, when found
};

EngineResult solve_table(const TableProblem& problem, SharedBudget& budget);

}  // namespace mgraph::detail
