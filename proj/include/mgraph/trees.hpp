#pragma once

#include <optional>
#include <vector>

#include "mgraph/algebra.hpp"
#include "mgraph/graph.hpp"
#include "mgraph/search.hpp"

namespace mgraph {

struct RootedTreeAnalysis {
  SimpleGraph tree;
  Vertex root = 0;
  std::vector<int> depth;        // d(e, v)
  std::vector<int> successors;   // b_e(v): neighbors one level deeper
  std::vector<Vertex> branch;    // neighbor of e whose branch holds v; -1 at e
};

// Throws InputError unless t is a tree and e a vertex of it.
RootedTreeAnalysis analyze(const SimpleGraph& t, Vertex e);

// b_e(x) <= b_e(y) whenever d(e,x) > d(e,y).
bool sufficient_check(const RootedTreeAnalysis& a);

// Monoid on the vertices with identity e and C = N(e) whose underlying
// Cayley graph is the tree and whose connection set generates it. Children
// are labeled by decreasing subtree size, then id. Throws InputError if the
// sufficient condition fails.
CayleyWitness construct_generated_witness(const RootedTreeAnalysis& a);

struct NecessaryResult {
  bool passed = true;
  int part = 0;                  // failing part (1 or 2) when !passed
  Vertex x = -1;                 // failing vertex
  std::optional<Vertex> c;       // failing neighbor of e, for part 2
};

// Part 1: every x != e has y one level up with b(x) <= b(y). Part 2, only
// when `symmetry_free`: for every x and every neighbor c of e some y in the
// branch of c has d(e,y) <= d(e,x) + 1 and b(y) <= b(x) + eps, where eps is 0
// for x in N(e) + e and 1 otherwise.
NecessaryResult necessary_check(const RootedTreeAnalysis& a, bool symmetry_free);

// Vertices with degree Delta - 1 or Delta (every vertex of K1).
std::vector<Vertex> neutral_candidates(const SimpleGraph& t);

// True when no automorphism of t swaps e with one of its neighbors, so that
// no nontrivial left multiplication can be an automorphism and part 2 of
// the necessary condition applies.
bool symmetry_condition(const SimpleGraph& t, Vertex e);

enum class TreeStatus { yes, no, undecided };

const char* to_string(TreeStatus s);

struct CandidateReport {
  Vertex e = 0;
  bool sufficient = false;
  bool symmetry_free = false;
  NecessaryResult necessary;
};

struct TreeVerdict {
  TreeStatus status = TreeStatus::undecided;
  std::optional<CayleyWitness> witness;  // for yes
  std::vector<CandidateReport> candidates;
  bool escalated = false;                // decided by the generated table search
};

struct TreeClassifyOptions {
  bool escalate = false;  // run the generated monoid graph search when undecided
  Budget budget;
};

TreeVerdict classify_tree(const SimpleGraph& t, const TreeClassifyOptions& options = {});

}  // namespace mgraph
