#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mgraph/algebra.hpp"
#include "mgraph/graph.hpp"

namespace mgraph {

enum class WitnessMode {
  monoid_digraph,
  monoid_graph,
  semigroup_digraph,
  generated_monoid_tree,
  embedding,
};

const char* to_string(WitnessMode m);
WitnessMode parse_witness_mode(const std::string& s);

struct Verification {
  bool table_valid = false;   // associative
  bool identity_law = false;  // identity present and two-sided where the mode needs one
  bool graph_equal = false;   // the Cayley construction reproduces the graph
  std::optional<bool> generated;  // generated monoid trees only

  bool all() const { return table_valid && identity_law && graph_equal && generated.value_or(true); }
};

// Self-contained certificate. For embeddings `component` lists the
// elements of the identity's component, which are dropped before comparing.
struct WitnessRecord {
  WitnessMode mode = WitnessMode::monoid_digraph;
  CayleyWitness witness;
  AnyGraph graph;
  std::vector<Element> component;
};

// Recomputes every check from the table, connection set, bijection and graph.
Verification verify(const WitnessRecord& r);

// Line-oriented sections: `mode`, [table], [connection], [bijection], [graph],
// optional [components], [verification], [end]. The verification section is
// computed on write.
void write_witness(std::ostream& out, const WitnessRecord& r);

// Parses a record; the stored verification section is ignored. Throws
// InputError with the line number of the offending line.
WitnessRecord read_witness(std::istream& in);

}  // namespace mgraph
