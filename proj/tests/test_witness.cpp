#include <sstream>

#include "doctest.h"
#include "graphs.hpp"
#include "mgraph/embed.hpp"
#include "mgraph/error.hpp"
#include "mgraph/families.hpp"
#include "mgraph/recognize.hpp"
#include "mgraph/trees.hpp"
#include "mgraph/witness.hpp"
#include "mgraph/zelinka.hpp"
#include "oracles.hpp"

using namespace mgraph;

namespace {

WitnessRecord round_trip(const WitnessRecord& r) {
  std::stringstream s;
  write_witness(s, r);
  return read_witness(s);
}

std::vector<WitnessRecord> sample_records() {
  std::vector<WitnessRecord> out;
  Digraph f(4);
  for (auto [u, v] : {Arc{0, 1}, Arc{1, 2}, Arc{2, 2}, Arc{3, 2}}) f.add_arc(u, v);
  out.push_back({WitnessMode::monoid_digraph, construct_monoid(f), f, {}});
  Digraph s(7);
  for (int v = 0; v < 7; ++v) s.add_arc(v, std::vector<Vertex>{1, 2, 3, 0, 5, 4, 4}[v]);
  out.push_back({WitnessMode::semigroup_digraph, construct_semigroup(s), s, {}});
  const auto th = gen_threshold({ThresholdStep::dominating, ThresholdStep::isolated});
  out.push_back({WitnessMode::monoid_graph, th.witness, th.graph, {}});
  const auto t = gen_perfect_kary(2, 2);
  out.push_back({WitnessMode::generated_monoid_tree,
                 construct_generated_witness(analyze(t.tree, t.root)), t.tree, {}});
  const auto e = embed_undirected(testgraphs::cycle(5));
  out.push_back({WitnessMode::embedding, e.witness, e.digraph, e.identity_component});
  return out;
}

}  // namespace

TEST_CASE("witness modes parse back") {
  for (auto m : {WitnessMode::monoid_digraph, WitnessMode::monoid_graph,
                 WitnessMode::semigroup_digraph, WitnessMode::generated_monoid_tree,
                 WitnessMode::embedding}) {
    CHECK(parse_witness_mode(to_string(m)) == m);
  }
  CHECK_THROWS_AS(parse_witness_mode("group"), InputError);
}

TEST_CASE("records verify and survive a round trip") {
  for (const auto& r : sample_records()) {
    CAPTURE(to_string(r.mode));
    const auto v = verify(r);
    CHECK(v.all());
    CHECK(v.generated.has_value() == (r.mode == WitnessMode::generated_monoid_tree));
    const auto back = round_trip(r);
    CHECK(back.mode == r.mode);
    CHECK(back.witness.table == r.witness.table);
    CHECK(back.witness.connection == r.witness.connection);
    CHECK(back.witness.bijection == r.witness.bijection);
    CHECK(back.graph == r.graph);
    CHECK(back.component == r.component);
    CHECK(verify(back).all());
  }
}

TEST_CASE("search witnesses verify") {
  const auto out = recognize_monoid_graph(gen_threshold({ThresholdStep::isolated,
                                                         ThresholdStep::dominating})
                                              .graph);
  REQUIRE(out.witness);
  const WitnessRecord r{WitnessMode::monoid_graph, *out.witness,
                        gen_threshold({ThresholdStep::isolated, ThresholdStep::dominating}).graph,
                        {}};
  CHECK(verify(r).all());
}

TEST_CASE("tampering is detected") {
  const auto records = sample_records();
  SUBCASE("broken associativity") {
    auto r = records[3];
    const int n = r.witness.table.order();
    int tried = 0;
    for (int cell = 0; cell < n * n && tried < 20; ++cell) {
      auto p = r.witness.table.products();
      p[cell] = (p[cell] + 1) % n;
      const MulTable t(n, p, r.witness.table.identity());
      if (oracle::associative(t)) continue;
      ++tried;
      auto bad = r;
      bad.witness.table = t;
      REQUIRE_FALSE(verify(bad).table_valid);
    }
    CHECK(tried == 20);
  }
  SUBCASE("wrong graph") {
    auto r = records[0];
    auto g = std::get<Digraph>(r.graph);
    Digraph h(g.order());
    for (auto [u, v] : g.arcs()) h.add_arc(u, v == 2 ? 3 : v);
    r.graph = h;
    const auto v = verify(r);
    CHECK(v.table_valid);
    CHECK_FALSE(v.graph_equal);
  }
  SUBCASE("missing identity") {
    auto r = records[2];
    r.witness.table = MulTable(r.witness.table.order(), r.witness.table.products());
    CHECK_FALSE(verify(r).identity_law);
  }
  SUBCASE("non-generating connection set") {
    auto r = records[3];
    r.witness.connection = ConnectionSet({*r.witness.table.identity()});
    const auto v = verify(r);
    CHECK_FALSE(v.all());
  }
  SUBCASE("wrong component") {
    auto r = records[4];
    r.component.pop_back();
    CHECK_FALSE(verify(r).graph_equal);
  }
}

TEST_CASE("read_witness reports absolute lines") {
  std::stringstream s;
  write_witness(s, sample_records()[2]);
  std::string text = s.str();
  // Corrupt the second table row (line 4 of the record).
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  lines[3] = "1 1 9 3";
  std::string joined;
  for (const auto& l : lines) joined += l + "\n";
  std::istringstream bad(joined);
  try {
    read_witness(bad);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(e.line() == 4);
  }
  std::istringstream truncated("mode monoid-graph\n[table]\n1 0\n0\n");
  CHECK_THROWS_AS(read_witness(truncated), InputError);
  std::istringstream nomode("[table]\n1 0\n0\n[end]\n");
  CHECK_THROWS_AS(read_witness(nomode), InputError);
}
