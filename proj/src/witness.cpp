#include "mgraph/witness.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "mgraph/digraph.hpp"
#include "mgraph/error.hpp"

namespace mgraph {

namespace {

constexpr std::pair<WitnessMode, const char*> kModeNames[] = {
    {WitnessMode::monoid_digraph, "monoid-digraph"},
    {WitnessMode::monoid_graph, "monoid-graph"},
    {WitnessMode::semigroup_digraph, "semigroup-digraph"},
    {WitnessMode::generated_monoid_tree, "generated-monoid-tree"},
    {WitnessMode::embedding, "embedding"},
};

bool needs_identity(WitnessMode m) { return m != WitnessMode::semigroup_digraph; }

bool table_associative(const WitnessRecord& r) {
  const auto& t = r.witness.table;
  if (r.mode != WitnessMode::embedding || t.order() <= 200) {
    const auto report = validate_table(t);
    return !report.violation || report.violation->kind != TableViolation::Kind::associativity;
  }
  // Large embedding monoids: the vertices, the connection set and the
  // identity generate the table.
  std::vector<Element> generators = r.witness.bijection;
  generators.insert(generators.end(), r.witness.connection.begin(), r.witness.connection.end());
  if (t.identity()) generators.push_back(*t.identity());
  try {
    const auto report = validate_table_generated(t, generators);
    return !report.violation || report.violation->kind != TableViolation::Kind::associativity;
  } catch (const InputError&) {
    return false;
  }
}

bool identity_ok(const WitnessRecord& r) {
  const auto& t = r.witness.table;
  if (!t.identity()) return !needs_identity(r.mode);
  const Element e = *t.identity();
  for (Element x = 0; x < t.order(); ++x) {
    if (t(e, x) != x || t(x, e) != x) return false;
  }
  return true;
}

// Cayley digraph without the associativity scan.
Digraph cayley_arcs(const MulTable& t, const ConnectionSet& c) {
  Digraph g(t.order());
  for (Element s = 0; s < t.order(); ++s) {
    for (Element x : c) g.add_arc(s, t(s, x));
  }
  return g;
}

bool graph_ok(const WitnessRecord& r) {
  const auto& w = r.witness;
  const int m = w.table.order();
  if (w.connection.size() == 0 || w.connection.elements().back() >= m ||
      w.connection.elements().front() < 0) {
    return false;
  }
  const int n = std::visit([](const auto& g) { return g.order(); }, r.graph);
  if (static_cast<int>(w.bijection.size()) != n) return false;
  std::vector<char> used(m, 0);
  for (Element b : w.bijection) {
    if (b < 0 || b >= m || used[b]) return false;
    used[b] = 1;
  }
  const Digraph cay = cayley_arcs(w.table, w.connection);
  if (r.mode == WitnessMode::embedding) {
    const auto comps = weak_components(cay);
    if (!w.table.identity()) return false;
    std::vector<Element> part;
    for (Element x = 0; x < m; ++x) {
      if (comps.component[x] == comps.component[*w.table.identity()]) part.push_back(x);
    }
    if (part != r.component) return false;
    // Every element outside the identity component must be a vertex.
    for (Element x = 0; x < m; ++x) {
      if (!used[x] && comps.component[x] != comps.component[*w.table.identity()]) return false;
      if (used[x] && comps.component[x] == comps.component[*w.table.identity()]) return false;
    }
  } else if (n != m) {
    return false;
  }
  // Pull the Cayley digraph back along the bijection.
  Digraph pulled(n);
  std::vector<int> vertex_of(m, -1);
  for (int v = 0; v < n; ++v) vertex_of[w.bijection[v]] = v;
  for (auto [a, b] : cay.arcs()) {
    if (vertex_of[a] >= 0 && vertex_of[b] >= 0) pulled.add_arc(vertex_of[a], vertex_of[b]);
  }
  if (const auto* d = std::get_if<Digraph>(&r.graph)) return pulled == *d;
  return underlying_graph(pulled) == std::get<SimpleGraph>(r.graph);
}

bool generated_ok(const WitnessRecord& r) {
  return static_cast<int>(generated_submonoid(r.witness.table, r.witness.connection).size()) ==
         r.witness.table.order();
}

void write_list(std::ostream& out, const std::vector<Element>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  out << '\n';
}

}  // namespace

const char* to_string(WitnessMode m) {
  for (auto [mode, name] : kModeNames) {
    if (mode == m) return name;
  }
  return "?";
}

WitnessMode parse_witness_mode(const std::string& s) {
  for (auto [mode, name] : kModeNames) {
    if (s == name) return mode;
  }
  throw InputError("unknown witness mode `" + s + "`");
}

Verification verify(const WitnessRecord& r) {
  Verification v;
  v.table_valid = table_associative(r);
  v.identity_law = identity_ok(r);
  v.graph_equal = v.table_valid && graph_ok(r);
  if (r.mode == WitnessMode::generated_monoid_tree) v.generated = generated_ok(r);
  return v;
}

void write_witness(std::ostream& out, const WitnessRecord& r) {
  out << "mode " << to_string(r.mode) << '\n';
  out << "[table]\n";
  write_table(out, r.witness.table);
  out << "[connection]\n";
  write_list(out, r.witness.connection.elements());
  out << "[bijection]\n";
  write_list(out, r.witness.bijection);
  out << "[graph]\n";
  write_graph(out, r.graph);
  if (r.mode == WitnessMode::embedding) {
    out << "[components]\n";
    write_list(out, r.component);
  }
  const auto v = verify(r);
  auto flag = [](bool b) { return b ? "true" : "false"; };
  out << "[verification]\n";
  out << "table_valid " << flag(v.table_valid) << '\n';
  out << "identity_law " << flag(v.identity_law) << '\n';
  out << "graph_equal " << flag(v.graph_equal) << '\n';
  if (v.generated) out << "generated " << flag(*v.generated) << '\n';
  out << "[end]\n";
}

WitnessRecord read_witness(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::string mode_text;
  int mode_line = 0;
  std::map<std::string, std::pair<int, std::string>> sections;  // start line, body
  std::string current;
  bool ended = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') {
      if (!current.empty()) sections[current].second += '\n';
      continue;
    }
    if (line.rfind("mode ", 0) == 0 && current.empty() && mode_text.empty()) {
      mode_text = line.substr(5);
      mode_line = line_no;
      continue;
    }
    if (line.front() == '[' && line.back() == ']') {
      current = line.substr(1, line.size() - 2);
      if (current == "end") {
        ended = true;
        break;
      }
      if (sections.count(current)) throw InputError("duplicate section [" + current + "]", line_no);
      sections[current] = {line_no, ""};
      continue;
    }
    if (current.empty()) throw InputError("content outside of a section", line_no);
    sections[current].second += line + '\n';
  }
  if (mode_text.empty()) throw InputError("missing `mode` line");
  if (!ended) throw InputError("missing [end] marker", line_no);

  WitnessRecord r;
  try {
    r.mode = parse_witness_mode(mode_text);
  } catch (const InputError& e) {
    throw InputError(e.what(), mode_line);
  }
  auto body = [&](const std::string& name) -> const std::pair<int, std::string>& {
    auto it = sections.find(name);
    if (it == sections.end()) throw InputError("missing section [" + name + "]");
    return it->second;
  };
  // Re-raise errors from the section parsers with absolute line numbers.
  auto parse = [&](const std::string& name, auto&& fn) {
    const auto& [start, text] = body(name);
    std::istringstream stream(text);
    try {
      return fn(stream);
    } catch (const InputError& e) {
      if (e.line() == 0) throw InputError(std::string(e.what()) + " in [" + name + "]", start);
      std::string msg = e.what();
      msg = msg.substr(msg.find(": ") + 2);
      throw InputError(msg, start + e.line());
    }
  };
  auto parse_list = [](std::istream& s) {
    std::vector<Element> xs;
    long long x = 0;
    std::string token;
    int local = 0;
    std::string l;
    while (std::getline(s, l)) {
      ++local;
      std::istringstream ls(l);
      while (ls >> token) {
        try {
          std::size_t used = 0;
          x = std::stoll(token, &used);
          if (used != token.size() || x < 0) throw std::out_of_range("element");
        } catch (const std::logic_error&) {
          throw InputError("expected a non-negative index, got `" + token + "`", local);
        }
        xs.push_back(static_cast<Element>(x));
      }
    }
    return xs;
  };
  r.witness.table = parse("table", [](std::istream& s) { return read_table(s); });
  auto connection = parse("connection", parse_list);
  if (connection.empty()) throw InputError("empty connection set", body("connection").first);
  r.witness.connection = ConnectionSet(std::move(connection));
  r.witness.bijection = parse("bijection", parse_list);
  r.graph = parse("graph", [](std::istream& s) { return read_graph(s); });
  if (r.mode == WitnessMode::embedding) r.component = parse("components", parse_list);
  return r;
}

}  // namespace mgraph
