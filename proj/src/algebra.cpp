#include "mgraph/algebra.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "mgraph/error.hpp"

namespace mgraph {

MulTable::MulTable(int order, std::vector<Element> products,
                   std::optional<Element> identity)
    : order_(order), products_(std::move(products)), identity_(identity) {
  if (order <= 0) throw InputError("table order must be positive");
  if (products_.size() != static_cast<std::size_t>(order) * order) {
    throw InputError("table has " + std::to_string(products_.size()) +
                     " cells, expected " + std::to_string(order * order));
  }
  for (Element x : products_) {
    if (x < 0 || x >= order) throw InputError("table entry out of range");
  }
  if (identity_ && (*identity_ < 0 || *identity_ >= order)) {
    throw InputError("identity index out of range");
  }
}

ConnectionSet::ConnectionSet(std::vector<Element> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty()) throw InputError("connection set must be non-empty");
  if (elements_.front() < 0) throw InputError("negative connection element");
}

bool ConnectionSet::contains(Element x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

TableReport validate_table(const MulTable& t) {
  const int n = t.order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = t(a, b);
      for (Element c = 0; c < n; ++c) {
        if (t(ab, c) != t(a, t(b, c))) {
          return {TableViolation{TableViolation::Kind::associativity, a, b, c}};
        }
      }
    }
  }
  if (auto e = t.identity()) {
    for (Element x = 0; x < n; ++x) {
      if (t(*e, x) != x || t(x, *e) != x) {
        return {TableViolation{TableViolation::Kind::identity, *e, x, 0}};
      }
    }
  }
  return {};
}

TableReport validate_table_generated(const MulTable& t,
                                     std::span<const Element> generators) {
  const int n = t.order();
  std::vector<char> reached(n, 0);
  std::vector<Element> queue;
  for (Element g : generators) {
    if (g < 0 || g >= n) throw InputError("generator out of range");
    if (!reached[g]) {
      reached[g] = 1;
      queue.push_back(g);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Element g : generators) {
      const Element x = t(queue[head], g);
      if (!reached[x]) {
        reached[x] = 1;
        queue.push_back(x);
      }
    }
  }
  if (static_cast<int>(queue.size()) != n) {
    throw InputError("generators do not generate the table");
  }
  for (Element b : generators) {
    for (Element a = 0; a < n; ++a) {
      const Element ab = t(a, b);
      for (Element c = 0; c < n; ++c) {
        if (t(ab, c) != t(a, t(b, c))) {
          return {TableViolation{TableViolation::Kind::associativity, a, b, c}};
        }
      }
    }
  }
  if (auto e = t.identity()) {
    for (Element x = 0; x < n; ++x) {
      if (t(*e, x) != x || t(x, *e) != x) {
        return {TableViolation{TableViolation::Kind::identity, *e, x, 0}};
      }
    }
  }
  return {};
}

namespace {

void require_valid(const MulTable& t, const ConnectionSet& c) {
  if (auto report = validate_table(t); !report.ok()) {
    const auto& v = *report.violation;
    throw InputError(
        v.kind == TableViolation::Kind::associativity
            ? "table is not associative at (" + std::to_string(v.a) + "," +
                  std::to_string(v.b) + "," + std::to_string(v.c) + ")"
            : "identity law fails at element " + std::to_string(v.b));
  }
  if (c.elements().back() >= t.order()) {
    throw InputError("connection element out of range");
  }
}

}  // namespace

Digraph cayley_digraph(const MulTable& t, const ConnectionSet& c) {
  require_valid(t, c);
  Digraph g(t.order());
  for (Element s = 0; s < t.order(); ++s) {
    for (Element x : c) g.add_arc(s, t(s, x));
  }
  return g;
}

ColoredMultiDigraph cayley_colored(const MulTable& t, const ConnectionSet& c) {
  require_valid(t, c);
  ColoredMultiDigraph g(t.order());
  for (Element s = 0; s < t.order(); ++s) {
    for (Element x : c) g.add_arc(s, t(s, x), x);
  }
  return g;
}

std::vector<Transformation> left_mul_maps(const MulTable& t) {
  std::vector<Transformation> maps;
  maps.reserve(t.order());
  for (Element s = 0; s < t.order(); ++s) {
    auto row = t.row(s);
    maps.emplace_back(row.begin(), row.end());
  }
  return maps;
}

bool is_left_cancellative(const MulTable& t) {
  std::vector<char> seen(t.order());
  for (Element s = 0; s < t.order(); ++s) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element x : t.row(s)) {
      if (seen[x]) return false;
      seen[x] = 1;
    }
  }
  return true;
}

MulTable adjoin_identity(const MulTable& t) {
  const int n = t.order();
  const int m = n + 1;
  std::vector<Element> cells(static_cast<std::size_t>(m) * m);
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) {
      Element value;
      if (a == n) {
        value = b;
      } else if (b == n) {
        value = a;
      } else {
        value = t(a, b);
      }
      cells[a * m + b] = value;
    }
  }
  return MulTable(m, std::move(cells), n);
}

std::vector<Element> generated_submonoid(const MulTable& t, const ConnectionSet& c) {
  std::vector<char> in(t.order());
  std::vector<Element> queue;
  auto push = [&](Element x) {
    if (!in[x]) {
      in[x] = 1;
      queue.push_back(x);
    }
  };
  if (auto e = t.identity()) push(*e);
  for (Element x : c) push(x);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    for (Element g : c) push(t(x, g));
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

// ---------------------------------------------------------------------------

MulTable read_table(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next()) throw InputError("empty table input");
  std::istringstream header(line);
  long long n = 0;
  std::string id;
  if (!(header >> n >> id) || n <= 0 || n > 8192) {
    throw InputError("expected header `n identity|-`", line_no);
  }
  std::optional<Element> identity;
  if (id != "-") {
    try {
      std::size_t used = 0;
      const long long e = std::stoll(id, &used);
      if (used != id.size() || e < 0 || e >= n) throw std::out_of_range("identity");
      identity = static_cast<Element>(e);
    } catch (const std::logic_error&) {
      throw InputError("identity must be an index in range or `-`", line_no);
    }
  }
  std::vector<Element> cells;
  cells.reserve(static_cast<std::size_t>(n * n));
  for (long long r = 0; r < n; ++r) {
    if (!next()) throw InputError("table ended after " + std::to_string(r) + " rows", line_no);
    std::istringstream row(line);
    long long x = 0;
    long long count = 0;
    while (row >> x) {
      if (x < 0 || x >= n) throw InputError("table entry out of range", line_no);
      cells.push_back(static_cast<Element>(x));
      ++count;
    }
    if (!row.eof() || count != n) {
      throw InputError("row must hold exactly " + std::to_string(n) + " indices", line_no);
    }
  }
  return MulTable(static_cast<int>(n), std::move(cells), identity);
}

void write_table(std::ostream& out, const MulTable& t) {
  out << t.order() << ' ';
  if (t.identity()) {
    out << *t.identity();
  } else {
    out << '-';
  }
  out << '\n';
  for (Element a = 0; a < t.order(); ++a) {
    auto row = t.row(a);
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (b) out << ' ';
      out << row[b];
    }
    out << '\n';
  }
}

}  // namespace mgraph
