#pragma once

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "mgraph/graph.hpp"

namespace mgraph {

using Element = int;

// A finite magma on 0..order-1 stored as a dense table, row a holding the
// products a*0 ... a*(order-1). Associativity is not checked here; see
// validate_table.
class MulTable {
 public:
  MulTable() = default;
  MulTable(int order, std::vector<Element> products,
           std::optional<Element> identity = std::nullopt);

  int order() const noexcept { return order_; }
  Element operator()(Element a, Element b) const { return products_[a * order_ + b]; }
  std::optional<Element> identity() const noexcept { return identity_; }
  std::span<const Element> row(Element a) const {
    return {products_.data() + a * order_, static_cast<std::size_t>(order_)};
  }
  const std::vector<Element>& products() const noexcept { return products_; }

  bool operator==(const MulTable&) const = default;

 private:
  int order_ = 0;
  std::vector<Element> products_;
  std::optional<Element> identity_;
};

// Non-empty sorted set of table elements.
class ConnectionSet {
 public:
  ConnectionSet() = default;
  ConnectionSet(std::vector<Element> elements);
  ConnectionSet(std::initializer_list<Element> elements)
      : ConnectionSet(std::vector<Element>(elements)) {}

  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Element x) const;
  const std::vector<Element>& elements() const noexcept { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool operator==(const ConnectionSet&) const = default;

 private:
  std::vector<Element> elements_;
};

struct TableViolation {
  enum class Kind { associativity, identity };
  Kind kind;
  // For associativity (a*b)*c != a*(b*c); for identity a is the identity and
  // b the element where the law fails (c unused).
  Element a;
  Element b;
  Element c;
};

struct TableReport {
  std::optional<TableViolation> violation;
  bool ok() const noexcept { return !violation; }
};

// Exhaustive O(n^3) associativity scan plus the identity law when set.
TableReport validate_table(const MulTable& t);

// Light's test: when `generators` generate the whole magma, associativity
// only has to be checked for middle factors among them, which is O(n^2 |G|).
// Throws InputError if the generators do not generate.
TableReport validate_table_generated(const MulTable& t, std::span<const Element> generators);

// Cay(S,C): arcs (s, s*c) for c in C, set semantics. Throws InputError on an
// invalid table or out-of-range connection element.
Digraph cayley_digraph(const MulTable& t, const ConnectionSet& c);

// Colored variant: one arc (s, s*c) of color c for every s and c.
ColoredMultiDigraph cayley_colored(const MulTable& t, const ConnectionSet& c);

// phi_s(x) = s*x for every s.
using Transformation = std::vector<Element>;
std::vector<Transformation> left_mul_maps(const MulTable& t);

bool is_left_cancellative(const MulTable& t);

// New element `order` becomes a two-sided identity.
MulTable adjoin_identity(const MulTable& t);

// Closure of C under products, together with the identity when the table has
// one. Sorted.
std::vector<Element> generated_submonoid(const MulTable& t, const ConnectionSet& c);

// Table text format: first line `n identity|-`, then n rows of n indices.
MulTable read_table(std::istream& in);
void write_table(std::ostream& out, const MulTable& t);

// A multiplication table plus connection set certifying that a graph is a
// Cayley graph. bijection[v] is the element standing for vertex v.
struct CayleyWitness {
  MulTable table;
  ConnectionSet connection;
  std::vector<Element> bijection;
};

}  // namespace mgraph
