// Small named graphs shared by the tests.
#pragma once

#include "mgraph/graph.hpp"

namespace testgraphs {

using mgraph::SimpleGraph;

inline SimpleGraph cycle(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline SimpleGraph path(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline SimpleGraph complete(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline SimpleGraph star(int leaves) {
  SimpleGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

inline SimpleGraph petersen() {
  SimpleGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace testgraphs
