#pragma once

#include <vector>

#include "mgraph/algebra.hpp"
#include "mgraph/graph.hpp"

namespace mgraph {

// G_{k,l}: layer 0 holds (0,j) for j < k^2 as vertices 0..k^2-1; layer
// i >= 1 holds (i,j) for j < k as vertex k^2 + (i-1)k + j. Arcs go from every
// vertex of layer i to every vertex of layer i+1, and from (l-1,j1) to (0,j2)
// when j1 = floor(j2/k). Requires k, l >= 1.
Digraph gen_Gkl(int k, int ell);

// Number of merged layer-0 classes of G_{k,l,kappa}: floor(k/kappa) k.
int gklk_layer0_size(int k, int kappa);

// G_{k,l,kappa}: G_{k,l} with layer 0 merged into classes (j mod k, block of
// j / (k kappa)), where a trailing incomplete block joins the one before it.
// Classes are numbered by their least j, followed by layers 1..l-1 as in
// gen_Gkl. Requires k > 1, kappa >= 1, floor(k/kappa) >= 1 and l >= 1; for
// l >= 2 the result is checked to be k-outregular and strongly connected.
Digraph gen_Gklk(int k, int ell, int kappa);

enum class ThresholdStep { isolated, dominating };

struct ThresholdGraph {
  SimpleGraph graph;     // vertex i is added by step i (vertex 0 is the seed)
  CayleyWitness witness; // identity 0, bijection = identity
};

// Builds the graph and a monoid witness step by step: the new vertex x is
// absorbing (xv = vx = xx = x) and joins the connection set when dominating.
ThresholdGraph gen_threshold(const std::vector<ThresholdStep>& steps);

// K4 on 0..3 plus the cycle 4, 5, ..., 3+l. Requires l >= 3.
SimpleGraph gen_K4_Cl(int ell);

struct RootedTree {
  SimpleGraph tree;
  Vertex root = 0;
};

// Perfect k-ary tree of height h in breadth-first numbering, root 0.
RootedTree gen_perfect_kary(int k, int h);

// T_{k,h} plus a leaf (the last vertex) hanging from the least vertex at
// depth h-1. Requires h >= 1.
RootedTree gen_Tplus(int k, int h);

// Vertices x=0, y=1, z=2 with arcs (x,x),(x,y),(y,x),(y,z),(z,y),(z,z).
Digraph fig2_digraph();

// The unique tree of order at most 7 that is not a generated monoid graph,
// located by the tree classifier.
SimpleGraph smallest_nongenerated_tree();

}  // namespace mgraph
