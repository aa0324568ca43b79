#pragma once

#include <vector>

#include "tmc/graph.hpp"

namespace tmc {

struct SpanningTreeResult {
  int leaves = 0;    // maximum leaf count l(g)
  int internal = 0;  // n - leaves
  std::vector<Edge> tree;  // a spanning tree attaining it; empty for n == 1
};

// Exact maximum-leaf spanning tree; connected input, order at most 10.
// The internal vertices of spanning trees are exactly the connected
// dominating sets, so the scan minimizes those by size then by mask.
SpanningTreeResult max_leaf_spanning_tree(const Graph& g);

// Every t in [1, n-3] with m >= n + t*(t-1)/2 must allow a spanning tree
// with at least t + 1 leaves.
bool djs_bound_holds(const Graph& g);

}  // namespace tmc
