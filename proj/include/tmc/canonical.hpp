#pragma once

#include <string>
#include <vector>

#include "tmc/graph.hpp"

namespace tmc {

// Lexicographically minimal upper-triangle adjacency bit string over all
// vertex relabelings, prefixed with one order byte.  Equal exactly for
// isomorphic graphs.  Exhaustive search: order must be at most 10.
std::string canonical_form(const Graph& g);

Graph graph_from_code(const std::string& code);

// One representative per isomorphism class of connected graphs of order n,
// 1 <= n <= 8, sorted by (edge count, canonical form).  Every representative
// is canonically labeled: canonical_form(r) reproduces it.
std::vector<Graph> enumerate_connected(int n);

}  // namespace tmc
