#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "tmc/coloring.hpp"
#include "tmc/graph.hpp"

namespace tmc {

// Bump when search results could change; census caches are keyed by it.
inline constexpr int kSolverVersion = 1;

// simple: color classes pairwise share at most one vertex (the optimum is
// unchanged); unrestricted: arbitrary collections, kept as a cross-check.
enum class SolveMode { simple, unrestricted };

struct TmcResult {
  int value = 0;
  int waste = 0;  // m + n - value
  uint64_t node_count = 0;
  TreeCollection collection;  // nontrivial color classes of the witness
  TotalColoring witness;
};

// Exact maximum over qualifying total colorings, via branch and bound over
// tree collections.  Connected input; order at most 8 (5 for unrestricted).
TmcResult tmc_exact(const Graph& g, SolveMode mode = SolveMode::simple);

// One maximum-leaf spanning tree and its internal vertices on a single
// color, everything else fresh: m - n + 2 + l(g) colors.
TotalColoring lower_bound_theorem1(const Graph& g);

// Star or double star spanning the complement's non-isolated vertices,
// wasting exactly their number.  nullopt for complete graphs, and for very
// sparse graphs (p > n-3) whose complement leaves no universal vertex for
// the star branch.
std::optional<TotalColoring> lower_bound_complement(const Graph& g);

// The extremal coloring of a complete multipartite graph: m + r - t colors
// for r parts, t of them of size >= 2.  Parts must be non-increasing.
TotalColoring multipartite_coloring(std::span<const int> parts);

// Monotonicity under edge addition: a connected spanning subgraph h with
// tmc(h) = tmc_h gives at least m(g) - m(h) + tmc_h colors on g.
long long lower_bound_subgraph(const Graph& g, const Graph& h, long long tmc_h);

}  // namespace tmc
