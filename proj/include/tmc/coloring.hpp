#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tmc/graph.hpp"

namespace tmc {

// Total coloring: one color per edge (aligned with Graph::edge_list()) and
// one per vertex.  Colors are arbitrary nonnegative ids.
struct TotalColoring {
  std::vector<int> edge_colors;
  std::vector<int> vertex_colors;
};

struct ColorClass {
  std::vector<Edge> edges;   // in edge_list order
  uint64_t vertices = 0;
};

std::map<int, ColorClass> color_subgraphs(const Graph& g, const TotalColoring& col);

struct TmcVerdict {
  bool ok = false;
  // Lexicographically first nonadjacent pair with no monochromatic connecting
  // path; unset when ok.
  std::optional<std::pair<int, int>> failing_pair;
};

// A coloring qualifies when every vertex pair is joined by a path whose edges
// and internal vertices all carry one color; endpoint colors are free, and an
// edge joins its endpoints by itself.
TmcVerdict is_tmc(const Graph& g, const TotalColoring& col);

int count_colors(const TotalColoring& col);

// m + n - count_colors: how far the coloring falls short of all-distinct.
int waste(const Graph& g, const TotalColoring& col);

// One nontrivial color class: a subtree of the host graph whose edges and
// internal vertices share a color.
struct ColorTree {
  int color = -1;  // -1 until a coloring assigns one
  uint64_t vertices = 0;
  std::vector<Edge> edges;  // lexicographic, u < v
  uint64_t internal = 0;    // vertices with tree degree >= 2
};

ColorTree make_color_tree(const Graph& g, std::vector<Edge> edges, int color = -1);

// (edges - 1) + |internal| for trees with >= 2 edges; a single edge wastes 0.
int tree_waste(const ColorTree& t);

using TreeCollection = std::vector<ColorTree>;

// Returns a description of the first violated constraint, or nullopt when the
// collection is feasible: each tree has >= 2 edges and lives in g, trees are
// pairwise edge-disjoint with pairwise disjoint internal sets (and, when
// require_simple, share at most one vertex), and every nonadjacent pair of g
// lies inside some tree's vertex set.
std::optional<std::string> collection_infeasibility(const Graph& g,
                                                    std::span<const ColorTree> trees,
                                                    bool require_simple = false);

// Colors tree i's edges and internal vertices with color i, then gives every
// remaining edge (in edge_list order) and vertex (ascending) a fresh color.
// Throws std::invalid_argument with the infeasibility reason if the
// collection is not feasible.
TotalColoring coloring_from_collection(const Graph& g, std::span<const ColorTree> trees);

}  // namespace tmc
