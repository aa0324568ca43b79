#include "tmc/spanning.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tmc {

namespace {

bool dominates(const Graph& g, uint64_t q) {
  uint64_t cover = q;
  uint64_t rest = q;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    cover |= g.neighbors(v);
  }
  return cover == g.vertex_mask();
}

// BFS tree of g[q] rooted at q's least vertex, then every outside vertex
// hangs off its least neighbor in q.  The internal set is exactly q: every
// q vertex keeps a neighbor outside or deeper, or q was not minimal.
std::vector<Edge> tree_from_dominating_set(const Graph& g, uint64_t q) {
  std::vector<Edge> edges;
  int root = std::countr_zero(q);
  uint64_t seen = uint64_t{1} << root;
  std::vector<int> frontier = {root};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier) {
      uint64_t nb = g.neighbors(v) & q & ~seen;
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        seen |= uint64_t{1} << w;
        edges.emplace_back(std::min(v, w), std::max(v, w));
        next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  uint64_t outside = g.vertex_mask() & ~q;
  while (outside) {
    int v = std::countr_zero(outside);
    outside &= outside - 1;
    int w = std::countr_zero(g.neighbors(v) & q);
    edges.emplace_back(std::min(v, w), std::max(v, w));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

SpanningTreeResult max_leaf_spanning_tree(const Graph& g) {
  if (!g.is_connected())
    throw std::invalid_argument("max_leaf_spanning_tree needs a connected graph");
  if (g.order() > 10)
    throw std::invalid_argument("max_leaf_spanning_tree: order above 10 is not supported");
  int n = g.order();
  if (n == 1) return {0, 1, {}};
  if (n == 2) return {2, 0, {{0, 1}}};
  for (int size = 1; size <= n; ++size) {
    // Gosper's hack walks masks of a given popcount in ascending order.
    uint64_t q = (uint64_t{1} << size) - 1;
    while (q < (uint64_t{1} << n)) {
      if (g.induced_connected(q) && dominates(g, q))
        return {n - size, size, tree_from_dominating_set(g, q)};
      uint64_t c = q & -q;
      uint64_t r = q + c;
      q = (((r ^ q) >> 2) / c) | r;
    }
  }
  throw std::logic_error("max_leaf_spanning_tree: no dominating set found");
}

bool djs_bound_holds(const Graph& g) {
  if (!g.is_connected())
    throw std::invalid_argument("djs_bound_holds needs a connected graph");
  int n = g.order(), m = g.size();
  if (n < 4) return true;
  int l = max_leaf_spanning_tree(g).leaves;
  for (int t = 1; t <= n - 3; ++t)
    if (m >= n + t * (t - 1) / 2 && l < t + 1) return false;
  return true;
}

}  // namespace tmc
