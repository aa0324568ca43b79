// Independent reference implementations used only by the tests.
// Deliberately written against different representations than the library
// (row-major pair indexing, subset scans, per-color BFS) so that agreement
// is meaningful.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tmc/coloring.hpp"
#include "tmc/graph.hpp"

namespace oracle {

// Row-major index of pair {u, v}, u < v, over order n.
inline int pair_index(int u, int v, int n) {
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

// Number of connected graphs on n unlabeled vertices, counted by scanning
// all 2^C(n,2) labeled graphs and keeping those whose edge bitmask is
// lexicographically minimal over every relabeling.  n <= 7.
inline std::uint64_t connected_class_count(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("oracle handles 1 <= n <= 7");
  if (n == 1) return 1;
  const int np = n * (n - 1) / 2;

  // perm_tab[p][i]: index whose bit in the original supplies bit i of the
  // relabeled graph.  Identity permutation is skipped.
  std::vector<std::array<int, 21>> perm_tab;
  {
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    while (std::next_permutation(sigma.begin(), sigma.end())) {
      std::array<int, 21> tab{};
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          int a = sigma[u], b = sigma[v];
          if (a > b) std::swap(a, b);
          tab[pair_index(u, v, n)] = pair_index(a, b, n);
        }
      perm_tab.push_back(tab);
    }
  }

  // Pair endpoints for the connectivity sweep.
  std::vector<std::pair<int, int>> ends(np);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) ends[pair_index(u, v, n)] = {u, v};

  std::uint64_t count = 0;
  const std::uint32_t top = std::uint32_t{1} << np;
  for (std::uint32_t bits = 0; bits < top; ++bits) {
    // Connectivity over adjacency masks.
    std::array<std::uint32_t, 7> adj{};
    for (int p = 0; p < np; ++p)
      if (bits >> p & 1) {
        adj[ends[p].first] |= std::uint32_t{1} << ends[p].second;
        adj[ends[p].second] |= std::uint32_t{1} << ends[p].first;
      }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if (frontier >> v & 1) next |= adj[v];
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != (std::uint32_t{1} << n) - 1) continue;

    // Canonical iff no relabeling yields a lexicographically smaller mask
    // (bit 0 most significant).
    bool canonical = true;
    for (const auto& tab : perm_tab) {
      for (int p = 0; p < np; ++p) {
        std::uint32_t orig = bits >> p & 1;
        std::uint32_t imaged = bits >> tab[p] & 1;
        if (imaged < orig) {
          canonical = false;
          break;
        }
        if (imaged > orig) break;
      }
      if (!canonical) break;
    }
    if (canonical) ++count;
  }
  return count;
}

// Maximum leaf count over all spanning trees, by scanning every
// (n-1)-subset of edges.  Disconnected input is a caller error.
inline int max_leaves(const tmc::Graph& g) {
  const int n = g.order();
  if (n == 1) return 0;
  if (n == 2) return 2;
  const auto edges = g.edge_list();
  const int m = static_cast<int>(edges.size());
  if (m < n - 1) throw std::invalid_argument("graph is not connected");

  int best = -1;
  std::vector<int> pick(n - 1);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::array<int, 10> deg{};
    std::uint64_t seen = 1, prev = 0;
    std::array<std::uint64_t, 10> adj{};
    for (int i : pick) {
      auto [u, v] = edges[i];
      ++deg[u], ++deg[v];
      adj[u] |= std::uint64_t{1} << v;
      adj[v] |= std::uint64_t{1} << u;
    }
    while (seen != prev) {
      prev = seen;
      for (int v = 0; v < n; ++v)
        if (seen >> v & 1) seen |= adj[v];
    }
    if (seen == g.vertex_mask()) {
      int leaves = 0;
      for (int v = 0; v < n; ++v)
        if (deg[v] == 1) ++leaves;
      best = std::max(best, leaves);
    }
    // Next (n-1)-combination of [0, m).
    int i = n - 2;
    while (i >= 0 && pick[i] == m - (n - 1) + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n - 1; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (best < 0) throw std::invalid_argument("graph is not connected");
  return best;
}

// Reference validity check for a total coloring: every vertex pair must be
// joined by a path whose edges and interior vertices all carry one color.
// Searches each color by BFS from x, expanding only through vertices of
// that color; adjacent pairs always qualify via their own edge.
inline bool is_tmc(const tmc::Graph& g, const tmc::TotalColoring& col) {
  const int n = g.order();
  const auto edges = g.edge_list();

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (g.has_edge(x, y)) continue;
      std::vector<int> colors;
      for (int c : col.edge_colors) colors.push_back(c);
      std::sort(colors.begin(), colors.end());
      colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
      bool joined = false;
      for (int c : colors) {
        std::array<std::uint64_t, 64> step{};  // step[v]: vertices reachable from v by one c-edge
        for (std::size_t i = 0; i < edges.size(); ++i)
          if (col.edge_colors[i] == c) {
            auto [u, v] = edges[i];
            step[u] |= std::uint64_t{1} << v;
            step[v] |= std::uint64_t{1} << u;
          }
        // BFS: start at x; may pass through a vertex only if it has color c.
        std::uint64_t reached = step[x], visited = std::uint64_t{1} << x;
        while (true) {
          if (reached >> y & 1) {
            joined = true;
            break;
          }
          std::uint64_t expand = 0;
          for (int v = 0; v < n; ++v)
            if ((reached >> v & 1) && !(visited >> v & 1) && col.vertex_colors[v] == c)
              expand |= step[v];
          visited |= reached;
          if (!(expand & ~visited)) break;
          reached |= expand;
        }
        if (joined) break;
      }
      if (!joined) return false;
    }
  return true;
}

}  // namespace oracle
