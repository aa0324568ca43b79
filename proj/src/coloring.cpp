#include "tmc/coloring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <stdexcept>

namespace tmc {

namespace {

void check_sizes(const Graph& g, const TotalColoring& col) {
  if (static_cast<int>(col.edge_colors.size()) != g.size())
    throw std::invalid_argument("coloring has the wrong number of edge colors");
  if (static_cast<int>(col.vertex_colors.size()) != g.order())
    throw std::invalid_argument("coloring has the wrong number of vertex colors");
  for (int c : col.edge_colors)
    if (c < 0) throw std::invalid_argument("edge colors must be nonnegative");
  for (int c : col.vertex_colors)
    if (c < 0) throw std::invalid_argument("vertex colors must be nonnegative");
}

}  // namespace

std::map<int, ColorClass> color_subgraphs(const Graph& g, const TotalColoring& col) {
  check_sizes(g, col);
  std::map<int, ColorClass> out;
  const std::vector<Edge>& edges = g.edge_list();
  for (size_t i = 0; i < edges.size(); ++i) out[col.edge_colors[i]].edges.push_back(edges[i]);
  for (int v = 0; v < g.order(); ++v) out[col.vertex_colors[v]].vertices |= uint64_t{1} << v;
  return out;
}

TmcVerdict is_tmc(const Graph& g, const TotalColoring& col) {
  check_sizes(g, col);
  if (!g.is_connected()) throw std::invalid_argument("is_tmc needs a connected graph");
  int n = g.order();
  const std::vector<Edge>& edges = g.edge_list();

  // For a color c, a qualifying path between u and v walks from u over a
  // c-colored edge into one component of the c-core (vertices colored c plus
  // c-colored edges between them) and leaves it over a c-colored edge to v —
  // or is a single c-colored edge, which cannot join a nonadjacent pair.
  // Attachment ids are (color, core component) pairs, numbered globally.
  std::vector<std::vector<int>> attach(n);
  std::set<int> edge_colors_seen(col.edge_colors.begin(), col.edge_colors.end());
  int next_id = 0;
  for (int c : edge_colors_seen) {
    std::vector<int> root(n);
    for (int v = 0; v < n; ++v) root[v] = v;
    // Union-find over the c-core.
    auto find = [&](int v) {
      while (root[v] != v) v = root[v] = root[root[v]];
      return v;
    };
    for (size_t i = 0; i < edges.size(); ++i) {
      if (col.edge_colors[i] != c) continue;
      auto [u, v] = edges[i];
      if (col.vertex_colors[u] == c && col.vertex_colors[v] == c) root[find(u)] = find(v);
    }
    std::vector<int> comp_id(n, -1);
    auto id_of = [&](int v) {
      int r = find(v);
      if (comp_id[r] < 0) comp_id[r] = next_id++;
      return comp_id[r];
    };
    for (size_t i = 0; i < edges.size(); ++i) {
      if (col.edge_colors[i] != c) continue;
      auto [u, v] = edges[i];
      if (col.vertex_colors[v] == c) attach[u].push_back(id_of(v));
      if (col.vertex_colors[u] == c) attach[v].push_back(id_of(u));
    }
  }
  for (int v = 0; v < n; ++v) {
    std::sort(attach[v].begin(), attach[v].end());
    attach[v].erase(std::unique(attach[v].begin(), attach[v].end()), attach[v].end());
  }

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (g.has_edge(x, y)) continue;
      bool joined = false;
      size_t i = 0, j = 0;
      while (i < attach[x].size() && j < attach[y].size()) {
        if (attach[x][i] == attach[y][j]) {
          joined = true;
          break;
        }
        if (attach[x][i] < attach[y][j]) ++i;
        else ++j;
      }
      if (!joined) return {false, std::make_pair(x, y)};
    }
  return {true, std::nullopt};
}

int count_colors(const TotalColoring& col) {
  std::set<int> ids(col.edge_colors.begin(), col.edge_colors.end());
  ids.insert(col.vertex_colors.begin(), col.vertex_colors.end());
  return static_cast<int>(ids.size());
}

int waste(const Graph& g, const TotalColoring& col) {
  check_sizes(g, col);
  return g.size() + g.order() - count_colors(col);
}

ColorTree make_color_tree(const Graph& g, std::vector<Edge> edges, int color) {
  if (edges.empty()) throw std::invalid_argument("a color tree needs at least one edge");
  for (Edge& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!g.has_edge(e.first, e.second))
      throw std::invalid_argument("color tree edge is not in the host graph");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("color tree repeats an edge");

  ColorTree t;
  t.color = color;
  t.edges = std::move(edges);
  std::array<int, 64> deg{};
  for (const Edge& e : t.edges) {
    t.vertices |= uint64_t{1} << e.first;
    t.vertices |= uint64_t{1} << e.second;
    ++deg[e.first];
    ++deg[e.second];
  }
  int nv = std::popcount(t.vertices);
  if (static_cast<int>(t.edges.size()) != nv - 1)
    throw std::invalid_argument("color tree edges do not form a tree");
  // Connectivity over the tree's own edges.
  uint64_t seen = uint64_t{1} << std::countr_zero(t.vertices);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Edge& e : t.edges) {
      uint64_t a = uint64_t{1} << e.first, b = uint64_t{1} << e.second;
      if (((seen & a) != 0) != ((seen & b) != 0)) {
        seen |= a | b;
        grew = true;
      }
    }
  }
  if (seen != t.vertices) throw std::invalid_argument("color tree edges do not form a tree");
  for (int v = 0; v < 64; ++v)
    if (deg[v] >= 2) t.internal |= uint64_t{1} << v;
  return t;
}

int tree_waste(const ColorTree& t) {
  if (t.edges.size() < 2) return 0;
  return static_cast<int>(t.edges.size()) - 1 + std::popcount(t.internal);
}

std::optional<std::string> collection_infeasibility(const Graph& g,
                                                    std::span<const ColorTree> trees,
                                                    bool require_simple) {
  for (size_t i = 0; i < trees.size(); ++i) {
    const ColorTree& t = trees[i];
    if (t.edges.size() < 2)
      return "tree " + std::to_string(i) + " has fewer than two edges";
    ColorTree rebuilt;
    try {
      rebuilt = make_color_tree(g, t.edges);
    } catch (const std::invalid_argument& e) {
      return "tree " + std::to_string(i) + ": " + e.what();
    }
    if (rebuilt.vertices != t.vertices || rebuilt.internal != t.internal ||
        rebuilt.edges != t.edges)
      return "tree " + std::to_string(i) + " has inconsistent metadata";
  }
  for (size_t i = 0; i < trees.size(); ++i)
    for (size_t j = i + 1; j < trees.size(); ++j) {
      for (const Edge& e : trees[i].edges)
        if (std::binary_search(trees[j].edges.begin(), trees[j].edges.end(), e))
          return "trees " + std::to_string(i) + " and " + std::to_string(j) +
                 " share an edge";
      if (trees[i].internal & trees[j].internal)
        return "trees " + std::to_string(i) + " and " + std::to_string(j) +
               " share an internal vertex";
      if (require_simple && std::popcount(trees[i].vertices & trees[j].vertices) > 1)
        return "trees " + std::to_string(i) + " and " + std::to_string(j) +
               " share more than one vertex";
    }
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y) {
      if (g.has_edge(x, y)) continue;
      uint64_t pair_mask = (uint64_t{1} << x) | (uint64_t{1} << y);
      bool covered = false;
      for (const ColorTree& t : trees)
        if ((t.vertices & pair_mask) == pair_mask) {
          covered = true;
          break;
        }
      if (!covered)
        return "nonadjacent pair (" + std::to_string(x) + ", " + std::to_string(y) +
               ") is not covered by any tree";
    }
  return std::nullopt;
}

TotalColoring coloring_from_collection(const Graph& g, std::span<const ColorTree> trees) {
  if (auto reason = collection_infeasibility(g, trees))
    throw std::invalid_argument("infeasible collection: " + *reason);
  TotalColoring col;
  col.edge_colors.assign(g.size(), -1);
  col.vertex_colors.assign(g.order(), -1);
  const std::vector<Edge>& edges = g.edge_list();
  for (size_t t = 0; t < trees.size(); ++t) {
    for (const Edge& e : trees[t].edges) {
      size_t i = std::lower_bound(edges.begin(), edges.end(), e) - edges.begin();
      col.edge_colors[i] = static_cast<int>(t);
    }
    for (int v = 0; v < g.order(); ++v)
      if ((trees[t].internal >> v) & 1) col.vertex_colors[v] = static_cast<int>(t);
  }
  int next = static_cast<int>(trees.size());
  for (int& c : col.edge_colors)
    if (c < 0) c = next++;
  for (int& c : col.vertex_colors)
    if (c < 0) c = next++;
  return col;
}

}  // namespace tmc
