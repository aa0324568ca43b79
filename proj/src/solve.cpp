#include "tmc/solve.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tmc/families.hpp"
#include "tmc/spanning.hpp"

namespace tmc {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

long long choose2(long long x) { return x >= 2 ? x * (x - 1) / 2 : 0; }

bool connected_dominating_in(const Graph& g, uint64_t s, uint64_t q) {
  if (!q || !g.induced_connected(q)) return false;
  uint64_t cover = q;
  uint64_t rest = q;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    cover |= g.neighbors(v) & s;
  }
  return (cover & s) == s;
}

// Spanning tree of g[s] whose internal set is exactly q, for q a minimal
// connected dominating set of g[s]: BFS tree of g[q], then every vertex of
// s - q hangs off its least neighbor in q.  Were some q vertex a leaf of the
// result, the remaining internal vertices would be a smaller connected
// dominating set.
std::vector<Edge> tree_in_subset(const Graph& g, uint64_t s, uint64_t q) {
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
  uint64_t outside = s & ~q;
  while (outside) {
    int v = std::countr_zero(outside);
    outside &= outside - 1;
    int w = std::countr_zero(g.neighbors(v) & q);
    edges.emplace_back(std::min(v, w), std::max(v, w));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

TreeCollection theorem1_collection(const Graph& g) {
  SpanningTreeResult st = max_leaf_spanning_tree(g);
  return {make_color_tree(g, st.tree)};
}

std::optional<ColorTree> complement_tree(const Graph& g) {
  int n = g.order();
  Graph co = g.complement();
  uint64_t shadow = 0;
  for (int v = 0; v < n; ++v)
    if (co.neighbors(v)) shadow |= uint64_t{1} << v;
  if (!shadow) return std::nullopt;
  int p = co.size();
  int count = std::popcount(shadow);
  std::vector<Edge> edges;
  if (count <= p + 1) {
    int center = -1;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == n - 1) {
        center = v;
        break;
      }
    if (center < 0) {
      if (p <= n - 3)
        throw std::logic_error("complement star: no universal vertex despite p <= n-3");
      return std::nullopt;
    }
    uint64_t rest = shadow;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      edges.emplace_back(std::min(center, v), std::max(center, v));
    }
  } else {
    // At least count - p >= 2 components; a double star across two of them
    // lives entirely in g.
    int v = std::countr_zero(shadow);
    uint64_t cv = co.reachable(v, shadow);
    int u = std::countr_zero(shadow & ~cv);
    uint64_t rest = cv;
    while (rest) {
      int x = std::countr_zero(rest);
      rest &= rest - 1;
      edges.emplace_back(std::min(u, x), std::max(u, x));
    }
    rest = shadow & ~cv & ~(uint64_t{1} << u);
    while (rest) {
      int y = std::countr_zero(rest);
      rest &= rest - 1;
      edges.emplace_back(std::min(v, y), std::max(v, y));
    }
  }
  return make_color_tree(g, std::move(edges));
}

std::optional<std::vector<uint64_t>> multipartite_part_masks(const Graph& g) {
  Graph co = g.complement();
  uint64_t left = g.vertex_mask();
  std::vector<uint64_t> parts;
  while (left) {
    int v = std::countr_zero(left);
    uint64_t comp = co.reachable(v, left);
    uint64_t rest = comp;
    while (rest) {
      int a = std::countr_zero(rest);
      rest &= rest - 1;
      if (g.neighbors(a) & comp) return std::nullopt;
    }
    parts.push_back(comp);
    left &= ~comp;
  }
  if (parts.size() < 2) return std::nullopt;
  std::sort(parts.begin(), parts.end(), [](uint64_t a, uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa > pb;
    return std::countr_zero(a) < std::countr_zero(b);
  });
  return parts;
}

// One star per part of size >= 2, centered outside it; two parts with no
// singleton left over collapse to a single double star.
TreeCollection stars_collection(const Graph& g, const std::vector<uint64_t>& parts) {
  int r = static_cast<int>(parts.size());
  int t = 0;
  for (uint64_t pm : parts)
    if (std::popcount(pm) >= 2) ++t;
  if (t == 0) return {};
  TreeCollection out;
  if (r == 2 && t == 2) {
    int u = std::countr_zero(parts[0]);
    int v = std::countr_zero(parts[1]);
    std::vector<Edge> edges;
    edges.emplace_back(std::min(u, v), std::max(u, v));
    uint64_t rest = parts[1] & ~(uint64_t{1} << v);
    while (rest) {
      int x = std::countr_zero(rest);
      rest &= rest - 1;
      edges.emplace_back(std::min(u, x), std::max(u, x));
    }
    rest = parts[0] & ~(uint64_t{1} << u);
    while (rest) {
      int y = std::countr_zero(rest);
      rest &= rest - 1;
      edges.emplace_back(std::min(v, y), std::max(v, y));
    }
    out.push_back(make_color_tree(g, std::move(edges)));
    return out;
  }
  for (int i = 0; i < t; ++i) {
    int center;
    if (i + 1 < t) center = std::countr_zero(parts[i + 1]);
    else if (r > t) center = std::countr_zero(parts[t]);
    else center = std::countr_zero(parts[0]);
    std::vector<Edge> edges;
    uint64_t rest = parts[i];
    while (rest) {
      int x = std::countr_zero(rest);
      rest &= rest - 1;
      edges.emplace_back(std::min(center, x), std::max(center, x));
    }
    out.push_back(make_color_tree(g, std::move(edges)));
  }
  return out;
}

struct Candidate {
  uint64_t verts = 0;
  uint64_t internal = 0;
  uint64_t edge_mask = 0;  // unrestricted mode only
  uint32_t covers = 0;
  int waste = 0;
};

struct Searcher {
  const Graph* g = nullptr;
  SolveMode mode = SolveMode::simple;
  std::vector<std::pair<int, int>> pairs;
  std::vector<Candidate> cands;
  std::vector<std::vector<int>> by_pair;
  std::vector<int> minw;
  std::vector<int> inv_choose2;
  int best_waste = kInf;
  std::vector<int> cur, best_sel;
  bool best_from_search = false;
  uint64_t nodes = 0;

  bool compatible(const Candidate& c) const {
    for (int si : cur) {
      const Candidate& o = cands[si];
      if (c.internal & o.internal) return false;
      if (mode == SolveMode::simple) {
        if (std::popcount(c.verts & o.verts) > 1) return false;
      } else {
        if (c.edge_mask & o.edge_mask) return false;
      }
    }
    return true;
  }

  // Remaining waste is at least every uncovered pair's cheapest candidate,
  // and at least w with C(w,2) >= #uncovered: a tree on k+1 vertices wastes
  // at least k and covers at most C(k,2) pairs, and C is superadditive.
  int future_lb(uint32_t uncovered) const {
    int lb = inv_choose2[std::popcount(uncovered)];
    uint32_t rest = uncovered;
    while (rest) {
      int p = std::countr_zero(rest);
      rest &= rest - 1;
      if (minw[p] > lb) lb = minw[p];
    }
    return lb;
  }

  void dfs(uint32_t uncovered, int cur_waste) {
    ++nodes;
    if (!uncovered) {
      if (cur_waste < best_waste) {
        best_waste = cur_waste;
        best_sel = cur;
        best_from_search = true;
      }
      return;
    }
    int p = std::countr_zero(uncovered);
    for (int ci : by_pair[p]) {
      const Candidate& c = cands[ci];
      if (cur_waste + c.waste >= best_waste) break;
      if (!compatible(c)) continue;
      uint32_t rest = uncovered & ~c.covers;
      if (rest && cur_waste + c.waste + future_lb(rest) >= best_waste) continue;
      cur.push_back(ci);
      dfs(rest, cur_waste + c.waste);
      cur.pop_back();
    }
  }
};

}  // namespace

TmcResult tmc_exact(const Graph& g, SolveMode mode) {
  if (!g.is_connected()) throw std::invalid_argument("tmc_exact needs a connected graph");
  int cap = mode == SolveMode::simple ? 8 : 5;
  if (g.order() > cap)
    throw std::invalid_argument(mode == SolveMode::simple
                                    ? "tmc_exact: order above 8 is not supported"
                                    : "tmc_exact: unrestricted mode supports order at most 5");
  int n = g.order(), m = g.size();
  const std::vector<Edge>& el = g.edge_list();

  Searcher sr;
  sr.g = &g;
  sr.mode = mode;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!g.has_edge(x, y)) sr.pairs.emplace_back(x, y);

  TreeCollection seed;
  if (!sr.pairs.empty()) {
    int seed_waste = kInf;
    auto consider = [&](TreeCollection coll) {
      int w = 0;
      for (const ColorTree& t : coll) w += tree_waste(t);
      if (w < seed_waste) {
        seed_waste = w;
        seed = std::move(coll);
      }
    };
    consider(theorem1_collection(g));
    if (auto ct = complement_tree(g)) consider({std::move(*ct)});
    if (auto parts = multipartite_part_masks(g)) consider(stars_collection(g, *parts));
    sr.best_waste = seed_waste;

    auto pair_cover = [&](uint64_t s) {
      uint32_t cov = 0;
      for (size_t i = 0; i < sr.pairs.size(); ++i) {
        uint64_t pm = (uint64_t{1} << sr.pairs[i].first) | (uint64_t{1} << sr.pairs[i].second);
        if ((s & pm) == pm) cov |= uint32_t{1} << i;
      }
      return cov;
    };
    for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
      if (std::popcount(s) < 3 || !g.induced_connected(s)) continue;
      uint32_t cov = pair_cover(s);
      if (!cov) continue;
      if (mode == SolveMode::simple) {
        for (uint64_t q = s;; q = (q - 1) & s) {
          if (q && connected_dominating_in(g, s, q)) {
            bool minimal = true;
            uint64_t bits = q;
            while (bits) {
              uint64_t b = bits & -bits;
              bits ^= b;
              if (connected_dominating_in(g, s, q ^ b)) {
                minimal = false;
                break;
              }
            }
            if (minimal) {
              int w = std::popcount(s) - 2 + std::popcount(q);
              if (w < sr.best_waste) sr.cands.push_back({s, q, 0, cov, w});
            }
          }
          if (!q) break;
        }
      } else {
        std::vector<int> local;
        for (size_t i = 0; i < el.size(); ++i) {
          uint64_t pm = (uint64_t{1} << el[i].first) | (uint64_t{1} << el[i].second);
          if ((s & pm) == pm) local.push_back(static_cast<int>(i));
        }
        int k = std::popcount(s) - 1;
        if (static_cast<int>(local.size()) < k) continue;
        uint32_t sub = (uint32_t{1} << k) - 1;
        while (sub < (uint32_t{1} << local.size())) {
          uint64_t verts = 0, emask = 0;
          std::array<int, 8> deg{};
          uint32_t bits = sub;
          while (bits) {
            int j = std::countr_zero(bits);
            bits &= bits - 1;
            const Edge& e = el[local[j]];
            verts |= (uint64_t{1} << e.first) | (uint64_t{1} << e.second);
            emask |= uint64_t{1} << local[j];
            ++deg[e.first];
            ++deg[e.second];
          }
          if (verts == s) {
            // k edges spanning s: a tree iff the edge set is connected.
            uint64_t reach = uint64_t{1} << std::countr_zero(s);
            bool grew = true;
            while (grew) {
              grew = false;
              uint32_t eb = sub;
              while (eb) {
                int j = std::countr_zero(eb);
                eb &= eb - 1;
                const Edge& e = el[local[j]];
                uint64_t a = uint64_t{1} << e.first, b = uint64_t{1} << e.second;
                if (((reach & a) != 0) != ((reach & b) != 0)) {
                  reach |= a | b;
                  grew = true;
                }
              }
            }
            if (reach == s) {
              uint64_t internal = 0;
              for (int v = 0; v < n; ++v)
                if (deg[v] >= 2) internal |= uint64_t{1} << v;
              int w = k - 1 + std::popcount(internal);
              if (w < sr.best_waste) sr.cands.push_back({s, internal, emask, cov, w});
            }
          }
          uint32_t c = sub & -sub;
          uint32_t r = sub + c;
          sub = (((r ^ sub) >> 2) / c) | r;
          if (!c) break;
        }
      }
    }

    std::sort(sr.cands.begin(), sr.cands.end(), [](const Candidate& a, const Candidate& b) {
      if (a.waste != b.waste) return a.waste < b.waste;
      if (a.verts != b.verts) return a.verts < b.verts;
      if (a.internal != b.internal) return a.internal < b.internal;
      return a.edge_mask < b.edge_mask;
    });
    sr.by_pair.assign(sr.pairs.size(), {});
    sr.minw.assign(sr.pairs.size(), kInf);
    for (size_t i = 0; i < sr.cands.size(); ++i) {
      uint32_t cov = sr.cands[i].covers;
      while (cov) {
        int p = std::countr_zero(cov);
        cov &= cov - 1;
        sr.by_pair[p].push_back(static_cast<int>(i));
        if (sr.cands[i].waste < sr.minw[p]) sr.minw[p] = sr.cands[i].waste;
      }
    }
    sr.inv_choose2.assign(sr.pairs.size() + 1, 0);
    for (int pcount = 1; pcount <= static_cast<int>(sr.pairs.size()); ++pcount) {
      int w = sr.inv_choose2[pcount - 1];
      while (choose2(w) < pcount) ++w;
      sr.inv_choose2[pcount] = w;
    }
    sr.dfs((sr.pairs.size() == 32 ? ~uint32_t{0}
                                  : (uint32_t{1} << sr.pairs.size()) - 1),
           0);
  } else {
    sr.best_waste = 0;
  }

  TreeCollection coll;
  if (sr.best_from_search) {
    for (int ci : sr.best_sel) {
      const Candidate& c = sr.cands[ci];
      std::vector<Edge> edges;
      if (mode == SolveMode::simple) {
        edges = tree_in_subset(g, c.verts, c.internal);
      } else {
        uint64_t eb = c.edge_mask;
        while (eb) {
          int j = std::countr_zero(eb);
          eb &= eb - 1;
          edges.push_back(el[j]);
        }
      }
      ColorTree t = make_color_tree(g, std::move(edges));
      if (t.vertices != c.verts || t.internal != c.internal)
        throw std::logic_error("tmc_exact: tree realization mismatch");
      coll.push_back(std::move(t));
    }
  } else {
    coll = std::move(seed);
  }
  std::sort(coll.begin(), coll.end(), [](const ColorTree& a, const ColorTree& b) {
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    if (a.internal != b.internal) return a.internal < b.internal;
    return a.edges < b.edges;
  });
  for (size_t i = 0; i < coll.size(); ++i) coll[i].color = static_cast<int>(i);

  TmcResult res;
  res.waste = sr.best_waste;
  res.value = m + n - sr.best_waste;
  res.node_count = sr.nodes;
  res.witness = coloring_from_collection(g, coll);
  res.collection = std::move(coll);

  if (auto reason =
          collection_infeasibility(g, res.collection, mode == SolveMode::simple))
    throw std::logic_error("tmc_exact: infeasible result: " + *reason);
  if (!is_tmc(g, res.witness).ok)
    throw std::logic_error("tmc_exact: witness coloring rejected");
  if (count_colors(res.witness) != res.value)
    throw std::logic_error("tmc_exact: witness color count mismatch");
  long long capacity = 0;
  for (const ColorTree& t : res.collection)
    capacity += choose2(std::popcount(t.vertices) - 1);
  if (capacity < static_cast<long long>(sr.pairs.size()))
    throw std::logic_error("tmc_exact: capacity invariant violated");
  return res;
}

TotalColoring lower_bound_theorem1(const Graph& g) {
  if (!g.is_connected())
    throw std::invalid_argument("lower_bound_theorem1 needs a connected graph");
  SpanningTreeResult st = max_leaf_spanning_tree(g);
  if (st.tree.size() < 2) return coloring_from_collection(g, {});
  TreeCollection coll;
  coll.push_back(make_color_tree(g, st.tree, 0));
  return coloring_from_collection(g, coll);
}

std::optional<TotalColoring> lower_bound_complement(const Graph& g) {
  if (!g.is_connected())
    throw std::invalid_argument("lower_bound_complement needs a connected graph");
  auto tree = complement_tree(g);
  if (!tree) return std::nullopt;
  TreeCollection coll;
  coll.push_back(std::move(*tree));
  return coloring_from_collection(g, coll);
}

TotalColoring multipartite_coloring(std::span<const int> parts) {
  if (parts.size() < 2)
    throw std::invalid_argument("multipartite coloring needs at least two parts");
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1])
      throw std::invalid_argument("part sizes must be non-increasing");
  Graph g = complete_multipartite(parts);
  std::vector<uint64_t> masks;
  int v = 0;
  for (int p : parts) {
    masks.push_back(((uint64_t{1} << p) - 1) << v);
    v += p;
  }
  TreeCollection coll = stars_collection(g, masks);
  return coloring_from_collection(g, coll);
}

long long lower_bound_subgraph(const Graph& g, const Graph& h, long long tmc_h) {
  if (g.order() != h.order())
    throw std::invalid_argument("subgraph bound needs a spanning subgraph");
  if (!h.is_connected())
    throw std::invalid_argument("subgraph bound needs a connected subgraph");
  for (const Edge& e : h.edge_list())
    if (!g.has_edge(e.first, e.second))
      throw std::invalid_argument("subgraph has an edge outside the host graph");
  return g.size() - h.size() + tmc_h;
}

}  // namespace tmc
