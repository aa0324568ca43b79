#include "tmc/families.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace tmc {

namespace {

long long choose2(long long x) { return x * (x - 1) / 2; }

Graph make_gnt(int n, int p) {
  int t = 2 * (p + 1) - n;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  auto drop = [&edges](int u, int v) {
    std::erase(edges, Edge{u, v});
  };
  for (int j = 0; j + 1 < n - p; ++j) drop(2 * j, 2 * j + 1);
  for (int v = n - t + 1; v < n; ++v) drop(n - t, v);
  return Graph(n, edges);
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::GTS: return "gts";
    case Family::GNT: return "gnt";
    case Family::GSTAR: return "gstar";
    case Family::MULTIPARTITE: return "multipartite";
    case Family::COMPLETE: return "complete";
    case Family::STAR: return "star";
    case Family::PATH: return "path";
  }
  return "?";
}

Graph complete_multipartite(std::span<const int> parts) {
  if (parts.empty()) throw std::invalid_argument("multipartite graph needs at least one part");
  long long n = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("part sizes must be positive");
    n += p;
  }
  if (n > kMaxOrder) throw std::invalid_argument("multipartite graph order exceeds 64");
  std::vector<int> part_of(n);
  int v = 0;
  for (size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) part_of[v++] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if (part_of[u] != part_of[w]) edges.emplace_back(u, w);
  return Graph(static_cast<int>(n), edges);
}

FamilyInstance gen_gts(int n, int t, int s) {
  if (t < 2 || t > n - 2)
    throw std::invalid_argument("gts needs 2 <= t <= n-2 (so n >= 4)");
  if (s < 0 || s > t - 1) throw std::invalid_argument("gts needs 0 <= s <= t-1");
  std::vector<Edge> edges;
  for (int u = 2; u <= t; ++u)
    for (int v = u + 1; v <= t; ++v) edges.emplace_back(u, v);
  for (int v = s + 2; v <= t; ++v) edges.emplace_back(0, v);
  for (int v = 2; v <= t; ++v) edges.emplace_back(1, v);
  edges.emplace_back(0, t + 1);
  for (int v = t + 1; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, n - 1);
  Graph g(n, edges);
  FamilyInstance inst{std::move(g), 0, Family::GTS, {}};
  inst.params.n = n;
  inst.params.t = t;
  inst.params.s = s;
  inst.predicted_tmc = inst.graph.size() - n + 2 + t;
  return inst;
}

FamilyInstance gen_gnt(int n, int p) {
  if (2 * p <= n || p >= n - 2)
    throw std::invalid_argument("gnt needs n/2 < p < n-2; order " + std::to_string(n) +
                                (n >= 7 ? " does not admit this p" : " admits no p at all"));
  FamilyInstance inst{make_gnt(n, p), choose2(n) - p, Family::GNT, {}};
  inst.params.n = n;
  inst.params.p = p;
  inst.params.t = 2 * (p + 1) - n;
  return inst;
}

FamilyInstance gen_gnt3(int n) {
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("gnt3 needs odd n >= 5");
  int p = (n + 1) / 2;
  FamilyInstance inst{make_gnt(n, p), choose2(n) - p, Family::GNT, {}};
  inst.params.n = n;
  inst.params.p = p;
  inst.params.t = 3;
  return inst;
}

FamilyInstance gen_gstar(int n, int t, int extra) {
  if (t < 2 || t > n - 1) throw std::invalid_argument("gstar needs 2 <= t <= n-1");
  if (extra < 0 || extra > t - 2) throw std::invalid_argument("gstar needs 0 <= extra <= t-2");
  std::vector<Edge> edges;
  int first_big = n - t;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u < first_big) edges.emplace_back(u, v);
  for (int j = 0; j < extra; ++j) edges.emplace_back(first_big, first_big + 1 + j);
  Graph g(n, edges);
  FamilyInstance inst{std::move(g), 0, Family::GSTAR, {}};
  inst.params.n = n;
  inst.params.t = t;
  inst.params.extra = extra;
  inst.predicted_tmc = inst.graph.size() + n - t;
  return inst;
}

FamilyInstance gen_multipartite(std::span<const int> parts) {
  if (parts.size() < 2) throw std::invalid_argument("multipartite needs at least two parts");
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1])
      throw std::invalid_argument("part sizes must be non-increasing");
  Graph g = complete_multipartite(parts);
  int r = static_cast<int>(parts.size());
  int t = 0;
  for (int p : parts)
    if (p >= 2) ++t;
  FamilyInstance inst{std::move(g), 0, Family::MULTIPARTITE, {}};
  inst.params.n = inst.graph.order();
  inst.params.t = t;
  inst.params.parts.assign(parts.begin(), parts.end());
  inst.predicted_tmc = inst.graph.size() + r - t;
  return inst;
}

FamilyInstance gen_complete(int n) {
  if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  Graph g(n, edges);
  FamilyInstance inst{std::move(g), choose2(n) + n, Family::COMPLETE, {}};
  inst.params.n = n;
  return inst;
}

FamilyInstance gen_star(int n) {
  if (n < 3) throw std::invalid_argument("star needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  Graph g(n, edges);
  FamilyInstance inst{std::move(g), n, Family::STAR, {}};
  inst.params.n = n;
  return inst;
}

FamilyInstance gen_path(int n) {
  if (n < 2) throw std::invalid_argument("path needs n >= 2");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  Graph g(n, edges);
  FamilyInstance inst{std::move(g), 3, Family::PATH, {}};
  inst.params.n = n;
  return inst;
}

}  // namespace tmc
