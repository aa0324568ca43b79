#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tmc/coloring.hpp"
#include "tmc/graph.hpp"

using tmc::ColorTree;
using tmc::Graph;
using tmc::TotalColoring;

namespace {

Graph complete(int n) {
  std::vector<tmc::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, e);
}

TotalColoring all_distinct(const Graph& g) {
  TotalColoring col;
  int next = 0;
  for (int i = 0; i < g.size(); ++i) col.edge_colors.push_back(next++);
  for (int v = 0; v < g.order(); ++v) col.vertex_colors.push_back(next++);
  return col;
}

}  // namespace

TEST_CASE("complete graphs accept the all-distinct coloring") {
  for (int n = 2; n <= 5; ++n) {
    Graph g = complete(n);
    auto col = all_distinct(g);
    auto verdict = tmc::is_tmc(g, col);
    CHECK(verdict.ok);
    CHECK_FALSE(verdict.failing_pair.has_value());
    CHECK(tmc::count_colors(col) == g.size() + n);
    CHECK(tmc::waste(g, col) == 0);
  }
}

TEST_CASE("all-distinct fails on a path, reporting the first bad pair") {
  Graph p3(3, {{0, 1}, {1, 2}});
  auto verdict = tmc::is_tmc(p3, all_distinct(p3));
  CHECK_FALSE(verdict.ok);
  REQUIRE(verdict.failing_pair.has_value());
  CHECK(*verdict.failing_pair == std::pair<int, int>{0, 2});
}

TEST_CASE("star colored as one tree reaches n colors") {
  const int n = 5;
  std::vector<tmc::Edge> e;
  for (int v = 1; v < n; ++v) e.push_back({0, v});
  Graph star(n, e);
  ColorTree t = tmc::make_color_tree(star, e);
  CHECK(t.internal == 1);  // the hub
  CHECK(tmc::tree_waste(t) == (n - 1 - 1) + 1);
  auto col = tmc::coloring_from_collection(star, std::vector<ColorTree>{t});
  auto verdict = tmc::is_tmc(star, col);
  CHECK(verdict.ok);
  CHECK(tmc::count_colors(col) == n);
}

TEST_CASE("monochromatic path must have interior of the same color") {
  // P_4 with one color on all edges but a wrong-colored interior vertex.
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  TotalColoring col;
  col.edge_colors = {0, 0, 0};
  col.vertex_colors = {1, 0, 2, 3};  // vertex 2 breaks every x..3 path
  auto verdict = tmc::is_tmc(p4, col);
  CHECK_FALSE(verdict.ok);
  CHECK(*verdict.failing_pair == std::pair<int, int>{0, 3});
  col.vertex_colors = {1, 0, 0, 3};
  CHECK(tmc::is_tmc(p4, col).ok);
}

TEST_CASE("endpoint colors are unconstrained") {
  Graph p3(3, {{0, 1}, {1, 2}});
  TotalColoring col;
  col.edge_colors = {5, 5};
  col.vertex_colors = {0, 5, 2};  // only the interior vertex matters
  CHECK(tmc::is_tmc(p3, col).ok);
  CHECK(tmc::count_colors(col) == 3);
}

TEST_CASE("is_tmc validates its inputs") {
  Graph p3(3, {{0, 1}, {1, 2}});
  TotalColoring bad;
  bad.edge_colors = {0};
  bad.vertex_colors = {0, 1, 2};
  CHECK_THROWS_AS(tmc::is_tmc(p3, bad), std::invalid_argument);
  bad.edge_colors = {0, -1};
  CHECK_THROWS_AS(tmc::is_tmc(p3, bad), std::invalid_argument);
  Graph disc(3, {{0, 1}});
  TotalColoring col;
  col.edge_colors = {0};
  col.vertex_colors = {1, 2, 3};
  CHECK_THROWS_AS(tmc::is_tmc(disc, col), std::invalid_argument);
}

TEST_CASE("color_subgraphs groups edges and vertices by color") {
  Graph p3(3, {{0, 1}, {1, 2}});
  TotalColoring col;
  col.edge_colors = {7, 7};
  col.vertex_colors = {7, 7, 3};
  auto classes = tmc::color_subgraphs(p3, col);
  REQUIRE(classes.size() == 2);
  CHECK(classes.at(7).edges.size() == 2);
  CHECK(classes.at(7).vertices == 0b011);
  CHECK(classes.at(3).edges.empty());
  CHECK(classes.at(3).vertices == 0b100);
}

TEST_CASE("make_color_tree validates shape") {
  Graph k4 = complete(4);
  CHECK_THROWS_AS(tmc::make_color_tree(k4, {}), std::invalid_argument);
  CHECK_THROWS_AS(tmc::make_color_tree(k4, {{0, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(tmc::make_color_tree(k4, {{0, 1}, {1, 0}}), std::invalid_argument);
  // Cycle.
  CHECK_THROWS_AS(tmc::make_color_tree(k4, {{0, 1}, {1, 2}, {0, 2}}), std::invalid_argument);
  Graph two_paths(4, {{0, 1}, {2, 3}, {1, 2}});
  // Disconnected edge set within a connected host.
  CHECK_THROWS_AS(tmc::make_color_tree(two_paths, {{0, 1}, {2, 3}}), std::invalid_argument);

  ColorTree t = tmc::make_color_tree(k4, {{2, 3}, {1, 2}});
  CHECK(t.vertices == 0b1110);
  CHECK(t.internal == 0b0100);
  CHECK(t.edges == std::vector<tmc::Edge>{{1, 2}, {2, 3}});
  CHECK(tmc::tree_waste(t) == 2);

  ColorTree single = tmc::make_color_tree(k4, {{0, 1}});
  CHECK(tmc::tree_waste(single) == 0);
}

TEST_CASE("collection feasibility diagnostics") {
  Graph k4 = complete(4);
  auto tree = [&](std::vector<tmc::Edge> e) { return tmc::make_color_tree(k4, std::move(e)); };

  std::vector<ColorTree> ok = {tree({{0, 1}, {1, 2}})};
  CHECK_FALSE(tmc::collection_infeasibility(k4, ok).has_value());

  std::vector<ColorTree> tiny = {tree({{0, 1}})};
  auto reason = tmc::collection_infeasibility(k4, tiny);
  REQUIRE(reason.has_value());
  CHECK(reason->find("fewer than two edges") != std::string::npos);

  std::vector<ColorTree> shared_edge = {tree({{0, 1}, {1, 2}}), tree({{1, 2}, {2, 3}})};
  reason = tmc::collection_infeasibility(k4, shared_edge);
  REQUIRE(reason.has_value());
  CHECK(reason->find("share an edge") != std::string::npos);

  // Edge-disjoint trees that both use vertex 1 internally.
  Graph k5 = complete(5);
  std::vector<ColorTree> shared_internal = {tmc::make_color_tree(k5, {{0, 1}, {1, 2}}),
                                            tmc::make_color_tree(k5, {{1, 3}, {1, 4}})};
  reason = tmc::collection_infeasibility(k5, shared_internal);
  REQUIRE(reason.has_value());
  CHECK(reason->find("share an internal vertex") != std::string::npos);

  Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  std::vector<ColorTree> uncovered = {tmc::make_color_tree(p5, {{0, 1}, {1, 2}})};
  reason = tmc::collection_infeasibility(p5, uncovered);
  REQUIRE(reason.has_value());
  CHECK(reason->find("not covered") != std::string::npos);
  CHECK(reason->find("(0, 3)") != std::string::npos);
}

TEST_CASE("simple mode additionally limits vertex sharing") {
  Graph k4 = complete(4);
  // Two cherries sharing both endpoints 0 and 2, internally disjoint.
  std::vector<ColorTree> two = {tmc::make_color_tree(k4, {{0, 1}, {1, 2}}),
                                tmc::make_color_tree(k4, {{0, 3}, {3, 2}})};
  CHECK_FALSE(tmc::collection_infeasibility(k4, two, false).has_value());
  auto reason = tmc::collection_infeasibility(k4, two, true);
  REQUIRE(reason.has_value());
  CHECK(reason->find("more than one vertex") != std::string::npos);
}

TEST_CASE("coloring_from_collection colors trees then the rest fresh") {
  Graph k4 = complete(4);
  auto col = tmc::coloring_from_collection(k4, std::vector<ColorTree>{});
  CHECK(tmc::count_colors(col) == 10);  // all distinct
  CHECK(tmc::is_tmc(k4, col).ok);

  // K_6 minus a perfect matching, covered by one double star.
  std::vector<tmc::Edge> e;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (!(v == u + 1 && u % 2 == 0)) e.push_back({u, v});
  Graph g(6, e);
  REQUIRE(g.size() == 12);
  ColorTree ds = tmc::make_color_tree(g, {{0, 2}, {1, 2}, {0, 3}, {0, 4}, {0, 5}});
  auto col2 = tmc::coloring_from_collection(g, std::vector<ColorTree>{ds});
  CHECK(tmc::count_colors(col2) == 12);
  CHECK(tmc::is_tmc(g, col2).ok);
  CHECK(tmc::waste(g, col2) == 6);

  // Unfeasible input throws with the reason attached.
  std::vector<ColorTree> tiny = {tmc::make_color_tree(g, {{0, 2}})};
  CHECK_THROWS_WITH_AS(tmc::coloring_from_collection(g, tiny),
                       doctest::Contains("fewer than two edges"),
                       std::invalid_argument);
}

TEST_CASE("is_tmc agrees with the reference search on random colorings") {
  std::mt19937 rng(31337);
  int checked = 0;
  while (checked < 400) {
    int n = 3 + static_cast<int>(rng() % 4);
    std::vector<tmc::Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3) e.push_back({u, v});
    Graph g(n, e);
    if (!g.is_connected()) continue;
    int palette = 1 + static_cast<int>(rng() % (g.size() + n));
    TotalColoring col;
    for (int i = 0; i < g.size(); ++i)
      col.edge_colors.push_back(static_cast<int>(rng() % palette));
    for (int v = 0; v < n; ++v)
      col.vertex_colors.push_back(static_cast<int>(rng() % palette));
    CHECK(tmc::is_tmc(g, col).ok == oracle::is_tmc(g, col));
    ++checked;
  }
}
