#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "tmc/graph.hpp"

using tmc::Graph;

namespace {

Graph path(int n) {
  Graph g(n);
  std::vector<tmc::Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph(n, e);
}

Graph cycle(int n) {
  std::vector<tmc::Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  e.push_back({0, n - 1});
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<tmc::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, e);
}

Graph petersen() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                    {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                    {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

}  // namespace

TEST_CASE("construction validates order and edges") {
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  CHECK_NOTHROW(Graph(64));
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("basic accessors") {
  Graph g(4, {{2, 0}, {1, 3}, {0, 1}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK_FALSE(g.has_edge(1, 1));
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(3) == 1);
  CHECK(g.max_degree() == 2);
  CHECK(g.vertex_mask() == 0b1111);
  CHECK(g.neighbors(0) == 0b0110);

  auto edges = g.edge_list();
  REQUIRE(edges.size() == 3);
  CHECK(std::is_sorted(edges.begin(), edges.end()));
  CHECK(edges[0] == tmc::Edge{0, 1});
  CHECK(edges[1] == tmc::Edge{0, 2});
  CHECK(edges[2] == tmc::Edge{1, 3});
}

TEST_CASE("complement is an involution and sizes add up") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    std::vector<tmc::Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) e.push_back({u, v});
    Graph g(n, e);
    Graph gc = g.complement();
    CHECK(g.size() + gc.size() == n * (n - 1) / 2);
    CHECK(gc.complement() == g);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        CHECK(g.has_edge(u, v) != gc.has_edge(u, v));
  }
}

TEST_CASE("connectivity and reachability") {
  CHECK(path(6).is_connected());
  CHECK(complete(5).is_connected());
  CHECK(Graph(1).is_connected());
  CHECK_FALSE(Graph(2).is_connected());
  CHECK_FALSE(Graph(4, {{0, 1}, {2, 3}}).is_connected());

  Graph g = path(5);
  CHECK(g.reachable(0, g.vertex_mask()) == 0b11111);
  CHECK(g.reachable(0, 0b00111) == 0b00111);
  CHECK(g.reachable(4, 0b11011) == 0b11000);  // the gap at 2 cuts the path
  CHECK(g.induced_connected(0b00111));
  CHECK_FALSE(g.induced_connected(0b10101));
  CHECK(g.induced_connected(0b00001));
}

TEST_CASE("permuted relabels edges") {
  Graph g = path(4);
  int perm[] = {3, 1, 0, 2};
  Graph h = g.permuted(perm);
  CHECK(h.size() == 3);
  CHECK(h.has_edge(3, 1));
  CHECK(h.has_edge(1, 0));
  CHECK(h.has_edge(0, 2));
  int ident[] = {0, 1, 2, 3};
  CHECK(g.permuted(ident) == g);
  int bad[] = {0, 1, 2, 2};
  CHECK_THROWS_AS(g.permuted(bad), std::invalid_argument);
  int small[] = {0, 1};
  CHECK_THROWS_AS(g.permuted(small), std::invalid_argument);
}

TEST_CASE("predicates on canonical small graphs") {
  auto p4 = tmc::predicates(path(4));
  CHECK(p4.connected);
  CHECK(p4.k3_free);
  CHECK(p4.diameter == 3);
  CHECK(p4.has_cut_vertex);
  CHECK(p4.max_degree == 2);
  CHECK_FALSE(p4.complement_4_connected);
  CHECK(p4.theorem2_applicable);  // triangle-free, diameter 3, cut vertex

  auto c4 = tmc::predicates(cycle(4));
  CHECK(c4.k3_free);
  CHECK(c4.diameter == 2);
  CHECK_FALSE(c4.has_cut_vertex);
  CHECK(c4.degree_condition_applicable);
  // 2*(4-3) = 2 < 16 - 8 - 3 = 5
  CHECK(c4.degree_condition);
  CHECK(c4.theorem2_applicable);

  auto k5 = tmc::predicates(complete(5));
  CHECK(k5.connected);
  CHECK_FALSE(k5.k3_free);
  CHECK(k5.diameter == 1);
  CHECK_FALSE(k5.has_cut_vertex);
  CHECK_FALSE(k5.complement_4_connected);  // complement is empty
  // 4*2 = 8 >= 25 - 20 - 3 = 2
  CHECK_FALSE(k5.degree_condition);
  CHECK_FALSE(k5.theorem2_applicable);

  auto pet = tmc::predicates(petersen());
  CHECK(pet.connected);
  CHECK(pet.k3_free);
  CHECK(pet.diameter == 2);
  CHECK_FALSE(pet.has_cut_vertex);
  // Complement of Petersen is the Johnson graph J(5,2), 6-regular and
  // 6-connected.
  CHECK(pet.complement_4_connected);
  // 3*7 = 21 < 100 - 30 - 3 = 67
  CHECK(pet.degree_condition);
  CHECK(pet.theorem2_applicable);

  auto disc = tmc::predicates(Graph(4, {{0, 1}, {2, 3}}));
  CHECK_FALSE(disc.connected);
  CHECK_FALSE(disc.diameter.has_value());
  CHECK_FALSE(disc.has_cut_vertex);
}

TEST_CASE("diameter values on paths and cycles") {
  for (int n = 2; n <= 8; ++n) {
    CHECK(tmc::predicates(path(n)).diameter == n - 1);
    if (n >= 3) CHECK(tmc::predicates(cycle(n)).diameter == n / 2);
  }
  CHECK(tmc::predicates(Graph(1)).diameter == 0);
}

TEST_CASE("cut vertices") {
  CHECK(tmc::predicates(path(3)).has_cut_vertex);
  CHECK_FALSE(tmc::predicates(cycle(5)).has_cut_vertex);
  CHECK_FALSE(tmc::predicates(complete(4)).has_cut_vertex);
  // Two triangles sharing vertex 2.
  Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(tmc::predicates(bowtie).has_cut_vertex);
  CHECK_FALSE(tmc::predicates(Graph(2, {{0, 1}})).has_cut_vertex);
}

TEST_CASE("vertex connectivity threshold") {
  CHECK(tmc::vertex_connectivity_at_least(complete(5), 4));
  CHECK_FALSE(tmc::vertex_connectivity_at_least(complete(5), 5));  // kappa(K_n) = n-1
  CHECK_FALSE(tmc::vertex_connectivity_at_least(cycle(6), 3));
  CHECK(tmc::vertex_connectivity_at_least(cycle(6), 2));
  CHECK_FALSE(tmc::vertex_connectivity_at_least(path(4), 2));
  CHECK_FALSE(tmc::vertex_connectivity_at_least(Graph(4, {{0, 1}, {2, 3}}), 1));
  CHECK(tmc::vertex_connectivity_at_least(petersen(), 3));
  CHECK_FALSE(tmc::vertex_connectivity_at_least(petersen(), 4));
}

TEST_CASE("degree condition boundary is strict") {
  // n = 6 with max degree 5: the inequality 5*3 < 33 - 2m flips between
  // m = 8 (15 < 17) and m = 9 (15 < 15 fails).
  Graph at_boundary(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                        {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  Graph below(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                  {1, 2}, {2, 3}, {3, 4}});
  CHECK_FALSE(tmc::predicates(at_boundary).degree_condition);
  CHECK(tmc::predicates(below).degree_condition);

  // Stars satisfy it for every n >= 4: (n-1)(n-3) < n^2 - 2(n-1) - 3.
  for (int n = 4; n <= 12; ++n) {
    std::vector<tmc::Edge> e;
    for (int v = 1; v < n; ++v) e.push_back({0, v});
    CHECK(tmc::predicates(Graph(n, e)).degree_condition);
  }
}
