#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tmc {

inline constexpr int kMaxOrder = 64;

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Adjacency is one 64-bit
// neighbor mask per vertex, so n is capped at 64.
class Graph {
 public:
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const { return n_; }
  int size() const { return m_; }

  bool has_edge(int u, int v) const {
    return u != v && (adj_[u] >> v) & 1ULL;
  }
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;
  int max_degree() const;
  std::uint64_t vertex_mask() const;

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edge_list() const;

  Graph complement() const;
  bool is_connected() const;

  // Vertices reachable from v when traversal is confined to `within`.
  std::uint64_t reachable(int v, std::uint64_t within) const;
  bool induced_connected(std::uint64_t mask) const;

  // Relabeled copy: vertex v becomes perm[v].
  Graph permuted(std::span<const int> perm) const;

  bool operator==(const Graph& other) const;

 private:
  void add_edge_checked(int u, int v);

  int n_;
  int m_;
  std::array<std::uint64_t, kMaxOrder> adj_;
};

// One flag per condition of the tmc = m-n+2+l equality test, plus the
// plumbing predicates they are built from. has_cut_vertex is only
// meaningful for connected inputs and reads false otherwise.
struct GraphPredicateReport {
  bool connected = false;
  bool k3_free = false;
  std::optional<int> diameter;  // empty iff disconnected
  bool has_cut_vertex = false;
  int max_degree = 0;
  bool complement_4_connected = false;
  bool degree_condition_applicable = false;  // needs n >= 4
  // max_degree * (n-3) < n*n - 2m - 3, evaluated in exact integers.
  bool degree_condition = false;
  bool theorem2_applicable = false;
};

GraphPredicateReport predicates(const Graph& g);

// Exhaustive vertex-cut check; intended for small k (we only need k = 4).
bool vertex_connectivity_at_least(const Graph& g, int k);

}  // namespace tmc
