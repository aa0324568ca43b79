#include "tmc/graph.hpp"

#include <bit>
#include <stdexcept>

namespace tmc {

Graph::Graph(int n) : n_(n), m_(0), adj_{} {
  if (n < 1 || n > kMaxOrder)
    throw std::invalid_argument("graph order must be in [1, 64]");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge_checked(u, v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::add_edge_checked(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (has_edge(u, v)) throw std::invalid_argument("duplicate edge rejected");
  adj_[u] |= 1ULL << v;
  adj_[v] |= 1ULL << u;
  ++m_;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::uint64_t Graph::vertex_mask() const {
  return n_ == 64 ? ~0ULL : (1ULL << n_) - 1;
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> edges;
  edges.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    std::uint64_t rest = adj_[u] & ~((u == 63) ? ~0ULL : ((1ULL << (u + 1)) - 1));
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      edges.emplace_back(u, v);
    }
  }
  return edges;
}

Graph Graph::complement() const {
  Graph c(n_);
  const std::uint64_t all = vertex_mask();
  for (int v = 0; v < n_; ++v) c.adj_[v] = all & ~adj_[v] & ~(1ULL << v);
  c.m_ = n_ * (n_ - 1) / 2 - m_;
  return c;
}

std::uint64_t Graph::reachable(int v, std::uint64_t within) const {
  std::uint64_t seen = (1ULL << v) & within;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f;) {
      int u = std::countr_zero(f);
      f &= f - 1;
      next |= adj_[u] & within;
    }
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool Graph::induced_connected(std::uint64_t mask) const {
  if (std::popcount(mask) <= 1) return true;
  int start = std::countr_zero(mask);
  return reachable(start, mask) == mask;
}

bool Graph::is_connected() const { return induced_connected(vertex_mask()); }

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("permutation size mismatch");
  std::uint64_t seen = 0;
  for (int v : perm) {
    if (v < 0 || v >= n_ || (seen >> v) & 1ULL)
      throw std::invalid_argument("not a permutation");
    seen |= 1ULL << v;
  }
  Graph out(n_);
  for (const auto& [u, v] : edge_list()) out.add_edge_checked(perm[u], perm[v]);
  return out;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_ || m_ != other.m_) return false;
  for (int v = 0; v < n_; ++v)
    if (adj_[v] != other.adj_[v]) return false;
  return true;
}

namespace {

// Max over vertices of BFS eccentricity; caller guarantees connectivity.
int diameter_of(const Graph& g) {
  int best = 0;
  const std::uint64_t all = g.vertex_mask();
  for (int s = 0; s < g.order(); ++s) {
    std::uint64_t seen = 1ULL << s;
    std::uint64_t frontier = seen;
    int depth = 0;
    while (seen != all) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f;) {
        int u = std::countr_zero(f);
        f &= f - 1;
        next |= g.neighbors(u);
      }
      next &= ~seen;
      seen |= next;
      frontier = next;
      ++depth;
    }
    best = std::max(best, depth);
  }
  return best;
}

bool cut_subsets_keep_connected(const Graph& g, std::uint64_t removed,
                                int next, int left) {
  if (left == 0) return g.induced_connected(g.vertex_mask() & ~removed);
  for (int v = next; v < g.order(); ++v) {
    if (!cut_subsets_keep_connected(g, removed | (1ULL << v), v + 1, left - 1))
      return false;
  }
  return true;
}

}  // namespace

bool vertex_connectivity_at_least(const Graph& g, int k) {
  if (k <= 0) return true;
  if (g.order() < k + 1) return false;
  if (!g.is_connected()) return false;
  for (int s = 1; s < k; ++s) {
    if (!cut_subsets_keep_connected(g, 0, 0, s)) return false;
  }
  return true;
}

GraphPredicateReport predicates(const Graph& g) {
  const int n = g.order();
  const int m = g.size();
  GraphPredicateReport r;
  r.connected = g.is_connected();
  r.max_degree = g.max_degree();

  r.k3_free = true;
  for (const auto& [u, v] : g.edge_list()) {
    if (g.neighbors(u) & g.neighbors(v)) {
      r.k3_free = false;
      break;
    }
  }

  if (r.connected) r.diameter = diameter_of(g);

  if (r.connected && n >= 3) {
    for (int v = 0; v < n && !r.has_cut_vertex; ++v) {
      if (!g.induced_connected(g.vertex_mask() & ~(1ULL << v)))
        r.has_cut_vertex = true;
    }
  }

  r.degree_condition_applicable = n >= 4;
  if (r.degree_condition_applicable) {
    r.degree_condition = static_cast<long long>(r.max_degree) * (n - 3) <
                         static_cast<long long>(n) * n - 2LL * m - 3;
  }

  r.complement_4_connected = vertex_connectivity_at_least(g.complement(), 4);

  const bool diam_at_least_3 = r.diameter && *r.diameter >= 3;
  r.theorem2_applicable =
      r.complement_4_connected || r.k3_free ||
      (r.degree_condition_applicable && r.degree_condition) ||
      diam_at_least_3 || r.has_cut_vertex;
  return r;
}

}  // namespace tmc
