#include "tmc/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace tmc {

namespace {

// Upper-triangle pairs in column order: (0,1), (0,2), (1,2), (0,3), ...
// Bit k of a code is pair k, stored at numeric position total-1-k so that
// numeric comparison of codes equals lexicographic comparison of bit strings.

uint64_t code_under_order(const Graph& g, const int* order, int n) {
  uint64_t acc = 0;
  for (int v = 1; v < n; ++v) {
    uint64_t nb = g.neighbors(order[v]);
    for (int u = 0; u < v; ++u) acc = (acc << 1) | ((nb >> order[u]) & 1);
  }
  return acc;
}

struct Canonicalizer {
  const Graph* g = nullptr;
  int n = 0;
  int total = 0;  // n*(n-1)/2 bits, fits uint64 for n <= 10
  uint64_t best = 0;
  std::array<int, 10> order{};
  std::array<int, 10> cand{};
  uint64_t used = 0;

  void run() {
    n = g->order();
    total = n * (n - 1) / 2;
    for (int v = 0; v < n; ++v) cand[v] = v;
    std::stable_sort(cand.begin(), cand.begin() + n,
                     [&](int a, int b) { return g->degree(a) < g->degree(b); });
    int identity[10];
    for (int v = 0; v < n; ++v) identity[v] = v;
    best = code_under_order(*g, identity, n);
    used = 0;
    dfs(0, 0, 0);
  }

  void dfs(int depth, uint64_t acc, int bits) {
    if (depth == n) {
      if (acc < best) best = acc;
      return;
    }
    for (int idx = 0; idx < n; ++idx) {
      int v = cand[idx];
      if ((used >> v) & 1) continue;
      uint64_t col = 0;
      uint64_t nb = g->neighbors(v);
      for (int i = 0; i < depth; ++i) col = (col << 1) | ((nb >> order[i]) & 1);
      uint64_t acc2 = (acc << depth) | col;
      int bits2 = bits + depth;
      if (acc2 > (best >> (total - bits2))) continue;
      order[depth] = v;
      used |= uint64_t{1} << v;
      dfs(depth + 1, acc2, bits2);
      used &= ~(uint64_t{1} << v);
    }
  }
};

uint64_t canonical_code(const Graph& g) {
  Canonicalizer c;
  c.g = &g;
  c.run();
  return c.best;
}

std::string pack_code(int n, uint64_t code) {
  int total = n * (n - 1) / 2;
  std::string out;
  out.push_back(static_cast<char>(n));
  int nbytes = (total + 7) / 8;
  for (int b = 0; b < nbytes; ++b) {
    unsigned byte = 0;
    for (int i = 0; i < 8; ++i) {
      int k = b * 8 + i;
      if (k < total) byte |= static_cast<unsigned>((code >> (total - 1 - k)) & 1) << (7 - i);
    }
    out.push_back(static_cast<char>(byte));
  }
  return out;
}

Graph graph_from_bits(int n, uint64_t code) {
  int total = n * (n - 1) / 2;
  std::vector<Edge> edges;
  int k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if ((code >> (total - 1 - k)) & 1) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.order() > 10)
    throw std::invalid_argument("canonical_form: order above 10 is not supported");
  return pack_code(g.order(), canonical_code(g));
}

Graph graph_from_code(const std::string& code) {
  if (code.empty()) throw std::invalid_argument("graph code is empty");
  int n = static_cast<unsigned char>(code[0]);
  if (n < 1 || n > 10) throw std::invalid_argument("graph code has a bad order byte");
  int total = n * (n - 1) / 2;
  if (static_cast<int>(code.size()) != 1 + (total + 7) / 8)
    throw std::invalid_argument("graph code has a bad length");
  uint64_t bits = 0;
  for (int k = 0; k < total; ++k) {
    unsigned byte = static_cast<unsigned char>(code[1 + k / 8]);
    bits = (bits << 1) | ((byte >> (7 - k % 8)) & 1);
  }
  return graph_from_bits(n, bits);
}

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("enumerate_connected: order must be between 1 and 8");
  // Every connected graph on k vertices has a vertex whose removal keeps it
  // connected, so extending connected (k-1)-graphs by one vertex with a
  // nonempty neighborhood reaches every class.
  std::vector<uint64_t> codes = {0};
  for (int k = 2; k <= n; ++k) {
    std::set<uint64_t> next;
    for (uint64_t rc : codes) {
      Graph base = graph_from_bits(k - 1, rc);
      std::vector<Edge> edges = base.edge_list();
      size_t base_count = edges.size();
      for (uint32_t mask = 1; mask < (uint32_t{1} << (k - 1)); ++mask) {
        edges.resize(base_count);
        for (int u = 0; u < k - 1; ++u)
          if ((mask >> u) & 1) edges.emplace_back(u, k - 1);
        next.insert(canonical_code(Graph(k, edges)));
      }
    }
    codes.assign(next.begin(), next.end());
  }
  std::vector<std::pair<std::pair<int, uint64_t>, uint64_t>> keyed;
  keyed.reserve(codes.size());
  for (uint64_t c : codes) keyed.push_back({{std::popcount(c), c}, c});
  std::sort(keyed.begin(), keyed.end());
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (auto& kc : keyed) out.push_back(graph_from_bits(n, kc.second));
  return out;
}

}  // namespace tmc
