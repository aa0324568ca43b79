#include "tmc/graph6.hpp"

#include <vector>

namespace tmc {

namespace {

constexpr std::string_view kMarker = ">>graph6<<";

int body_chars(int n) { return (n * (n - 1) / 2 + 5) / 6; }

int byte_value(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126)
    throw graph6_error(Graph6ErrorKind::invalid_byte,
                       "byte outside graph6 range [63, 126]");
  return u - 63;
}

}  // namespace

Graph graph6_decode(std::string_view line) {
  if (line.substr(0, kMarker.size()) == kMarker) line.remove_prefix(kMarker.size());
  if (line.empty())
    throw graph6_error(Graph6ErrorKind::malformed_length, "empty graph6 line");

  std::size_t pos = 0;
  long long n;
  if (line[0] == '~') {
    if (line.size() >= 2 && line[1] == '~')
      throw graph6_error(Graph6ErrorKind::bad_order,
                         "graph6 order beyond supported range [1, 64]");
    if (line.size() < 4)
      throw graph6_error(Graph6ErrorKind::malformed_length,
                         "truncated graph6 long-form order");
    n = 0;
    for (int i = 1; i <= 3; ++i) n = n * 64 + byte_value(line[i]);
    pos = 4;
  } else {
    n = byte_value(line[0]);
    pos = 1;
  }
  if (n < 1 || n > kMaxOrder)
    throw graph6_error(Graph6ErrorKind::bad_order,
                       "graph6 order outside supported range [1, 64]");

  const int need = body_chars(static_cast<int>(n));
  const long long have = static_cast<long long>(line.size()) - static_cast<long long>(pos);
  if (have < need)
    throw graph6_error(Graph6ErrorKind::malformed_length,
                       "graph6 body shorter than the order requires");
  if (have > need)
    throw graph6_error(Graph6ErrorKind::trailing_garbage,
                       "trailing characters after graph6 body");

  std::vector<Edge> edges;
  int bit = 0;  // index into the column-major upper-triangle bit stream
  int cur = 0;  // current 6-bit group
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (bit % 6 == 0) cur = byte_value(line[pos + bit / 6]);
      if ((cur >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
      ++bit;
    }
  }
  if (bit % 6 != 0) {
    const int pad = 6 - bit % 6;
    if (cur & ((1 << pad) - 1))
      throw graph6_error(Graph6ErrorKind::nonzero_padding,
                         "nonzero padding bits in graph6 body");
  }
  return Graph(static_cast<int>(n), edges);
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int cur = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      cur = (cur << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + cur));
        cur = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(63 + (cur << (6 - filled))));
  return out;
}

}  // namespace tmc
