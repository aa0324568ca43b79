#pragma once

#include <span>
#include <vector>

#include "tmc/graph.hpp"

namespace tmc {

enum class Family { GTS, GNT, GSTAR, MULTIPARTITE, COMPLETE, STAR, PATH };

const char* family_name(Family f);

struct FamilyParams {
  int n = 0;
  int t = 0;
  int s = 0;
  int p = 0;
  int extra = 0;
  std::vector<int> parts;  // multipartite only
};

struct FamilyInstance {
  Graph graph;
  long long predicted_tmc = 0;
  Family family = Family::COMPLETE;
  FamilyParams params;
};

// Complete multipartite graph; parts are consecutive vertex blocks in the
// given order.  Every part size must be positive.
Graph complete_multipartite(std::span<const int> parts);

// K_{t+1} on {0, 1, 2..t} with the edge {0,1} replaced by the path
// 0, t+1, ..., n-1, 1 of n-t edges, minus the s edges (0,2)..(0,s+1).
// Requires 2 <= t <= n-2 and 0 <= s <= t-1.  m = n + C(t,2) - 1 - s and the
// value is m - n + 2 + t (the spanning-tree bound, met with equality).
FamilyInstance gen_gts(int n, int t, int s);

// K_n minus p edges, n/2 < p < n-2: vertices split into n-p-1 pairs plus one
// class of size t = 2(p+1)-n (labeled last), and each class loses the star
// from its first vertex to the rest of the class.  m = C(n,2) - p and the
// value equals m.
FamilyInstance gen_gnt(int n, int p);

// The t = 3 member for odd n >= 5 with p = (n+1)/2, reaching m = C(n,2) - p
// one edge below gen_gnt's range.  Value m.
FamilyInstance gen_gnt3(int n);

// Complete split-like graph: n-t singletons 0..n-t-1 plus an independent
// part {n-t..n-1} of size t, with `extra` lexicographically first edges
// added inside that part.  Requires 2 <= t <= n-1, 0 <= extra <= t-2.
// m = C(n-t,2) + t(n-t) + extra and the value is m + n - t.
FamilyInstance gen_gstar(int n, int t, int extra);

// Complete multipartite with part sizes non-increasing, r >= 2 parts, t of
// them of size >= 2.  Value m + r - t.
FamilyInstance gen_multipartite(std::span<const int> parts);

FamilyInstance gen_complete(int n);  // value m + n
FamilyInstance gen_star(int n);      // n >= 3; value n
FamilyInstance gen_path(int n);      // n >= 2; value 3

}  // namespace tmc
