#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tmc/graph.hpp"

namespace tmc {

struct CensusRecord {
  std::string g6;  // canonically labeled representative
  int m = 0;
  int l = 0;    // maximum spanning-tree leaves
  int tmc = 0;  // exact value
  GraphPredicateReport pred;
};

struct CensusAggregate {
  int m = 0;
  int count = 0;
  int min_tmc = 0;
  int max_tmc = 0;
  std::string argmin_g6;  // first representative attaining min_tmc
};

struct TmcCensus {
  int n = 0;
  int solver_version = 0;
  std::vector<CensusRecord> records;     // sorted by (m, canonical form)
  std::vector<CensusAggregate> by_size;  // ascending m
};

struct CensusOptions {
  bool allow_large = false;  // order 8 is refused without this
  int jobs = 1;
  // Cache directory; empty falls back to the TMC_CACHE_DIR environment
  // variable, and no caching happens when both are empty.
  std::string cache_dir;
  std::function<void(int done, int total)> progress;
};

// Every connected graph of order n (3 <= n <= 8) with its exact value.
TmcCensus build_census(int n, const CensusOptions& opts = {});

void save_census(const TmcCensus& census, const std::string& path);
TmcCensus load_census(const std::string& path);

// Least m such that every census graph with at least m edges has value >= k
// (n - 1 when even the sparsest do).
int empirical_f(const TmcCensus& census, int k);

// Largest m such that every census graph with m edges has value <= k;
// nullopt when no m qualifies (exactly the k below n, where stars and their
// supergraphs overshoot).
std::optional<int> empirical_g(const TmcCensus& census, int k);

// T2: graphs meeting any spanning-tree-tightness condition have value
//     m - n + 2 + l exactly.
// T3: the closed form f agrees with the census threshold for every k.
// T4: the closed form g agrees with the census threshold for every k,
//     including where it is undefined.
// L_GTS, L_GNT, L_MULTI, L_GSTAR: the generated families hit their
//     predicted values exactly.
// L_LOWER: every census record respects the universal bounds.
enum class TheoremId { T2, T3, T4, L_GTS, L_GNT, L_MULTI, L_GSTAR, L_LOWER };

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

struct TheoremRow {
  std::string label;
  long long expected = 0;  // -1 encodes "undefined"
  long long actual = 0;
  bool match = false;
  std::string counterexample_g6;  // set on mismatch when a graph witnesses it
};

struct TheoremReport {
  TheoremId id = TheoremId::T2;
  int n = 0;
  std::vector<TheoremRow> rows;
  long long checked = 0;
  long long mismatches = 0;
  bool pass = false;
};

// Runs one theorem's empirical check at order n.  A prebuilt census for the
// same n and solver version skips the rebuild; family checks ignore it.
TheoremReport check_theorem(TheoremId id, int n, const CensusOptions& opts = {},
                            const TmcCensus* prebuilt = nullptr);

}  // namespace tmc
