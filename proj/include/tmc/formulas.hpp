#pragma once

#include <optional>
#include <vector>

namespace tmc {

struct FormulaResult {
  int n = 0;
  int k = 0;
  long long value = 0;
  int case_id = 0;
  std::optional<int> t;
  std::optional<int> s;
  std::optional<int> r;
};

// Minimum edge count forcing value >= k: the least m such that every
// connected graph of order n with at least m edges reaches k colors.
// Piecewise over k in [3, C(n,2) + n]; n >= 3.
FormulaResult f_eval(int n, int k);

// Largest m such that every connected graph of order n with m edges stays
// within k colors.  Defined for k in [n, C(n,2) + n]; below n no m
// qualifies (a star, or any graph containing one, exceeds k), so nullopt.
// k outside [3, C(n,2) + n] is an error.
std::optional<FormulaResult> g_eval(int n, int k);

std::vector<FormulaResult> f_table(int n);  // k = 3 .. C(n,2) + n
std::vector<FormulaResult> g_table(int n);  // k = n .. C(n,2) + n

}  // namespace tmc
