#include "tmc/formulas.hpp"

#include <stdexcept>
#include <string>

namespace tmc {

namespace {

long long choose2(long long x) { return x >= 2 ? x * (x - 1) / 2 : 0; }

void check_domain(int n, int k) {
  if (n < 3) throw std::invalid_argument("formulas need n >= 3");
  long long top = choose2(n) + n;
  if (k < 3 || k > top)
    throw std::invalid_argument("k must lie in [3, " + std::to_string(top) +
                                "] for n = " + std::to_string(n));
}

}  // namespace

FormulaResult f_eval(int n, int k) {
  check_domain(n, k);
  long long c = choose2(n);
  FormulaResult out;
  out.n = n;
  out.k = k;
  if (k == 3) {
    out.case_id = 1;
    out.value = n - 1;
    return out;
  }
  if (k <= c - n + 3) {
    // Bands [C(t,2)+3, C(t,2)+t+2] tile [4, C(n-2,2)+n] = [4, C-n+3].
    int t = 2;
    while (choose2(t) + t + 2 < k) ++t;
    int s = static_cast<int>(choose2(t) + t + 2 - k);
    if (t > n - 2 || s < 0 || s > t - 1)
      throw std::logic_error("f_eval: band selection failed");
    out.case_id = 2;
    out.t = t;
    out.s = s;
    out.value = static_cast<long long>(n) + k - t - 2;
    return out;
  }
  if (n % 2 == 1 && k == c + n - 3 * (n / 2)) {
    out.case_id = 4;
    out.r = n / 2;
    out.value = c - n / 2;
    return out;
  }
  if (k <= c + n - 3 * (n / 2)) {
    out.case_id = 3;
    out.value = k;
    return out;
  }
  int r = static_cast<int>((c + n - k) / 3);
  if (r < 0 || r > n / 2 - 1) throw std::logic_error("f_eval: band selection failed");
  out.case_id = 4;
  out.r = r;
  out.value = c - r;
  return out;
}

std::optional<FormulaResult> g_eval(int n, int k) {
  check_domain(n, k);
  if (k < n) return std::nullopt;
  long long c = choose2(n);
  FormulaResult out;
  out.n = n;
  out.k = k;
  if (k == c + n) {
    out.case_id = 4;
    out.value = c;
    return out;
  }
  if (k == c + n - 1) {
    out.case_id = 3;
    out.value = c - 1;
    return out;
  }
  // Bands of width t, descending in t, tile [n, C(n,2)+n-2].
  for (int t = n - 1; t >= 2; --t) {
    long long lo = choose2(n - t) + static_cast<long long>(t) * (n - t - 1) + n;
    long long hi = choose2(n - t) + static_cast<long long>(t) * (n - t) + n - 1;
    if (k < lo || k > hi) continue;
    out.t = t;
    if (k < hi) {
      out.case_id = 1;
      out.value = static_cast<long long>(k) - n + t;
    } else {
      out.case_id = 2;
      out.value = static_cast<long long>(k) - n + t - 1;
    }
    return out;
  }
  throw std::logic_error("g_eval: band selection failed");
}

std::vector<FormulaResult> f_table(int n) {
  std::vector<FormulaResult> out;
  long long top = choose2(n) + n;
  for (int k = 3; k <= top; ++k) out.push_back(f_eval(n, k));
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i].value < out[i - 1].value) throw std::logic_error("f_table: not non-decreasing");
  return out;
}

std::vector<FormulaResult> g_table(int n) {
  if (n < 3) throw std::invalid_argument("formulas need n >= 3");
  std::vector<FormulaResult> out;
  long long top = choose2(n) + n;
  for (int k = n; k <= top; ++k) {
    auto r = g_eval(n, k);
    if (!r) throw std::logic_error("g_table: undefined inside the domain");
    out.push_back(*r);
  }
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i].value < out[i - 1].value) throw std::logic_error("g_table: not non-decreasing");
  return out;
}

}  // namespace tmc
