#include "tmc/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "tmc/canonical.hpp"
#include "tmc/families.hpp"
#include "tmc/formulas.hpp"
#include "tmc/graph6.hpp"
#include "tmc/solve.hpp"
#include "tmc/spanning.hpp"

namespace tmc {

namespace {

using nlohmann::json;

constexpr const char* kMagic = "tmc-census";
constexpr int kFormat = 1;

long long choose2(long long x) { return x >= 2 ? x * (x - 1) / 2 : 0; }

json pred_to_json(const GraphPredicateReport& p) {
  json j;
  j["connected"] = p.connected;
  j["k3_free"] = p.k3_free;
  if (p.diameter) j["diameter"] = *p.diameter;
  else j["diameter"] = nullptr;
  j["has_cut_vertex"] = p.has_cut_vertex;
  j["max_degree"] = p.max_degree;
  j["complement_4_connected"] = p.complement_4_connected;
  j["degree_condition_applicable"] = p.degree_condition_applicable;
  j["degree_condition"] = p.degree_condition;
  j["theorem2_applicable"] = p.theorem2_applicable;
  return j;
}

GraphPredicateReport pred_from_json(const json& j) {
  GraphPredicateReport p;
  p.connected = j.at("connected").get<bool>();
  p.k3_free = j.at("k3_free").get<bool>();
  if (!j.at("diameter").is_null()) p.diameter = j.at("diameter").get<int>();
  p.has_cut_vertex = j.at("has_cut_vertex").get<bool>();
  p.max_degree = j.at("max_degree").get<int>();
  p.complement_4_connected = j.at("complement_4_connected").get<bool>();
  p.degree_condition_applicable = j.at("degree_condition_applicable").get<bool>();
  p.degree_condition = j.at("degree_condition").get<bool>();
  p.theorem2_applicable = j.at("theorem2_applicable").get<bool>();
  return p;
}

std::vector<CensusAggregate> aggregate(const std::vector<CensusRecord>& records) {
  std::vector<CensusAggregate> out;
  for (const CensusRecord& r : records) {
    if (out.empty() || out.back().m != r.m) {
      out.push_back({r.m, 1, r.tmc, r.tmc, r.g6});
      continue;
    }
    CensusAggregate& a = out.back();
    ++a.count;
    if (r.tmc < a.min_tmc) {
      a.min_tmc = r.tmc;
      a.argmin_g6 = r.g6;
    }
    if (r.tmc > a.max_tmc) a.max_tmc = r.tmc;
  }
  return out;
}

std::string cache_path(const std::string& dir, int n) {
  return dir + "/census-n" + std::to_string(n) + "-v" + std::to_string(kSolverVersion) +
         ".json";
}

std::string effective_cache_dir(const CensusOptions& opts) {
  if (!opts.cache_dir.empty()) return opts.cache_dir;
  const char* env = std::getenv("TMC_CACHE_DIR");
  return env ? env : "";
}

// Densest record staying below k colors, if any: the graph that pins
// empirical_f(k), and the natural counterexample when a formula disagrees.
std::string densest_below(const TmcCensus& census, int k) {
  std::string g6;
  int best_m = -1;
  for (const CensusRecord& r : census.records)
    if (r.tmc < k && r.m > best_m) {
      best_m = r.m;
      g6 = r.g6;
    }
  return g6;
}

std::string sparsest_above(const TmcCensus& census, int k) {
  std::string g6;
  int best_m = -1;
  for (const CensusRecord& r : census.records)
    if (r.tmc > k && (best_m < 0 || r.m < best_m)) {
      best_m = r.m;
      g6 = r.g6;
    }
  return g6;
}

void push_row(TheoremReport& rep, std::string label, long long expected, long long actual,
              std::string counter_g6) {
  TheoremRow row;
  row.label = std::move(label);
  row.expected = expected;
  row.actual = actual;
  row.match = expected == actual;
  if (!row.match) row.counterexample_g6 = std::move(counter_g6);
  rep.rows.push_back(std::move(row));
  ++rep.checked;
  if (!rep.rows.back().match) ++rep.mismatches;
}

void family_row(TheoremReport& rep, const FamilyInstance& inst, std::string label) {
  long long actual = tmc_exact(inst.graph).value;
  push_row(rep, std::move(label), inst.predicted_tmc, actual,
           actual == inst.predicted_tmc ? "" : graph6_encode(inst.graph));
}

void partitions_into(int n, int max_part, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& emit) {
  if (n == 0) {
    emit(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_into(n - p, p, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::T2: return "T2";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
    case TheoremId::L_GTS: return "L_GTS";
    case TheoremId::L_GNT: return "L_GNT";
    case TheoremId::L_MULTI: return "L_MULTI";
    case TheoremId::L_GSTAR: return "L_GSTAR";
    case TheoremId::L_LOWER: return "L_LOWER";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
  for (TheoremId id : {TheoremId::T2, TheoremId::T3, TheoremId::T4, TheoremId::L_GTS,
                       TheoremId::L_GNT, TheoremId::L_MULTI, TheoremId::L_GSTAR,
                       TheoremId::L_LOWER})
    if (name == theorem_name(id)) return id;
  return std::nullopt;
}

TmcCensus build_census(int n, const CensusOptions& opts) {
  if (n < 3 || n > 8) throw std::invalid_argument("census supports orders 3 through 8");
  if (n == 8 && !opts.allow_large)
    throw std::invalid_argument("order 8 census is long-running; enable allow_large");

  std::string dir = effective_cache_dir(opts);
  if (!dir.empty()) {
    try {
      TmcCensus cached = load_census(cache_path(dir, n));
      if (cached.n == n && cached.solver_version == kSolverVersion) return cached;
    } catch (const std::exception&) {
      // absent or stale cache: rebuild below
    }
  }

  std::vector<Graph> reps = enumerate_connected(n);
  int total = static_cast<int>(reps.size());
  TmcCensus census;
  census.n = n;
  census.solver_version = kSolverVersion;
  census.records.resize(total);

  int jobs = std::max(1, opts.jobs);
  jobs = std::min(jobs, total);
  std::atomic<int> next{0};
  std::atomic<int> done{0};
  std::mutex mu;
  std::exception_ptr fail;
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= total) return;
      try {
        const Graph& g = reps[i];
        CensusRecord rec;
        rec.g6 = graph6_encode(g);
        rec.m = g.size();
        rec.l = max_leaf_spanning_tree(g).leaves;
        rec.tmc = tmc_exact(g).value;
        rec.pred = predicates(g);
        census.records[i] = std::move(rec);
      } catch (...) {
        std::lock_guard<std::mutex> lk(mu);
        if (!fail) fail = std::current_exception();
        return;
      }
      int d = done.fetch_add(1) + 1;
      if (opts.progress) {
        std::lock_guard<std::mutex> lk(mu);
        opts.progress(d, total);
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  if (fail) std::rethrow_exception(fail);

  census.by_size = aggregate(census.records);
  if (!dir.empty()) save_census(census, cache_path(dir, n));
  return census;
}

void save_census(const TmcCensus& census, const std::string& path) {
  json j;
  j["magic"] = kMagic;
  j["format"] = kFormat;
  j["n"] = census.n;
  j["solver_version"] = census.solver_version;
  json recs = json::array();
  for (const CensusRecord& r : census.records) {
    json jr;
    jr["g6"] = r.g6;
    jr["m"] = r.m;
    jr["l"] = r.l;
    jr["tmc"] = r.tmc;
    jr["pred"] = pred_to_json(r.pred);
    recs.push_back(std::move(jr));
  }
  j["records"] = std::move(recs);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write census file: " + path);
  out << j.dump() << '\n';
  if (!out) throw std::runtime_error("failed writing census file: " + path);
}

TmcCensus load_census(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read census file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("census file is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object() || j.value("magic", "") != kMagic)
    throw std::runtime_error("census file has a bad header");
  if (j.value("format", -1) != kFormat)
    throw std::runtime_error("census file has an unsupported format version");
  TmcCensus census;
  census.n = j.at("n").get<int>();
  census.solver_version = j.at("solver_version").get<int>();
  for (const json& jr : j.at("records")) {
    CensusRecord r;
    r.g6 = jr.at("g6").get<std::string>();
    r.m = jr.at("m").get<int>();
    r.l = jr.at("l").get<int>();
    r.tmc = jr.at("tmc").get<int>();
    r.pred = pred_from_json(jr.at("pred"));
    census.records.push_back(std::move(r));
  }
  census.by_size = aggregate(census.records);
  return census;
}

int empirical_f(const TmcCensus& census, int k) {
  int best = -1;
  for (const CensusRecord& r : census.records)
    if (r.tmc < k && r.m > best) best = r.m;
  return best < 0 ? census.n - 1 : best + 1;
}

std::optional<int> empirical_g(const TmcCensus& census, int k) {
  int first_above = -1;
  for (const CensusRecord& r : census.records)
    if (r.tmc > k && (first_above < 0 || r.m < first_above)) first_above = r.m;
  int res = first_above < 0 ? static_cast<int>(choose2(census.n)) : first_above - 1;
  if (res < census.n - 1) return std::nullopt;
  return res;
}

TheoremReport check_theorem(TheoremId id, int n, const CensusOptions& opts,
                            const TmcCensus* prebuilt) {
  if (n < 3 || n > 8)
    throw std::invalid_argument("theorem checks support orders 3 through 8");
  TheoremReport rep;
  rep.id = id;
  rep.n = n;

  bool needs_census =
      id == TheoremId::T2 || id == TheoremId::T3 || id == TheoremId::T4 ||
      id == TheoremId::L_LOWER;
  TmcCensus local;
  const TmcCensus* census = nullptr;
  if (needs_census) {
    if (prebuilt) {
      if (prebuilt->n != n || prebuilt->solver_version != kSolverVersion)
        throw std::invalid_argument("prebuilt census does not match the requested order");
      census = prebuilt;
    } else {
      local = build_census(n, opts);
      census = &local;
    }
  }

  long long c = choose2(n);
  switch (id) {
    case TheoremId::T2:
      for (const CensusRecord& r : census->records) {
        if (n < 4 || !r.pred.theorem2_applicable) continue;
        push_row(rep, r.g6, r.m - n + 2 + r.l, r.tmc, r.g6);
      }
      break;
    case TheoremId::T3:
      for (int k = 3; k <= c + n; ++k) {
        long long expected = f_eval(n, k).value;
        long long actual = empirical_f(*census, k);
        push_row(rep, "k=" + std::to_string(k), expected, actual, densest_below(*census, k));
      }
      break;
    case TheoremId::T4:
      for (int k = 3; k <= c + n; ++k) {
        auto formula = g_eval(n, k);
        auto emp = empirical_g(*census, k);
        long long expected = formula ? formula->value : -1;
        long long actual = emp ? *emp : -1;
        push_row(rep, "k=" + std::to_string(k), expected, actual, sparsest_above(*census, k));
      }
      break;
    case TheoremId::L_GTS:
      for (int t = 2; t <= n - 2; ++t)
        for (int s = 0; s <= t - 1; ++s)
          family_row(rep, gen_gts(n, t, s),
                     "t=" + std::to_string(t) + " s=" + std::to_string(s));
      break;
    case TheoremId::L_GNT:
      for (int p = n / 2 + 1; p < n - 2; ++p)
        family_row(rep, gen_gnt(n, p), "p=" + std::to_string(p));
      if (n >= 5 && n % 2 == 1)
        family_row(rep, gen_gnt3(n), "t=3 p=" + std::to_string((n + 1) / 2));
      break;
    case TheoremId::L_MULTI: {
      std::vector<int> cur;
      partitions_into(n, n - 1, cur, [&](const std::vector<int>& parts) {
        if (parts.size() < 2) return;
        std::string label = "parts=";
        for (size_t i = 0; i < parts.size(); ++i)
          label += (i ? "," : "") + std::to_string(parts[i]);
        family_row(rep, gen_multipartite(parts), label);
      });
      break;
    }
    case TheoremId::L_GSTAR:
      for (int t = 2; t <= n - 1; ++t)
        for (int extra = 0; extra <= t - 2; ++extra)
          family_row(rep, gen_gstar(n, t, extra),
                     "t=" + std::to_string(t) + " extra=" + std::to_string(extra));
      break;
    case TheoremId::L_LOWER:
      for (const CensusRecord& r : census->records) {
        long long lower = std::max<long long>(3, r.m - n + 2 + r.l);
        long long p = c - r.m;
        if (p >= 1 && 2 * p <= n) lower = std::max(lower, c + n - 3 * p);
        else if (p >= 1 && p <= n - 3) lower = std::max(lower, c - p);
        bool ok = r.tmc >= lower && r.tmc <= r.m + n &&
                  (r.tmc == r.m + n) == (r.m == c);
        push_row(rep, r.g6, ok ? r.tmc : lower, r.tmc, r.g6);
      }
      break;
  }
  rep.pass = rep.mismatches == 0;
  return rep;
}

}  // namespace tmc
