#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tmc/canonical.hpp"
#include "tmc/census.hpp"
#include "tmc/coloring.hpp"
#include "tmc/families.hpp"
#include "tmc/formulas.hpp"
#include "tmc/graph.hpp"
#include "tmc/graph6.hpp"
#include "tmc/solve.hpp"

using nlohmann::json;

namespace {

int default_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::vector<std::string> read_graph_lines(const std::string& inline_g6,
                                          const std::string& in_path) {
  std::vector<std::string> lines;
  if (!inline_g6.empty()) {
    lines.push_back(inline_g6);
    return lines;
  }
  std::istream* in = &std::cin;
  std::ifstream file;
  if (!in_path.empty()) {
    file.open(in_path);
    if (!file) throw std::runtime_error("cannot open input file: " + in_path);
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

json coloring_to_json(const tmc::Graph& g, const tmc::TotalColoring& col) {
  json j;
  j["n"] = g.order();
  json edges = json::array();
  for (const tmc::Edge& e : g.edge_list()) edges.push_back({e.first, e.second});
  j["edges"] = std::move(edges);
  j["edge_colors"] = col.edge_colors;
  j["vertex_colors"] = col.vertex_colors;
  return j;
}

tmc::TotalColoring coloring_from_json(const tmc::Graph& g, const json& j) {
  if (!j.is_object()) throw std::runtime_error("coloring file must hold a JSON object");
  if (j.at("n").get<int>() != g.order())
    throw std::runtime_error("coloring is for a different order");
  const json& edges = j.at("edges");
  const std::vector<tmc::Edge>& el = g.edge_list();
  if (edges.size() != el.size())
    throw std::runtime_error("coloring lists a different number of edges");
  for (size_t i = 0; i < el.size(); ++i) {
    if (edges[i].size() != 2 || edges[i][0].get<int>() != el[i].first ||
        edges[i][1].get<int>() != el[i].second)
      throw std::runtime_error(
          "coloring edges must match the graph's sorted edge list exactly");
  }
  tmc::TotalColoring col;
  col.edge_colors = j.at("edge_colors").get<std::vector<int>>();
  col.vertex_colors = j.at("vertex_colors").get<std::vector<int>>();
  return col;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

struct ToolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- tmc ----------------------------------------------------------------

int run_tmc(const std::string& inline_g6, const std::string& in_path,
            const std::string& mode_name, const std::string& witness_path,
            const std::string& format, int jobs) {
  tmc::SolveMode mode =
      mode_name == "unrestricted" ? tmc::SolveMode::unrestricted : tmc::SolveMode::simple;
  std::vector<std::string> lines = read_graph_lines(inline_g6, in_path);
  if (lines.empty()) throw ToolError("no graphs given");
  if (!witness_path.empty() && lines.size() != 1)
    throw ToolError("--witness needs exactly one input graph");

  std::vector<tmc::Graph> graphs;
  for (const std::string& line : lines) graphs.push_back(tmc::graph6_decode(line));

  std::vector<tmc::TmcResult> results(graphs.size());
  int workers = std::min<int>(std::max(1, jobs), static_cast<int>(graphs.size()));
  std::atomic<size_t> next{0};
  std::mutex mu;
  std::exception_ptr fail;
  auto work = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      try {
        results[i] = tmc_exact(graphs[i], mode);
      } catch (...) {
        std::lock_guard<std::mutex> lk(mu);
        if (!fail) fail = std::current_exception();
        return;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (fail) std::rethrow_exception(fail);

  if (!witness_path.empty()) {
    std::ofstream out(witness_path);
    if (!out) throw ToolError("cannot write witness file: " + witness_path);
    out << coloring_to_json(graphs[0], results[0].witness).dump() << '\n';
  }

  if (format == "csv") {
    std::cout << "graph6,n,m,value,waste,nodes\n";
    for (size_t i = 0; i < graphs.size(); ++i)
      std::cout << csv_escape(lines[i]) << ',' << graphs[i].order() << ','
                << graphs[i].size() << ',' << results[i].value << ','
                << results[i].waste << ',' << results[i].node_count << '\n';
  } else if (format == "json") {
    json arr = json::array();
    for (size_t i = 0; i < graphs.size(); ++i) {
      json j;
      j["graph6"] = lines[i];
      j["n"] = graphs[i].order();
      j["m"] = graphs[i].size();
      j["value"] = results[i].value;
      j["waste"] = results[i].waste;
      j["nodes"] = results[i].node_count;
      arr.push_back(std::move(j));
    }
    std::cout << arr.dump() << '\n';
  } else if (!inline_g6.empty() && graphs.size() == 1) {
    std::cout << results[0].value << '\n';
  } else {
    for (size_t i = 0; i < graphs.size(); ++i)
      std::cout << lines[i] << ' ' << results[i].value << '\n';
  }
  return 0;
}

// ---- verify-coloring ----------------------------------------------------

int run_verify_coloring(const std::string& inline_g6, const std::string& in_path,
                        const std::string& coloring_path) {
  std::vector<std::string> lines = read_graph_lines(inline_g6, in_path);
  if (lines.size() != 1) throw ToolError("verify-coloring needs exactly one graph");
  tmc::Graph g = tmc::graph6_decode(lines[0]);
  std::ifstream in(coloring_path);
  if (!in) throw ToolError("cannot open coloring file: " + coloring_path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ToolError("coloring file is not valid JSON: " + std::string(e.what()));
  }
  tmc::TotalColoring col = coloring_from_json(g, j);
  tmc::TmcVerdict v = tmc::is_tmc(g, col);
  if (v.ok) {
    std::cout << "valid, " << tmc::count_colors(col) << " colors\n";
    return 0;
  }
  std::cout << "invalid: no qualifying path for pair (" << v.failing_pair->first << ", "
            << v.failing_pair->second << ")\n";
  return 1;
}

// ---- families -----------------------------------------------------------

std::string params_to_string(const tmc::FamilyInstance& inst) {
  std::ostringstream os;
  switch (inst.family) {
    case tmc::Family::GTS:
      os << "t=" << inst.params.t << " s=" << inst.params.s;
      break;
    case tmc::Family::GNT:
      os << "p=" << inst.params.p << " t=" << inst.params.t;
      break;
    case tmc::Family::GSTAR:
      os << "t=" << inst.params.t << " extra=" << inst.params.extra;
      break;
    case tmc::Family::MULTIPARTITE: {
      os << "parts=";
      for (size_t i = 0; i < inst.params.parts.size(); ++i)
        os << (i ? "," : "") << inst.params.parts[i];
      break;
    }
    default:
      break;
  }
  return os.str();
}

int run_families_gen(const std::string& family, int n, int t, int s, int p, int extra,
                     const std::string& parts_text, const std::string& format) {
  tmc::FamilyInstance inst = [&] {
    if (family == "gts") return tmc::gen_gts(n, t, s);
    if (family == "gnt") return tmc::gen_gnt(n, p);
    if (family == "gnt3") return tmc::gen_gnt3(n);
    if (family == "gstar") return tmc::gen_gstar(n, t, extra);
    if (family == "multipartite") {
      std::vector<int> parts;
      std::stringstream ss(parts_text);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) parts.push_back(std::stoi(item));
      }
      if (parts.empty()) throw ToolError("--parts is required for multipartite");
      return tmc::gen_multipartite(parts);
    }
    if (family == "complete") return tmc::gen_complete(n);
    if (family == "star") return tmc::gen_star(n);
    if (family == "path") return tmc::gen_path(n);
    throw ToolError("unknown family: " + family);
  }();
  std::string g6 = tmc::graph6_encode(inst.graph);
  std::string params = params_to_string(inst);
  if (format == "csv") {
    std::cout << "graph6,family,n,m,predicted_tmc,params\n";
    std::cout << csv_escape(g6) << ',' << family_name(inst.family) << ','
              << inst.graph.order() << ',' << inst.graph.size() << ','
              << inst.predicted_tmc << ',' << csv_escape(params) << '\n';
  } else if (format == "json") {
    json j;
    j["graph6"] = g6;
    j["family"] = family_name(inst.family);
    j["n"] = inst.graph.order();
    j["m"] = inst.graph.size();
    j["predicted_tmc"] = inst.predicted_tmc;
    if (inst.family == tmc::Family::GTS) {
      j["t"] = inst.params.t;
      j["s"] = inst.params.s;
    } else if (inst.family == tmc::Family::GNT) {
      j["p"] = inst.params.p;
      j["t"] = inst.params.t;
    } else if (inst.family == tmc::Family::GSTAR) {
      j["t"] = inst.params.t;
      j["extra"] = inst.params.extra;
    } else if (inst.family == tmc::Family::MULTIPARTITE) {
      j["parts"] = inst.params.parts;
    }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << g6 << '\n';
    std::cout << "predicted_tmc " << inst.predicted_tmc;
    if (!params.empty()) std::cout << "  (" << params << ")";
    std::cout << '\n';
  }
  return 0;
}

// ---- formulas -----------------------------------------------------------

std::string formula_human(const tmc::FormulaResult& r) {
  std::ostringstream os;
  os << r.value << " (case " << r.case_id;
  if (r.t) os << ", t=" << *r.t;
  if (r.s) os << ", s=" << *r.s;
  if (r.r) os << ", r=" << *r.r;
  os << ")";
  return os.str();
}

void formula_csv_row(std::ostream& out, const tmc::FormulaResult& r) {
  out << r.n << ',' << r.k << ',' << r.value << ',' << r.case_id << ',';
  if (r.t) out << *r.t;
  out << ',';
  if (r.s) out << *r.s;
  out << ',';
  if (r.r) out << *r.r;
  out << '\n';
}

json formula_json(const tmc::FormulaResult& r) {
  json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["value"] = r.value;
  j["case"] = r.case_id;
  if (r.t) j["t"] = *r.t;
  if (r.s) j["s"] = *r.s;
  if (r.r) j["r"] = *r.r;
  return j;
}

int run_formula_one(char which, int n, int k, const std::string& format) {
  std::optional<tmc::FormulaResult> r;
  if (which == 'f') r = tmc::f_eval(n, k);
  else r = tmc::g_eval(n, k);
  if (format == "csv") {
    std::cout << "n,k,value,case,t,s,r\n";
    if (r) formula_csv_row(std::cout, *r);
    else std::cout << n << ',' << k << ",,,,,\n";
  } else if (format == "json") {
    if (r) std::cout << formula_json(*r).dump() << '\n';
    else {
      json j;
      j["n"] = n;
      j["k"] = k;
      j["value"] = nullptr;
      std::cout << j.dump() << '\n';
    }
  } else {
    if (r) std::cout << formula_human(*r) << '\n';
    else std::cout << "undefined\n";
  }
  return 0;
}

int run_formula_table(const std::string& which, int n, const std::string& format) {
  std::vector<tmc::FormulaResult> rows =
      which == "f" ? tmc::f_table(n) : tmc::g_table(n);
  if (format == "csv") {
    std::cout << "n,k,value,case,t,s,r\n";
    for (const auto& r : rows) formula_csv_row(std::cout, r);
  } else if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(formula_json(r));
    std::cout << arr.dump() << '\n';
  } else {
    for (const auto& r : rows)
      std::cout << "k=" << r.k << ": " << formula_human(r) << '\n';
  }
  return 0;
}

// ---- verify -------------------------------------------------------------

int run_verify(const std::string& theorem, int n, int jobs, bool allow_large,
               const std::string& cache_dir, const std::string& format) {
  std::optional<tmc::TheoremId> id = tmc::theorem_from_name(theorem);
  if (!id) throw ToolError("unknown theorem tag: " + theorem);
  tmc::CensusOptions opts;
  opts.jobs = jobs;
  opts.allow_large = allow_large;
  opts.cache_dir = cache_dir;
  tmc::TheoremReport rep = tmc::check_theorem(*id, n, opts);
  if (format == "csv") {
    std::cout << "label,expected,actual,match,counterexample\n";
    for (const tmc::TheoremRow& row : rep.rows)
      std::cout << csv_escape(row.label) << ',' << row.expected << ',' << row.actual
                << ',' << (row.match ? "true" : "false") << ','
                << csv_escape(row.counterexample_g6) << '\n';
  } else if (format == "json") {
    json j;
    j["theorem"] = theorem_name(rep.id);
    j["n"] = rep.n;
    j["checked"] = rep.checked;
    j["mismatches"] = rep.mismatches;
    j["pass"] = rep.pass;
    json rows = json::array();
    for (const tmc::TheoremRow& row : rep.rows) {
      json jr;
      jr["label"] = row.label;
      jr["expected"] = row.expected;
      jr["actual"] = row.actual;
      jr["match"] = row.match;
      if (!row.match) jr["counterexample"] = row.counterexample_g6;
      rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << theorem_name(rep.id) << " n=" << rep.n << ": " << rep.checked
              << " checks, " << rep.mismatches << " mismatches -> "
              << (rep.pass ? "PASS" : "FAIL") << '\n';
    for (const tmc::TheoremRow& row : rep.rows)
      if (!row.match)
        std::cout << "  " << row.label << ": expected " << row.expected << ", got "
                  << row.actual
                  << (row.counterexample_g6.empty()
                          ? ""
                          : " (counterexample " + row.counterexample_g6 + ")")
                  << '\n';
  }
  return rep.pass ? 0 : 1;
}

// ---- census -------------------------------------------------------------

int run_census(int n, int jobs, bool allow_large, const std::string& cache_dir,
               const std::string& out_path, const std::string& format, bool progress) {
  tmc::CensusOptions opts;
  opts.jobs = jobs;
  opts.allow_large = allow_large;
  opts.cache_dir = cache_dir;
  if (progress)
    opts.progress = [](int done, int total) {
      std::cerr << "\r" << done << "/" << total << std::flush;
      if (done == total) std::cerr << '\n';
    };
  tmc::TmcCensus census = tmc::build_census(n, opts);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw ToolError("cannot write output file: " + out_path);
    out = &file;
  }
  if (format == "json") {
    json j;
    j["n"] = census.n;
    j["solver_version"] = census.solver_version;
    json recs = json::array();
    for (const tmc::CensusRecord& r : census.records) {
      json jr;
      jr["g6"] = r.g6;
      jr["m"] = r.m;
      jr["l"] = r.l;
      jr["tmc"] = r.tmc;
      recs.push_back(std::move(jr));
    }
    j["records"] = std::move(recs);
    json aggs = json::array();
    for (const tmc::CensusAggregate& a : census.by_size) {
      json ja;
      ja["m"] = a.m;
      ja["count"] = a.count;
      ja["min_tmc"] = a.min_tmc;
      ja["max_tmc"] = a.max_tmc;
      ja["argmin_g6"] = a.argmin_g6;
      aggs.push_back(std::move(ja));
    }
    j["by_size"] = std::move(aggs);
    *out << j.dump() << '\n';
  } else if (format == "human") {
    *out << "order " << census.n << ": " << census.records.size()
         << " connected graphs\n";
    *out << "m count min max sparsest-minimum\n";
    for (const tmc::CensusAggregate& a : census.by_size)
      *out << a.m << ' ' << a.count << ' ' << a.min_tmc << ' ' << a.max_tmc << ' '
           << a.argmin_g6 << '\n';
  } else {
    *out << "graph6,m,l,tmc,theorem2_applicable\n";
    for (const tmc::CensusRecord& r : census.records)
      *out << csv_escape(r.g6) << ',' << r.m << ',' << r.l << ',' << r.tmc << ','
           << (r.pred.theorem2_applicable ? "true" : "false") << '\n';
  }
  return 0;
}

int run_enumerate(int n) {
  for (const tmc::Graph& g : tmc::enumerate_connected(n))
    std::cout << tmc::graph6_encode(g) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computation of the largest color count over total colorings in "
      "which every vertex pair is joined by a path whose edges and interior "
      "vertices share one color."};
  app.require_subcommand(1);
  int exit_code = 0;

  // tmc
  std::string g6text, in_path, mode_name = "simple", witness_path, tmc_format = "human";
  int tmc_jobs = default_jobs();
  auto* sc_tmc = app.add_subcommand(
      "tmc", "Exact value for graph6 inputs (inline, file, or stdin)");
  sc_tmc->add_option("--graph6", g6text, "one graph6 string");
  sc_tmc->add_option("--in", in_path, "file of graph6 lines");
  sc_tmc->add_option("--mode", mode_name, "simple|unrestricted")
      ->check(CLI::IsMember({"simple", "unrestricted"}));
  sc_tmc->add_option("--witness", witness_path, "write the witness coloring JSON here");
  sc_tmc->add_option("--format", tmc_format, "human|csv|json")
      ->check(CLI::IsMember({"human", "csv", "json"}));
  sc_tmc->add_option("--jobs", tmc_jobs, "worker threads for batches");
  sc_tmc->callback([&] {
    exit_code = run_tmc(g6text, in_path, mode_name, witness_path, tmc_format, tmc_jobs);
  });

  // verify-coloring
  std::string vc_g6, vc_in, vc_coloring;
  auto* sc_vc = app.add_subcommand(
      "verify-coloring", "Check a coloring JSON against a graph, print the verdict");
  sc_vc->add_option("--graph6", vc_g6, "one graph6 string");
  sc_vc->add_option("--in", vc_in, "file with one graph6 line");
  sc_vc->add_option("--coloring", vc_coloring, "coloring JSON file")->required();
  sc_vc->callback([&] { exit_code = run_verify_coloring(vc_g6, vc_in, vc_coloring); });

  // families gen
  std::string fam_name, fam_parts, fam_format = "human";
  int fam_n = 0, fam_t = 0, fam_s = 0, fam_p = 0, fam_extra = 0;
  auto* sc_fam = app.add_subcommand("families", "Extremal graph families");
  auto* sc_gen = sc_fam->add_subcommand(
      "gen",
      "Generate one instance: gts (tag L_GTS), gnt/gnt3 (L_GNT), gstar (L_GSTAR), "
      "multipartite (L_MULTI), complete, star, path");
  sc_gen->add_option("--family", fam_name,
                     "gts|gnt|gnt3|gstar|multipartite|complete|star|path")
      ->required()
      ->check(CLI::IsMember(
          {"gts", "gnt", "gnt3", "gstar", "multipartite", "complete", "star", "path"}));
  sc_gen->add_option("--n", fam_n, "order");
  sc_gen->add_option("--t", fam_t, "family parameter t");
  sc_gen->add_option("--s", fam_s, "gts: deleted edge count");
  sc_gen->add_option("--p", fam_p, "gnt: complement edge count");
  sc_gen->add_option("--extra", fam_extra, "gstar: extra edges in the big part");
  sc_gen->add_option("--parts", fam_parts, "multipartite: sizes like 2,2,1");
  sc_gen->add_option("--format", fam_format, "human|csv|json")
      ->check(CLI::IsMember({"human", "csv", "json"}));
  sc_gen->callback([&] {
    exit_code = run_families_gen(fam_name, fam_n, fam_t, fam_s, fam_p, fam_extra,
                                 fam_parts, fam_format);
  });

  // formulas
  auto* sc_formulas = app.add_subcommand("formulas", "Closed-form thresholds");
  std::string ff_format = "human";
  int ff_n = 0, ff_k = 0;
  auto* sc_f = sc_formulas->add_subcommand(
      "f", "Edge threshold forcing k colors (tag T3)");
  sc_f->add_option("--n", ff_n, "order")->required();
  sc_f->add_option("--k", ff_k, "color count")->required();
  sc_f->add_option("--format", ff_format, "human|csv|json")
      ->check(CLI::IsMember({"human", "csv", "json"}));
  sc_f->callback([&] { exit_code = run_formula_one('f', ff_n, ff_k, ff_format); });
  std::string fg_format = "human";
  int fg_n = 0, fg_k = 0;
  auto* sc_g = sc_formulas->add_subcommand(
      "g", "Edge ceiling keeping k colors (tag T4); may be undefined");
  sc_g->add_option("--n", fg_n, "order")->required();
  sc_g->add_option("--k", fg_k, "color count")->required();
  sc_g->add_option("--format", fg_format, "human|csv|json")
      ->check(CLI::IsMember({"human", "csv", "json"}));
  sc_g->callback([&] { exit_code = run_formula_one('g', fg_n, fg_k, fg_format); });
  std::string ft_which = "f", ft_format = "human";
  int ft_n = 0;
  auto* sc_ft = sc_formulas->add_subcommand("table", "Whole-domain table (tags T3, T4)");
  sc_ft->add_option("--which", ft_which, "f|g")->check(CLI::IsMember({"f", "g"}));
  sc_ft->add_option("--n", ft_n, "order")->required();
  sc_ft->add_option("--format", ft_format, "human|csv|json")
      ->check(CLI::IsMember({"human", "csv", "json"}));
  sc_ft->callback([&] { exit_code = run_formula_table(ft_which, ft_n, ft_format); });

  // verify
  std::string v_theorem, v_cache, v_format = "human";
  int v_n = 0, v_jobs = default_jobs();
  bool v_large = false;
  auto* sc_verify = app.add_subcommand(
      "verify",
      "Empirically confirm one result at order n: T2 (tightness conditions), T3/T4 "
      "(edge thresholds), L_GTS/L_GNT/L_MULTI/L_GSTAR (family values), L_LOWER "
      "(universal bounds); exit 0 on pass, 1 on a mismatch");
  sc_verify
      ->add_option("--theorem", v_theorem,
                   "T2|T3|T4|L_GTS|L_GNT|L_MULTI|L_GSTAR|L_LOWER")
      ->required();
  sc_verify->add_option("--n", v_n, "order")->required();
  sc_verify->add_option("--jobs", v_jobs, "worker threads");
  sc_verify->add_flag("--allow-large", v_large, "permit the order-8 census");
  sc_verify->add_option("--cache-dir", v_cache, "census cache directory");
  sc_verify->add_option("--format", v_format, "human|csv|json")
      ->check(CLI::IsMember({"human", "csv", "json"}));
  sc_verify->callback([&] {
    exit_code = run_verify(v_theorem, v_n, v_jobs, v_large, v_cache, v_format);
  });

  // census
  std::string c_cache, c_out, c_format = "csv";
  int c_n = 0, c_jobs = default_jobs();
  bool c_large = false, c_progress = false;
  auto* sc_census = app.add_subcommand(
      "census", "Exact values for every connected graph of order n");
  sc_census->add_option("--n", c_n, "order (3..8; 8 needs --allow-large)")->required();
  sc_census->add_option("--jobs", c_jobs, "worker threads");
  sc_census->add_flag("--allow-large", c_large, "permit the order-8 census");
  sc_census->add_flag("--progress", c_progress, "stream progress to stderr");
  sc_census->add_option("--cache-dir", c_cache, "census cache directory");
  sc_census->add_option("--out", c_out, "write here instead of stdout");
  sc_census->add_option("--format", c_format, "human|csv|json")
      ->check(CLI::IsMember({"human", "csv", "json"}));
  sc_census->callback([&] {
    exit_code = run_census(c_n, c_jobs, c_large, c_cache, c_out, c_format, c_progress);
  });

  // enumerate
  int e_n = 0;
  auto* sc_enum = app.add_subcommand(
      "enumerate", "graph6 lines for all connected graphs of order n (1..8)");
  sc_enum->add_option("--n", e_n, "order")->required();
  sc_enum->callback([&] { exit_code = run_enumerate(e_n); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
