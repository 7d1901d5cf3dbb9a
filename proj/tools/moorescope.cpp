#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "moorescope/bounds.hpp"
#include "moorescope/canonical.hpp"
#include "moorescope/cycles.hpp"
#include "moorescope/feasibility.hpp"
#include "moorescope/graph6.hpp"
#include "moorescope/metrics.hpp"
#include "moorescope/repeats.hpp"
#include "moorescope/search.hpp"
#include "moorescope/structure.hpp"

using json = nlohmann::ordered_json;
using namespace moorescope;

namespace {

constexpr const char* kVersion = "0.1.0";

// Exit codes are part of the public contract.
constexpr int kOk = 0;
constexpr int kUsageOrIo = 1;
constexpr int kVerifyFail = 2;
constexpr int kLimitHit = 3;

struct Emitter {
  std::string subcommand;
  json parameters = json::object();
  bool want_timing = false;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void emit(const json& payload) const {
    json env;
    env["tool"] = "moorescope";
    env["version"] = kVersion;
    env["subcommand"] = subcommand;
    env["parameters"] = parameters;
    env["payload"] = payload;
    if (want_timing) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      env["timing_ms"] = ms;
    }
    std::cout << env.dump(2) << "\n";
  }
};

std::string fmt_dist(int d) {
  return d == kInfDist ? "inf" : std::to_string(d);
}

json verdict_to_json(const FeasibilityVerdict& v) {
  json reasons = json::array();
  for (const auto& r : v.reasons) {
    reasons.push_back({{"code", reason_code_name(r.code)},
                       {"anchor", r.anchor}});
  }
  return {{"status", status_name(v.status)},
          {"reasons", reasons},
          {"upper_bound_defect", v.upper_bound_defect},
          {"notes", v.notes}};
}

json report_to_json(const ConsistencyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  json out = {{"pass", r.pass}, {"checks", checks}};
  out["first_failed"] = r.pass ? json(nullptr) : json(r.first_failed);
  return out;
}

std::string residues_text(const ResidueRow& row) {
  std::string ds;
  for (std::size_t i = 0; i < row.residues.size(); ++i) {
    if (i) ds += ",";
    ds += std::to_string(row.residues[i]);
  }
  return "d ≡ " + ds + " (mod " + std::to_string(row.modulus) + ")";
}

std::vector<Graph> load_graphs(const std::string& path) {
  if (path == "-") return read_graph6_stream(std::cin);
  return read_graph6_file(path);
}

int run_moore(const Emitter& em, int delta, int diam, int defect,
              const std::string& format) {
  BigInt m = moore_bound(delta, diam);
  BigInt n = m - defect;
  bool has_threshold = delta >= 3 && diam >= 2;
  BigInt t = has_threshold ? regularity_threshold(delta, diam) : BigInt(0);
  if (format == "json") {
    json payload = {{"moore_bound", m.str()},
                    {"defect", defect},
                    {"order", n.str()},
                    {"regularity_threshold",
                     has_threshold ? json(t.str()) : json(nullptr)},
                    {"forces_regularity", has_threshold && defect < t}};
    em.emit(payload);
  } else {
    std::cout << "M(" << delta << "," << diam << ") = " << m << "\n";
    std::cout << "n = M - " << defect << " = " << n << "\n";
    if (has_threshold) {
      std::cout << "regularity threshold = " << t << " (defect " << defect
                << (defect < t ? " forces a regular graph)" : " does not force regularity)")
                << "\n";
    }
  }
  return kOk;
}

int run_feasible(const Emitter& em, int d, int diam,
                 const std::string& format) {
  auto v = feasibility(d, diam);
  if (format == "text") {
    std::cout << "(" << d << "," << diam << ",-2): " << status_name(v.status)
              << "\n";
    for (const auto& r : v.reasons) {
      std::cout << "  [" << reason_code_name(r.code) << "] " << r.anchor
                << "\n";
    }
    std::cout << "  upper bound: N <= M - " << v.upper_bound_defect << "\n";
    for (const auto& nte : v.notes) std::cout << "  note: " << nte << "\n";
  } else {
    em.emit(verdict_to_json(v));
  }
  return kOk;
}

int run_table(const Emitter& em, int lo, int hi, const std::string& format) {
  std::vector<ResidueRow> rows;
  for (int diam = lo; diam <= hi; ++diam) rows.push_back(residue_table(diam));
  if (format == "json") {
    json payload = json::array();
    for (const auto& row : rows) {
      payload.push_back({{"diam", row.diam},
                         {"modulus", row.modulus},
                         {"residues", row.residues}});
    }
    em.emit(payload);
  } else if (format == "csv") {
    std::cout << "diam,modulus,residues\n";
    for (const auto& row : rows) {
      std::string ds;
      for (std::size_t i = 0; i < row.residues.size(); ++i) {
        if (i) ds += ";";
        ds += std::to_string(row.residues[i]);
      }
      std::cout << row.diam << "," << row.modulus << "," << ds << "\n";
    }
  } else {  // md
    std::cout << "| D | d |\n|---|---|\n";
    for (const auto& row : rows) {
      std::cout << "| " << row.diam << " | " << residues_text(row) << " |\n";
    }
  }
  return kOk;
}

int run_verify(const Emitter& em, const std::string& path, int delta, int diam,
               bool full, const std::string& format) {
  std::vector<Graph> graphs;
  try {
    graphs = load_graphs(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageOrIo;
  }
  bool all_pass = true;
  json payload = json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto report = verify_defect2(graphs[i], delta, diam, full);
    all_pass = all_pass && report.pass;
    if (format == "json") {
      json entry = report_to_json(report);
      entry["index"] = i;
      entry["graph6"] = write_graph6(graphs[i]);
      payload.push_back(entry);
    } else {
      std::cout << "graph " << i << ": " << (report.pass ? "PASS" : "FAIL");
      if (!report.pass) std::cout << " [" << report.first_failed << "]";
      std::cout << "\n";
      for (const auto& c : report.checks) {
        std::cout << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.name
                  << ": " << c.detail << "\n";
      }
    }
  }
  if (format == "json") em.emit(payload);
  return all_pass ? kOk : kVerifyFail;
}

int run_classify(const Emitter& em, const std::string& path, int diam,
                 const std::string& format) {
  std::vector<Graph> graphs;
  try {
    graphs = load_graphs(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageOrIo;
  }
  json payload = json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    std::vector<std::string> types;
    json hist = {{"i", 0}, {"ii", 0}, {"iii", 0}, {"unclassifiable", 0}};
    for (Vertex v = 0; v < g.order(); ++v) {
      try {
        auto c = classify_vertex(g, v, diam);
        types.push_back(type_tag_name(c.tag));
      } catch (const ClassificationError&) {
        types.push_back("unclassifiable");
      }
      hist[types.back()] = hist[types.back()].get<int>() + 1;
    }
    if (format == "json") {
      payload.push_back({{"index", i},
                         {"graph6", write_graph6(g)},
                         {"types", types},
                         {"histogram", hist}});
    } else {
      std::cout << "graph " << i << ":\n";
      for (Vertex v = 0; v < g.order(); ++v) {
        std::cout << "  " << v << "\t" << types[v] << "\n";
      }
    }
  }
  if (format == "json") em.emit(payload);
  return kOk;
}

int run_census(const Emitter& em, const std::string& path, int delta, int diam,
               const std::string& format) {
  std::istream* in = nullptr;
  std::ifstream file;
  if (path == "-") {
    in = &std::cin;
  } else {
    file.open(path);
    if (!file) {
      std::cerr << "error: cannot open " << path << "\n";
      return kUsageOrIo;
    }
    in = &file;
  }

  json payload = json::array();
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(*in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    json entry;
    entry["line"] = lineno;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const ParseError& e) {
      entry["error"] = e.what();
      payload.push_back(entry);
      if (format != "json") {
        std::cout << "line " << lineno << ": parse error: " << e.what() << "\n";
      }
      continue;
    }
    auto ds = degree_stats(g);
    int two_d = 2 * diam;
    auto cycles = all_cycles_upto(g, two_d + 1);
    long n2d_seen = 0;
    long n2d1_seen = 0;
    for (const auto& c : cycles) {
      if (c.length() == two_d) ++n2d_seen;
      if (c.length() == two_d + 1) ++n2d1_seen;
    }
    json hist = {{"i", 0}, {"ii", 0}, {"iii", 0}, {"unclassifiable", 0}};
    for (Vertex v = 0; v < g.order(); ++v) {
      std::string tag = "unclassifiable";
      try {
        tag = type_tag_name(classify_vertex(g, v, diam).tag);
      } catch (const ClassificationError&) {
      }
      hist[tag] = hist[tag].get<int>() + 1;
    }
    entry["order"] = g.order();
    entry["girth"] = fmt_dist(girth(g));
    entry["diameter"] = fmt_dist(diameter(g));
    entry["min_degree"] = ds.min_degree;
    entry["max_degree"] = ds.max_degree;
    entry["type_histogram"] = hist;
    entry["two_d_cycles"] = {
        {"observed", n2d_seen},
        {"formula", n2d_count(delta, diam).str()},
        {"formula_domain_ok", n2d_stated_domain(delta, diam)}};
    if (delta == 4 && diam >= 3) {
      entry["two_d_plus_one_cycles"] = {
          {"observed", n2d1_seen},
          {"formula", n2d1_count_deg4(diam).str()}};
    } else {
      entry["two_d_plus_one_cycles"] = {{"observed", n2d1_seen}};
    }
    payload.push_back(entry);
    if (format != "json") {
      std::cout << "line " << lineno << ": n=" << g.order()
                << " girth=" << fmt_dist(girth(g))
                << " diam=" << fmt_dist(diameter(g)) << " deg=["
                << ds.min_degree << "," << ds.max_degree << "]"
                << " 2D-cycles=" << n2d_seen << " (formula "
                << n2d_count(delta, diam).str() << ")"
                << " types i/ii/iii/?=" << hist["i"].get<int>() << "/"
                << hist["ii"].get<int>() << "/" << hist["iii"].get<int>()
                << "/" << hist["unclassifiable"].get<int>() << "\n";
    }
  }
  if (format == "json") em.emit(payload);
  return kOk;
}

json stats_to_json(const SearchStats& s) {
  return {{"nodes", s.nodes},
          {"leaves", s.leaves},
          {"girth_prunes", s.girth_prunes},
          {"reach_prunes", s.reach_prunes},
          {"degree_prunes", s.degree_prunes},
          {"disconnect_prunes", s.disconnect_prunes},
          {"duplicate_solutions", s.duplicate_solutions}};
}

int run_search(const Emitter& em, int delta, int diam, int defect, int jobs,
               std::uint64_t limit_nodes, double limit_seconds,
               const std::string& out_path, const std::string& format) {
  SearchConfig cfg;
  try {
    cfg = SearchConfig::make(delta, diam, defect);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageOrIo;
  }
  cfg.jobs = jobs;
  cfg.limits.max_nodes = limit_nodes;
  cfg.limits.max_seconds = limit_seconds;

  auto result = enumerate_defect_graphs(cfg);

  json summary = {{"delta", delta},
                  {"diam", diam},
                  {"defect", defect},
                  {"order", cfg.order},
                  {"girth_min", cfg.girth_min},
                  {"force_regular", cfg.force_regular},
                  {"solutions", result.solutions.size()},
                  {"exhaustive", result.exhaustive},
                  {"stats", stats_to_json(result.stats)}};
  std::cerr << summary.dump() << "\n";

  if (format == "json") {
    json payload = {{"solutions", result.solutions},
                    {"order", cfg.order},
                    {"exhaustive", result.exhaustive},
                    {"stats", stats_to_json(result.stats)}};
    em.emit(payload);
  } else if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kUsageOrIo;
    }
    for (const auto& s : result.solutions) out << s << "\n";
  } else {
    for (const auto& s : result.solutions) std::cout << s << "\n";
  }
  return result.exhaustive ? kOk : kLimitHit;
}

int run_canon(const Emitter& em, const std::string& path,
              const std::string& format) {
  std::vector<Graph> graphs;
  try {
    graphs = load_graphs(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageOrIo;
  }
  std::vector<std::string> canon;
  canon.reserve(graphs.size());
  for (const auto& g : graphs) canon.push_back(canonical_form(g).graph6);
  if (format == "json") {
    em.emit(json{{"canonical", canon}});
  } else {
    for (const auto& s : canon) std::cout << s << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "moorescope: structure, feasibility and exhaustive search for "
      "defect-2 graphs in the degree/diameter problem"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success, 1 usage or I/O error, 2 verification failure, "
      "3 search limit hit.");

  bool timing = false;
  app.add_flag("--timing", timing,
               "include timing_ms in JSON envelopes (off keeps output "
               "byte-reproducible)");

  int delta = 3, diam = 2, defect = 2;
  std::string format, path, out_path;
  bool full = false;
  int diam_min = 4, diam_max = 16;
  int jobs = 1;
  if (const char* env = std::getenv("MOORE_SCOPE_JOBS")) {
    jobs = std::max(1, std::atoi(env));
  }
  std::uint64_t limit_nodes = 0;
  double limit_seconds = 0.0;

  auto* moore_cmd = app.add_subcommand("moore", "Moore bound arithmetic");
  moore_cmd->add_option("--delta", delta, "maximum degree")->required();
  moore_cmd->add_option("--diam", diam, "diameter")->required();
  moore_cmd->add_option("--defect", defect, "defect (default 2)");
  moore_cmd->add_option("--format", format, "text|json");

  auto* feasible_cmd =
      app.add_subcommand("feasible", "defect-2 feasibility verdict");
  feasible_cmd->add_option("--delta", delta, "degree")->required();
  feasible_cmd->add_option("--diam", diam, "diameter")->required();
  feasible_cmd->add_option("--format", format, "json|text");

  auto* table_cmd =
      app.add_subcommand("table", "surviving residues per diameter");
  table_cmd->add_option("--diam-min", diam_min, "first diameter")->required();
  table_cmd->add_option("--diam-max", diam_max, "last diameter")->required();
  table_cmd->add_option("--format", format, "md|csv|json");

  auto* verify_cmd =
      app.add_subcommand("verify", "structural audit of candidate graphs");
  verify_cmd->add_option("file", path, "graph6 file, - for stdin")->required();
  verify_cmd->add_option("--delta", delta, "degree")->required();
  verify_cmd->add_option("--diam", diam, "diameter")->required();
  verify_cmd->add_flag("--full", full, "run all checks, no short-circuit");
  verify_cmd->add_option("--format", format, "text|json");

  auto* classify_cmd =
      app.add_subcommand("classify", "per-vertex short-cycle types");
  classify_cmd->add_option("file", path, "graph6 file, - for stdin")
      ->required();
  classify_cmd->add_option("--diam", diam, "diameter")->required();
  classify_cmd->add_option("--format", format, "text|json");

  auto* census_cmd =
      app.add_subcommand("census", "per-graph cycle counts vs formulas");
  census_cmd->add_option("file", path, "graph6 file, - for stdin")->required();
  census_cmd->add_option("--delta", delta, "degree")->required();
  census_cmd->add_option("--diam", diam, "diameter")->required();
  census_cmd->add_option("--format", format, "text|json");

  auto* search_cmd =
      app.add_subcommand("search", "exhaustive isomorph-free generation");
  search_cmd->add_option("--delta", delta, "degree")->required();
  search_cmd->add_option("--diam", diam, "diameter")->required();
  search_cmd->add_option("--defect", defect, "defect")->required();
  search_cmd->add_option("--jobs", jobs, "worker threads (env MOORE_SCOPE_JOBS)");
  search_cmd->add_option("--limit-nodes", limit_nodes, "node budget");
  search_cmd->add_option("--limit-seconds", limit_seconds, "time budget");
  search_cmd->add_option("--out", out_path, "write solutions to file");
  search_cmd->add_option("--format", format, "text|json");

  auto* canon_cmd = app.add_subcommand("canon", "canonical graph6 per line");
  canon_cmd->add_option("file", path, "graph6 file, - for stdin")->required();
  canon_cmd->add_option("--format", format, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsageOrIo;
  }

  Emitter em;
  em.want_timing = timing;

  try {
    if (app.got_subcommand(moore_cmd)) {
      em.subcommand = "moore";
      em.parameters = {{"delta", delta}, {"diam", diam}, {"defect", defect}};
      return run_moore(em, delta, diam, defect,
                       format.empty() ? "text" : format);
    }
    if (app.got_subcommand(feasible_cmd)) {
      em.subcommand = "feasible";
      em.parameters = {{"delta", delta}, {"diam", diam}};
      return run_feasible(em, delta, diam, format.empty() ? "json" : format);
    }
    if (app.got_subcommand(table_cmd)) {
      em.subcommand = "table";
      em.parameters = {{"diam_min", diam_min}, {"diam_max", diam_max}};
      return run_table(em, diam_min, diam_max,
                       format.empty() ? "md" : format);
    }
    if (app.got_subcommand(verify_cmd)) {
      em.subcommand = "verify";
      em.parameters = {{"file", path},
                       {"delta", delta},
                       {"diam", diam},
                       {"full", full}};
      return run_verify(em, path, delta, diam, full,
                        format.empty() ? "text" : format);
    }
    if (app.got_subcommand(classify_cmd)) {
      em.subcommand = "classify";
      em.parameters = {{"file", path}, {"diam", diam}};
      return run_classify(em, path, diam, format.empty() ? "text" : format);
    }
    if (app.got_subcommand(census_cmd)) {
      em.subcommand = "census";
      em.parameters = {{"file", path}, {"delta", delta}, {"diam", diam}};
      return run_census(em, path, delta, diam,
                        format.empty() ? "text" : format);
    }
    if (app.got_subcommand(search_cmd)) {
      em.subcommand = "search";
      em.parameters = {{"delta", delta},
                       {"diam", diam},
                       {"defect", defect},
                       {"jobs", jobs}};
      return run_search(em, delta, diam, defect, jobs, limit_nodes,
                        limit_seconds, out_path,
                        format.empty() ? "text" : format);
    }
    if (app.got_subcommand(canon_cmd)) {
      em.subcommand = "canon";
      em.parameters = {{"file", path}};
      return run_canon(em, path, format.empty() ? "text" : format);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageOrIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageOrIo;
  }
  return kUsageOrIo;
}
