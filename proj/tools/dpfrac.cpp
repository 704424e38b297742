// dpfrac: decide small-scale (a,b)-DP-colorability with certificates, run
// the odd-cycle coloring construction, and compute exact complete-bipartite
// bounds. Thin shell over the dpfrac C API; all domain work happens behind
// it. Exit codes: 0 success/colorable, 1 refuted/invalid, 2 unknown/budget,
// 3 usage or parse error.

#include <dpfrac/dpfrac.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using nlohmann::json;

namespace {

struct CStr {
  char* p = nullptr;
  CStr() = default;
  CStr(const CStr&) = delete;
  CStr& operator=(const CStr&) = delete;
  ~CStr() { dpfrac_string_free(p); }
  char** out() { return &p; }
  std::string str() const { return p ? p : ""; }
};

struct GraphHandle {
  dpfrac_graph* g = nullptr;
  GraphHandle() = default;
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
  ~GraphHandle() { dpfrac_graph_destroy(g); }
};

int exit_code_for(int rc) {
  switch (rc) {
    case DPFRAC_OK: return 0;
    case DPFRAC_EBUDGET: return 2;
    case DPFRAC_EPARSE: return 3;
    case DPFRAC_EINVAL: return 3;
    default: return 1;
  }
}

[[noreturn]] void die(int rc) {
  std::fprintf(stderr, "error: %s\n", dpfrac_last_error());
  std::exit(exit_code_for(rc));
}

void check(int rc) {
  if (rc != DPFRAC_OK) die(rc);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "error: cannot read %s\n", path.c_str());
    std::exit(3);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
    std::exit(3);
  }
  out << content;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv_hex(const std::string& s) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(s)));
  return buf;
}

// The --graph argument: generator spec, inline JSON, or a file of JSON.
std::string load_graph_spec(const std::string& arg) {
  if (std::filesystem::exists(arg) && std::filesystem::is_regular_file(arg)) return read_file(arg);
  return arg;
}

struct Run {
  std::string argv_line;
  std::uint64_t seed = 1;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  json inputs = json::object();

  json wrap(const json& payload) const {
    double wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    json manifest;
    manifest["argv"] = argv_line;
    manifest["version"] = dpfrac_version();
    manifest["rng"] = dpfrac_rng_algorithm();
    manifest["seed"] = seed;
    manifest["wall_ms"] = wall_ms;
    if (!inputs.empty()) manifest["inputs"] = inputs;
    manifest["payload_digest"] = "fnv1a64:" + fnv_hex(payload.dump());
    return json{{"manifest", manifest}, {"payload", payload}};
  }

  void emit(const std::string& path, const json& payload) const {
    if (path.empty()) return;
    write_file(path, wrap(payload).dump(2) + "\n");
    std::printf("%-14s %s\n", "emitted", path.c_str());
  }
};

std::string ledger_path_default() {
  if (const char* env = std::getenv("DPFRAC_LEDGER")) return env;
  return "dpfrac_ledger.json";
}

// Folds an artifact's proven facts into the on-disk ledger.
void ledger_absorb(const std::string& path, const json& payload, bool enabled) {
  if (!enabled) return;
  std::string ledger = "{}";
  if (std::filesystem::exists(path)) ledger = read_file(path);
  CStr updated;
  check(dpfrac_ledger_add(ledger.c_str(), payload.dump().c_str(), updated.out()));
  write_file(path, json::parse(updated.str()).dump(2) + "\n");
}

void print_kv(const char* key, const std::string& value) {
  std::printf("%-14s %s\n", key, value.c_str());
}

int decide_exit(const json& verdict) {
  std::string outcome = verdict["outcome"].get<std::string>();
  if (outcome == "not-colorable") return 1;
  if (outcome == "unknown") return 2;
  return 0;
}

void print_verdict(const json& v) {
  print_kv("graph", v["graph_key"].get<std::string>());
  print_kv("pair", "a=" + std::to_string(v["a"].get<int>()) +
                       " b=" + std::to_string(v["b"].get<int>()) + " (" +
                       v["mode"].get<std::string>() + ")");
  print_kv("outcome", v["outcome"].get<std::string>());
  const json& s = v["stats"];
  print_kv("covers", std::to_string(s["covers_examined"].get<std::uint64_t>()) + " / " +
                         std::to_string(s["total_covers"].get<std::uint64_t>()));
  print_kv("nodes", std::to_string(s["nodes"].get<std::uint64_t>()));
  if (v.contains("witness_index"))
    print_kv("witness", "cover index " + std::to_string(v["witness_index"].get<std::uint64_t>()) +
                            (v["reverified"].get<bool>() ? " (re-verified)" : ""));
  if (v.contains("note")) print_kv("note", v["note"].get<std::string>());
}

std::uint64_t env_seed_default() {
  if (const char* env = std::getenv("DPFRAC_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::fprintf(stderr, "error: DPFRAC_SEED is not an integer\n");
      std::exit(3);
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DP-coloring decision, construction, and bound toolkit"};
  app.require_subcommand(1);

  Run run;
  {
    std::ostringstream line;
    for (int i = 0; i < argc; ++i) line << (i ? " " : "") << argv[i];
    run.argv_line = line.str();
  }

  std::string graph_arg, emit_path, emit_trace, ledger_path = ledger_path_default();
  bool no_ledger = false, json_out = false;
  std::uint64_t seed = env_seed_default();
  std::uint64_t budget_nodes = 10'000'000, budget_covers = 100'000, trials = 0;
  double budget_seconds = 60.0;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json_out, "print the payload JSON instead of a table");
    cmd->add_option("--seed", seed, "RNG seed (default: DPFRAC_SEED or 1)");
    cmd->add_option("--jobs", jobs, "parallel workers");
    cmd->add_option("--budget-nodes", budget_nodes, "search node budget per cover");
    cmd->add_option("--budget-covers", budget_covers, "cover enumeration budget");
    cmd->add_option("--budget-seconds", budget_seconds, "soft wall clock budget");
    cmd->add_option("--ledger", ledger_path, "ledger file for proven facts");
    cmd->add_flag("--no-ledger", no_ledger, "do not update the ledger");
  };

  // decide
  auto* decide = app.add_subcommand("decide", "decide (a,b)-DP-colorability");
  int a = 0, b = 0, compare_scaled = 0;
  std::string mode = "exhaustive";
  decide->add_option("--graph", graph_arg, "generator spec, JSON, or file")->required();
  decide->add_option("--a", a, "fold size a")->required();
  decide->add_option("--b", b, "colors required per vertex")->required();
  decide->add_option("--mode", mode, "exhaustive | sampled");
  decide->add_option("--trials", trials, "sampled covers (default 10000)");
  decide->add_option("--compare-scaled", compare_scaled,
                     "also decide (a*t, b*t) side by side, evidence only");
  decide->add_option("--emit", emit_path, "write the verdict certificate JSON");
  add_common(decide);

  // construct-odd
  auto* codd = app.add_subcommand("construct-odd", "odd-cycle coloring construction");
  int r = 0;
  std::string cover_file;
  codd->add_option("--r", r, "cycle has 2r+1 vertices")->required();
  codd->add_option("--cover", cover_file, "run on this cover JSON file instead of a random one");
  codd->add_option("--emit-trace", emit_trace, "write the full trace JSON");
  add_common(codd);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "complete-bipartite bound machinery");
  bounds->require_subcommand(1);
  int bn = 2, bm = 0, bt = 0, ba = 0;
  std::string d_str, tol_str;
  auto* upper = bounds->add_subcommand("upper", "smallest t with m below the threshold");
  upper->add_option("--n", bn, "A-side size")->required();
  upper->add_option("--m", bm, "B-side size")->required();
  upper->add_option("--emit", emit_path, "write the bound report JSON");
  add_common(upper);
  auto* lower = bounds->add_subcommand("lower", "random-matching lower bound for K_{2,m}");
  lower->add_option("--m", bm, "B-side size")->required();
  lower->add_option("--d", d_str, "certify this d (decimal or fraction)");
  lower->add_option("--tol", tol_str, "bisect the largest feasible d to this tolerance");
  lower->add_option("--emit", emit_path, "write the bound report JSON");
  add_common(lower);
  auto* census_cmd = bounds->add_subcommand("census", "bad-tuple formula vs brute force");
  census_cmd->add_option("--n", bn, "A-side size")->required();
  census_cmd->add_option("--t", bt, "subset size t")->required();
  census_cmd->add_option("--emit", emit_path, "write the census JSON");
  add_common(census_cmd);
  auto* badcover = bounds->add_subcommand("badcover", "search for refuting covers of K_{2,m}");
  badcover->add_option("--m", bm, "B-side size")->required();
  badcover->add_option("--a", ba, "fold size")->required();
  badcover->add_option("--t", bt, "colors per vertex")->required();
  badcover->add_option("--trials", trials, "random covers to try (default 100)");
  badcover->add_option("--emit", emit_path, "write the search result JSON");
  add_common(badcover);

  // verify
  auto* verify = app.add_subcommand("verify", "re-check an emitted certificate");
  std::string cert_path;
  verify->add_option("certificate", cert_path, "certificate JSON file")->required();
  add_common(verify);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "normalized cover space of a graph");
  int fold = 0;
  std::uint64_t emit_limit = 0;
  enumerate->add_option("--graph", graph_arg, "generator spec, JSON, or file")->required();
  enumerate->add_option("--fold", fold, "fold size")->required();
  enumerate->add_option("--limit", emit_limit, "covers to include in --emit output");
  enumerate->add_option("--emit", emit_path, "write the enumeration JSON");
  add_common(enumerate);

  // report
  auto* report = app.add_subcommand("report", "interval table from the ledger");
  std::string filter;
  report->add_option("--graph", filter, "only this graph key");
  add_common(report);

  CLI11_PARSE(app, argc, argv);
  run.seed = seed;

  if (decide->parsed()) {
    GraphHandle g;
    check(dpfrac_graph_create(load_graph_spec(graph_arg).c_str(), &g.g));
    json options = {{"mode", mode},
                    {"seed", seed},
                    {"jobs", jobs},
                    {"node_budget", budget_nodes},
                    {"cover_budget", budget_covers},
                    {"wall_seconds", budget_seconds}};
    if (trials > 0) options["samples"] = trials;
    CStr out;
    check(dpfrac_decide(g.g, a, b, options.dump().c_str(), out.out()));
    json verdict = json::parse(out.str());
    if (json_out) std::printf("%s\n", verdict.dump(2).c_str());
    else print_verdict(verdict);
    if (compare_scaled > 1) {
      CStr scaled;
      check(dpfrac_decide(g.g, a * compare_scaled, b * compare_scaled, options.dump().c_str(),
                          scaled.out()));
      json sv = json::parse(scaled.str());
      if (json_out) {
        std::printf("%s\n", sv.dump(2).c_str());
      } else {
        std::printf("--- scaled by t=%d (evidence only, no inference drawn) ---\n",
                    compare_scaled);
        print_verdict(sv);
      }
    }
    ledger_absorb(ledger_path, verdict, !no_ledger);
    run.emit(emit_path, verdict);
    return decide_exit(verdict);
  }

  if (codd->parsed()) {
    CStr out;
    if (!cover_file.empty()) {
      dpfrac_cover* c = nullptr;
      check(dpfrac_cover_from_json(read_file(cover_file).c_str(), &c));
      int rc = dpfrac_construct_odd_on_cover(c, out.out());
      dpfrac_cover_destroy(c);
      check(rc);
    } else {
      check(dpfrac_construct_odd(r, seed, out.out()));
    }
    json trace = json::parse(out.str());
    if (json_out) {
      std::printf("%s\n", trace.dump(2).c_str());
      run.emit(emit_trace, trace);
      return 0;
    }
    print_kv("r", std::to_string(trace["r"].get<int>()));
    print_kv("cycles", std::to_string(trace["cycles"].size()) + " (even: " +
                           std::to_string(trace["even_cycle_count"].get<int>()) + ")");
    {
      std::string w;
      for (const auto& x : trace["windings"]) w += (w.empty() ? "" : ",") + x.dump();
      print_kv("windings", w);
      std::string t;
      for (const auto& x : trace["tallies"]) t += (t.empty() ? "" : ",") + x.dump();
      print_kv("tallies", t);
    }
    print_kv("verified", "yes (b = r)");
    run.emit(emit_trace, trace);
    return 0;
  }

  if (upper->parsed()) {
    CStr out;
    check(dpfrac_bounds_upper(bn, bm, out.out()));
    json rep = json::parse(out.str());
    if (json_out) std::printf("%s\n", rep.dump(2).c_str());
    else {
    print_kv("t", std::to_string(rep["t"].get<int>()));
    print_kv("threshold", rep["threshold_str"].get<std::string>());
    print_kv("bound", rep["statement"].get<std::string>());
    }
    ledger_absorb(ledger_path, rep, !no_ledger);
    run.emit(emit_path, rep);
    return 0;
  }

  if (lower->parsed()) {
    if (d_str.empty() == tol_str.empty()) {
      std::fprintf(stderr, "error: bounds lower needs exactly one of --d or --tol\n");
      return 3;
    }
    CStr out;
    if (!d_str.empty()) check(dpfrac_bounds_lower_at(bm, d_str.c_str(), out.out()));
    else check(dpfrac_bounds_lower_bisect(bm, tol_str.c_str(), out.out()));
    json rep = json::parse(out.str());
    bool holds = rep["condition_holds"].get<bool>();
    if (json_out) {
      std::printf("%s\n", rep.dump(2).c_str());
    } else {
      if (rep.contains("d_max_str")) print_kv("d_max", rep["d_max_str"].get<std::string>());
      else print_kv("d", rep["d_str"].get<std::string>());
      print_kv("f(d)", rep["f_value"].get<std::string>());
      print_kv("condition", holds ? "holds (f < 1)" : "fails (f >= 1)");
      if (holds) print_kv("bound", rep["statement"].get<std::string>());
    }
    ledger_absorb(ledger_path, rep, !no_ledger);
    run.emit(emit_path, rep);
    return holds ? 0 : 1;
  }

  if (census_cmd->parsed()) {
    CStr out;
    check(dpfrac_bounds_census(bn, bt, out.out()));
    json rep = json::parse(out.str());
    bool match = rep["match"].get<bool>();
    if (json_out) {
      std::printf("%s\n", rep.dump(2).c_str());
    } else {
      print_kv("fold", std::to_string(rep["fold"].get<int>()));
      print_kv("formula", rep["formula_count"].get<std::string>());
      print_kv("brute", rep["brute_count"].get<std::string>());
      print_kv("total", rep["total_tuples"].get<std::string>());
      print_kv("match", match ? "yes" : "no");
    }
    run.emit(emit_path, rep);
    return match ? 0 : 1;
  }

  if (badcover->parsed()) {
    CStr out;
    if (trials == 0) trials = 100;
    check(dpfrac_bounds_badcover(bm, ba, bt, trials, seed, budget_covers, budget_nodes,
                                 out.out()));
    json rep = json::parse(out.str());
    std::string outcome = rep["outcome"].get<std::string>();
    if (json_out) {
      std::printf("%s\n", rep.dump(2).c_str());
    } else {
      print_kv("outcome", outcome);
      print_kv("trials", std::to_string(rep["trials_run"].get<std::uint64_t>()));
      if (rep.contains("cover_seed"))
        print_kv("cover_seed", std::to_string(rep["cover_seed"].get<std::uint64_t>()));
      if (rep.contains("note")) print_kv("note", rep["note"].get<std::string>());
    }
    run.emit(emit_path, rep);
    if (outcome == "witness") return 0;
    return outcome == "none-found" ? 1 : 2;
  }

  if (verify->parsed()) {
    std::string cert = read_file(cert_path);
    run.inputs[cert_path] = "fnv1a64:" + fnv_hex(cert);
    CStr out;
    check(dpfrac_verify(cert.c_str(), budget_nodes, out.out()));
    json rep = json::parse(out.str());
    if (json_out) {
      std::printf("%s\n", rep.dump(2).c_str());
    } else {
      print_kv("certificate", rep["certificate_type"].get<std::string>());
      print_kv("valid", rep["valid"].get<bool>() ? "yes" : "no");
      print_kv("detail", rep["detail"].get<std::string>());
    }
    return rep["valid"].get<bool>() ? 0 : 1;
  }

  if (enumerate->parsed()) {
    GraphHandle g;
    check(dpfrac_graph_create(load_graph_spec(graph_arg).c_str(), &g.g));
    CStr out;
    check(dpfrac_enumerate_covers(g.g, fold, budget_covers,
                                  emit_path.empty() ? 0 : emit_limit, out.out()));
    json rep = json::parse(out.str());
    if (json_out) {
      std::printf("%s\n", rep.dump(2).c_str());
    } else {
      print_kv("count", std::to_string(rep["count"].get<std::uint64_t>()));
      print_kv("tree_edges", std::to_string(rep["tree_edges"].size()));
      print_kv("cotree_edges", std::to_string(rep["cotree_edges"].size()));
    }
    run.emit(emit_path, rep);
    return 0;
  }

  if (report->parsed()) {
    std::string ledger = "{}";
    if (std::filesystem::exists(ledger_path)) ledger = read_file(ledger_path);
    CStr out;
    check(dpfrac_report(ledger.c_str(), filter.empty() ? nullptr : filter.c_str(), out.out()));
    json rep = json::parse(out.str());
    if (json_out) {
      std::printf("%s\n", rep.dump(2).c_str());
      return 0;
    }
    std::printf("%-16s %-24s %s\n", "graph", "chi*_DP", "facts");
    for (const auto& row : rep["rows"]) {
      std::printf("%-16s %-24s %d\n", row["graph"].get<std::string>().c_str(),
                  row["interval"].get<std::string>().c_str(), row["facts"].get<int>());
    }
    return 0;
  }

  return 3;
}
