#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cyclext/catalog.hpp"
#include "cyclext/cycle_oracle.hpp"
#include "cyclext/enumerate.hpp"
#include "cyclext/graph6.hpp"
#include "cyclext/graph_input.hpp"
#include "cyclext/harness.hpp"
#include "cyclext/local_props.hpp"
#include "cyclext/recognizer.hpp"
#include "cyclext/report.hpp"

using namespace cyclext;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::string format = "text";
  std::string input;  // empty means stdin
  std::uint64_t budget = kDefaultBudget;
  std::size_t workers = 1;
};

std::string rational(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::vector<Graph> load_input(const Config& cfg) {
  if (cfg.input.empty() || cfg.input == "-") return read_graphs(std::cin);
  std::ifstream in(cfg.input);
  if (!in) throw std::runtime_error("cannot open " + cfg.input);
  return read_graphs(in);
}

json analyze_json(const Graph& g) {
  json j;
  j["graph6"] = write_graph6(g);
  j["n"] = g.order();
  j["m"] = g.size();
  json verts = json::array();
  std::optional<Rational> xi_g;
  bool xi_defined = g.order() > 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const LocalProfile p = local_profile(g, v);
    json jv{{"vertex", v}, {"degree", p.degree}, {"nbr_edges", p.nbr_edges},
            {"nbrhood_connected", p.nbrhood_connected}};
    if (p.xi) {
      jv["xi"] = rational(*p.xi);
      if (!xi_g || *p.xi < *xi_g) xi_g = p.xi;
    } else {
      jv["xi"] = nullptr;
      xi_defined = false;
    }
    verts.push_back(jv);
  }
  j["vertices"] = verts;
  j["xi"] = xi_defined && xi_g ? json(rational(*xi_g)) : json(nullptr);
  if (g.order() > 0) {
    const DegreeStats d = degree_stats(g);
    j["min_degree"] = d.min_degree;
    j["max_degree"] = d.max_degree;
  }
  const LocalConnectivity lc = is_locally_connected(g);
  j["locally_connected"] = lc.locally_connected;
  if (lc.first_failure) j["first_failure"] = *lc.first_failure;
  j["claw_free"] = is_claw_free(g);
  j["true_twin_classes"] = true_twin_classes(g);
  return j;
}

std::string analyze_text(const json& j) {
  std::ostringstream os;
  os << j["graph6"].get<std::string>() << "  n=" << j["n"] << " m=" << j["m"] << "\n";
  for (const auto& v : j["vertices"]) {
    os << "  v" << v["vertex"] << "  deg " << v["degree"] << "  xi "
       << (v["xi"].is_null() ? std::string("undefined") : v["xi"].get<std::string>())
       << (v["nbrhood_connected"].get<bool>() ? "" : "  N(v) disconnected") << "\n";
  }
  if (j.contains("min_degree")) os << "  degree range      " << j["min_degree"] << ".." << j["max_degree"] << "\n";
  os << "  xi(G)             " << (j["xi"].is_null() ? std::string("undefined") : j["xi"].get<std::string>()) << "\n";
  os << "  locally connected " << (j["locally_connected"].get<bool>() ? "yes" : "no") << "\n";
  os << "  claw-free         " << (j["claw_free"].get<bool>() ? "yes" : "no") << "\n";
  os << "  true twin classes";
  for (const auto& cls : j["true_twin_classes"])
    if (cls.size() > 1) os << " " << cls.dump();
  os << "\n";
  return os.str();
}

int cmd_analyze(const Config& cfg) {
  json all = json::array();
  for (const Graph& g : load_input(cfg)) all.push_back(analyze_json(g));
  if (cfg.format == "json") {
    std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  } else {
    for (const auto& j : all) std::cout << analyze_text(j);
  }
  return kExitPass;
}

std::string verdict_text(const Classification& c) {
  std::string s = to_string(c.verdict);
  if (c.obstruction) s += "(" + c.obstruction->pattern + ")";
  if (!c.failed.empty()) {
    s += "(";
    for (std::size_t i = 0; i < c.failed.size(); ++i) s += (i ? "," : "") + c.failed[i];
    s += ")";
  }
  return s;
}

int cmd_check(const Config& cfg, bool with_oracle) {
  json all = json::array();
  bool disagree = false;
  bool budget = false;
  for (const Graph& g : load_input(cfg)) {
    const Classification c = classify(g);
    json j{{"graph6", write_graph6(g)}, {"verdict", to_string(c.verdict)}, {"label", verdict_text(c)}};
    if (c.obstruction) {
      j["pattern"] = c.obstruction->pattern;
      j["embedding"] = c.obstruction->embedding.map;
    }
    if (!c.failed.empty()) j["failed"] = c.failed;
    if (with_oracle && c.verdict != Verdict::out_of_scope) {
      try {
        const FceResult f = is_fully_cycle_extendable(g, {cfg.budget});
        j["oracle"] = f.fully_cycle_extendable;
        if (f.counterexample) j["counterexample"] = to_string(*f.counterexample);
        if (f.triangle_free_vertex) j["triangle_free_vertex"] = *f.triangle_free_vertex;
        const bool agree = f.fully_cycle_extendable == (c.verdict == Verdict::fully_cycle_extendable);
        j["agree"] = agree;
        disagree = disagree || !agree;
      } catch (const BudgetExceeded& e) {
        j["oracle"] = "budget";
        budget = true;
      }
    }
    all.push_back(j);
  }
  if (cfg.format == "json") {
    std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "graph6,verdict,label,agree\n";
    for (const auto& j : all)
      std::cout << j["graph6"].get<std::string>() << ',' << j["verdict"].get<std::string>() << ",\""
                << j["label"].get<std::string>() << "\"," << (j.contains("agree") ? j["agree"].dump() : "-")
                << "\n";
  } else {
    for (const auto& j : all) {
      std::cout << j["graph6"].get<std::string>() << "  " << j["label"].get<std::string>();
      if (j.contains("agree")) std::cout << "  oracle " << j["oracle"].dump() << "  agree=" << j["agree"].dump();
      else if (j.contains("oracle")) std::cout << "  oracle budget exhausted";
      std::cout << "\n";
    }
  }
  if (disagree) return kExitFail;
  return budget ? kExitUsage : kExitPass;
}

struct VerifyArgs {
  std::string campaign = "theorem";
  std::optional<std::size_t> n;
  std::size_t n_min = 3;
  std::uint64_t seed = 1;
  std::uint64_t trials = 1000;
  std::string lemma1 = "in_hypothesis";
  bool stream = false;
  bool elapsed = false;
};

int cmd_verify(const Config& cfg, const VerifyArgs& a) {
  CampaignOptions opts;
  opts.budget = cfg.budget;
  opts.workers = cfg.workers;
  opts.n_min = a.n_min;
  opts.keep_rows = cfg.format == "csv";
  opts.lemma1_scope = a.lemma1 == "none"            ? Lemma1Scope::none
                      : a.lemma1 == "all_connected" ? Lemma1Scope::all_connected
                                                    : Lemma1Scope::in_hypothesis;
  const bool from_stream = a.stream || !cfg.input.empty();
  VerificationReport r;
  if (a.campaign == "probe") {
    if (!a.n) throw CLI::ValidationError("--n", "probe needs --n");
    r = random_probe(*a.n, a.trials, a.seed, opts);
  } else if (from_stream) {
    const std::vector<Graph> graphs = load_input(cfg);
    r = a.campaign == "theorem" ? verify_theorem(graphs, opts) : verify_corollary(graphs, opts);
  } else {
    if (!a.n) throw CLI::ValidationError("--n", "builtin sweeps need --n (or pass --input / --stream)");
    r = a.campaign == "theorem" ? verify_theorem(*a.n, opts) : verify_corollary(*a.n, opts);
  }
  if (cfg.format == "json") std::cout << report_to_json(r, a.elapsed);
  else if (cfg.format == "csv") std::cout << report_to_csv(r);
  else std::cout << report_to_text(r);
  return r.exit_code();
}

int cmd_enumerate(std::size_t n) {
  for (const Graph& g : enumerate_connected_graphs(n)) std::cout << write_graph6(g) << "\n";
  return kExitPass;
}

int cmd_catalog(const Config& cfg) {
  const auto patterns = parse_catalog(embedded_catalog_text());
  const auto checks = run_self_checks(patterns, cfg.budget);
  bool ok = patterns.size() == 9;
  for (const auto& c : checks) ok = ok && c.passed;
  if (cfg.format == "json") {
    json j;
    j["patterns"] = json::array();
    for (const auto& p : patterns)
      j["patterns"].push_back({{"name", p.name}, {"graph6", write_graph6(p.graph)}, {"n", p.graph.order()},
                               {"edges", p.graph.edges()}, {"attachment", p.attachment.to_vector()},
                               {"cut_degrees", p.cut_degrees}, {"provenance", p.provenance}});
    j["self_checks"] = json::array();
    for (const auto& c : checks)
      j["self_checks"].push_back({{"pattern", c.pattern}, {"check", c.check}, {"passed", c.passed}, {"detail", c.detail}});
    j["status"] = ok ? "pass" : "fail";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << format_catalog(patterns) << "\n";
    for (const auto& c : checks)
      std::cout << (c.passed ? "ok   " : "FAIL ") << c.pattern << " " << c.check
                << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
    std::cout << patterns.size() << " patterns, " << (ok ? "all self-checks pass" : "self-check failures") << "\n";
  }
  return ok ? kExitPass : kExitFail;
}

template <typename T>
void env_default(const char* name, T& target) {
  if (const char* v = std::getenv(name); v && *v) {
    std::istringstream in(v);
    T parsed{};
    if (!(in >> parsed) || !in.eof()) throw CLI::ValidationError(name, std::string("bad value '") + v + "'");
    target = parsed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local-structure and cycle-extendability toolkit for graphs with small maximum degree"};
  app.require_subcommand(1);
  // global flags may also follow the subcommand
  app.fallthrough();
  Config cfg;
  try {
    env_default("CYCLEXT_BUDGET", cfg.budget);
    env_default("CYCLEXT_WORKERS", cfg.workers);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--budget", cfg.budget, "Work budget per oracle call (env CYCLEXT_BUDGET)")->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  app.add_option("--workers", cfg.workers, "Worker threads (env CYCLEXT_WORKERS)")->check(CLI::Range(std::size_t{1}, std::size_t{1024}));
  app.add_option("--input", cfg.input, "graph6 stream or edge-list file; stdin when omitted or '-'");

  auto* analyze = app.add_subcommand("analyze", "Local profile of each input graph");
  bool with_oracle = false;
  auto* check = app.add_subcommand("check", "Classify each input graph");
  check->add_flag("--oracle", with_oracle, "Also run the fully-cycle-extendable oracle");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->add_option("--campaign", va.campaign)->check(CLI::IsMember({"theorem", "corollary", "probe"}));
  verify->add_option("--n", va.n, "Largest order (builtin sweep) or probe order");
  verify->add_option("--n-min", va.n_min, "Smallest order of a builtin sweep");
  verify->add_option("--seed", va.seed, "Probe seed");
  verify->add_option("--trials", va.trials, "Probe samples");
  verify->add_option("--lemma1", va.lemma1)->check(CLI::IsMember({"none", "in_hypothesis", "all_connected"}));
  verify->add_flag("--stream", va.stream, "Read graphs from --input or stdin instead of the enumerator");
  verify->add_flag("--elapsed", va.elapsed, "Include wall time in the JSON report");

  std::size_t enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Connected graphs of one order, graph6 per line");
  enumerate->add_option("--n", enum_n)->required()->check(CLI::Range(std::size_t{1}, kEnumerateMaxOrder));

  auto* cat = app.add_subcommand("catalog", "Print the forbidden patterns and rerun their self-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg);
    if (check->parsed()) return cmd_check(cfg, with_oracle);
    if (verify->parsed()) return cmd_verify(cfg, va);
    if (enumerate->parsed()) return cmd_enumerate(enum_n);
    if (cat->parsed()) return cmd_catalog(cfg);
  } catch (const Graph6Error& e) {
    std::cerr << "parse error at byte offset " << e.offset() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const EdgeListError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
