#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cyclext/cycle_oracle.hpp"
#include "cyclext/graph.hpp"

namespace cyclext {

/// Which graphs get their non-extendable cycles run through the Lemma 1
/// statements.
enum class Lemma1Scope { none, in_hypothesis, all_connected };

struct CampaignOptions {
  std::uint64_t budget = kDefaultBudget;  ///< per oracle call
  std::size_t workers = 1;
  Lemma1Scope lemma1_scope = Lemma1Scope::in_hypothesis;
  std::size_t n_min = 3;     ///< builtin source only
  bool keep_rows = false;    ///< per-graph rows for CSV output
};

struct Disagreement {
  std::string graph6;
  std::string recognizer;
  std::string oracle;
  auto operator<=>(const Disagreement&) const = default;
};

struct Lemma1Record {
  std::string graph6;
  std::string cycle;
  std::string violation;
  auto operator<=>(const Lemma1Record&) const = default;
};

struct MechanicsFailure {
  std::string graph6;
  Vertex vertex = 0;
  std::string reason;
  auto operator<=>(const MechanicsFailure&) const = default;
};

/// One line of the per-graph CSV.
struct GraphRow {
  std::string graph6;
  bool in_hypothesis = false;
  std::string recognizer;  ///< verdict, "-" when out of scope
  std::string oracle;      ///< "FCE", "notFCE", "budget" or "-"
  std::string weakly_pancyclic;  ///< "true", "false" or "-"
};

struct VerificationReport {
  std::string campaign;  ///< theorem | corollary | probe
  std::string source;    ///< builtin | stream | random
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;

  std::uint64_t graphs_seen = 0;
  std::uint64_t in_hypothesis = 0;
  std::uint64_t agreements = 0;
  std::vector<Disagreement> disagreements;

  std::uint64_t weak_pancyclic_checked = 0;
  std::vector<std::string> weak_pancyclic_failures;
  std::uint64_t mechanics_checked = 0;
  std::vector<MechanicsFailure> mechanics_failures;

  std::uint64_t lemma1_cycles_checked = 0;
  std::vector<Lemma1Record> lemma1_violations;

  std::vector<std::string> budget_exhausted;
  std::map<std::string, std::uint64_t> verdict_counts;

  std::vector<GraphRow> rows;
  double elapsed_seconds = 0.0;

  bool failed() const {
    return !disagreements.empty() || !weak_pancyclic_failures.empty() ||
           !mechanics_failures.empty() || !lemma1_violations.empty();
  }
  bool vacuous() const { return in_hypothesis == 0; }
  /// "fail", "budget", "vacuous" or "pass", in that priority.
  std::string status() const;
  /// 0 pass, 1 verification failure, 2 vacuous or budget exhausted.
  int exit_code() const;
};

/// Largest n_max the builtin sweeps accept.
inline constexpr std::size_t kBuiltinMaxOrder = 8;

/// Builtin source: every connected graph of order n_min..n_max. Throws
/// PreconditionError when n_max > kBuiltinMaxOrder.
VerificationReport verify_theorem(std::size_t n_max, const CampaignOptions& opts = {});
VerificationReport verify_theorem(const std::vector<Graph>& graphs, const CampaignOptions& opts = {});

VerificationReport verify_corollary(std::size_t n_max, const CampaignOptions& opts = {});
VerificationReport verify_corollary(const std::vector<Graph>& graphs, const CampaignOptions& opts = {});

/// Largest order random_probe accepts.
inline constexpr std::size_t kProbeMaxOrder = 12;

/// Both comparisons on random graphs of order n. Sample k depends only on
/// (seed, k), so the report does not depend on the worker count.
VerificationReport random_probe(std::size_t n, std::uint64_t trials, std::uint64_t seed,
                                const CampaignOptions& opts = {});

/// The k-th sample of a probe run.
Graph sample_graph(std::size_t n, std::uint64_t seed, std::uint64_t k);

/// Runs fn(i) for i in [0, count) on `workers` threads.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& fn);

}  // namespace cyclext
