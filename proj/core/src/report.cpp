#include "cyclext/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace cyclext {

std::string report_to_json(const VerificationReport& r, bool include_elapsed) {
  using nlohmann::json;
  json j;
  j["campaign"] = r.campaign;
  j["source"] = r.source;
  j["n_range"] = {r.n_min, r.n_max};
  if (r.campaign == "probe") {
    j["seed"] = r.seed;
    j["trials"] = r.trials;
  }
  j["graphs_seen"] = r.graphs_seen;
  j["in_hypothesis"] = r.in_hypothesis;
  j["agreements"] = r.agreements;
  j["disagreements"] = json::array();
  for (const auto& d : r.disagreements)
    j["disagreements"].push_back({{"graph6", d.graph6}, {"recognizer", d.recognizer}, {"oracle", d.oracle}});
  j["weak_pancyclic_checked"] = r.weak_pancyclic_checked;
  j["weak_pancyclic_failures"] = r.weak_pancyclic_failures;
  j["mechanics_checked"] = r.mechanics_checked;
  j["mechanics_failures"] = json::array();
  for (const auto& m : r.mechanics_failures)
    j["mechanics_failures"].push_back({{"graph6", m.graph6}, {"vertex", m.vertex}, {"reason", m.reason}});
  j["lemma1_cycles_checked"] = r.lemma1_cycles_checked;
  j["lemma1_violations"] = json::array();
  for (const auto& l : r.lemma1_violations)
    j["lemma1_violations"].push_back({{"graph6", l.graph6}, {"cycle", l.cycle}, {"violation", l.violation}});
  j["budget_exhausted"] = r.budget_exhausted;
  j["verdict_counts"] = r.verdict_counts;
  j["status"] = r.status();
  if (include_elapsed) j["elapsed_seconds"] = r.elapsed_seconds;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "graph6,in_hypothesis,recognizer,oracle,weakly_pancyclic\n";
  // graph6 bytes never include a comma or quote.
  for (const GraphRow& row : r.rows)
    os << row.graph6 << ',' << (row.in_hypothesis ? "true" : "false") << ',' << row.recognizer << ','
       << row.oracle << ',' << row.weakly_pancyclic << '\n';
  return os.str();
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.campaign << " (" << r.source << ", n " << r.n_min << ".." << r.n_max;
  if (r.campaign == "probe") os << ", seed " << r.seed << ", " << r.trials << " trials";
  os << ")\n";
  os << "  graphs seen        " << r.graphs_seen << "\n";
  os << "  in hypothesis      " << r.in_hypothesis << "\n";
  if (r.campaign != "corollary")
    os << "  agreements         " << r.agreements << " (" << r.disagreements.size() << " disagreements)\n";
  if (r.campaign != "theorem") {
    os << "  weakly pancyclic   " << r.weak_pancyclic_checked - r.weak_pancyclic_failures.size() << "/"
       << r.weak_pancyclic_checked << "\n";
    os << "  deletion checks    " << r.mechanics_checked << " (" << r.mechanics_failures.size()
       << " failures)\n";
  }
  if (r.campaign != "corollary")
    os << "  lemma 1 cycles     " << r.lemma1_cycles_checked << " (" << r.lemma1_violations.size()
       << " violations)\n";
  if (!r.budget_exhausted.empty()) os << "  budget exhausted   " << r.budget_exhausted.size() << "\n";
  for (const auto& [k, v] : r.verdict_counts) os << "  " << k << ": " << v << "\n";
  for (const auto& d : r.disagreements)
    os << "  DISAGREE " << d.graph6 << " recognizer=" << d.recognizer << " oracle=" << d.oracle << "\n";
  for (const auto& g : r.weak_pancyclic_failures) os << "  NOT WEAKLY PANCYCLIC " << g << "\n";
  for (const auto& m : r.mechanics_failures) os << "  DELETION " << m.graph6 << " v=" << m.vertex << " " << m.reason << "\n";
  for (const auto& l : r.lemma1_violations) os << "  LEMMA1 " << l.graph6 << " " << l.cycle << " " << l.violation << "\n";
  os << "status: " << r.status() << "\n";
  return os.str();
}

}  // namespace cyclext
