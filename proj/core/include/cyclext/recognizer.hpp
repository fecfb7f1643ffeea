#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclext/graph.hpp"
#include "cyclext/matcher.hpp"

namespace cyclext {

/// Name used for the single Δ = 4 obstruction, K2 + complement of K3.
inline constexpr const char* kK113Name = "K2+K3bar";

/// Each field is computed on its own; a false field never short-circuits the
/// others.
struct HypothesisCheck {
  bool connected = false;
  bool locally_connected = false;
  bool xi_ok = false;          ///< ξ(G) >= 1/2; false when some degree is < 2
  bool delta_ok = false;       ///< Δ <= 6
  bool min_degree_ok = false;  ///< δ >= 2
  bool order_ok = false;       ///< n >= 3

  bool all() const {
    return connected && locally_connected && xi_ok && delta_ok && min_degree_ok && order_ok;
  }
  /// Names of the false fields, in declaration order.
  std::vector<std::string> failed() const;
};

HypothesisCheck check_hypotheses(const Graph& g);

enum class Verdict { fully_cycle_extendable, obstructed, out_of_scope };

const char* to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::out_of_scope;
  std::optional<Obstruction> obstruction;  ///< set iff obstructed
  std::vector<std::string> failed;         ///< set iff out_of_scope
};

/// Polynomial-time verdict. Never calls the cycle oracles. Throws
/// InternalContradiction if a hypothesis-class graph with Δ <= 3 is not one
/// of K3, K4, K4-e.
Classification classify(const Graph& g);
Classification classify(const Graph& g, const std::vector<PatternGraph>& patterns);

/// Re-verifies an obstructed verdict's witness against g.
bool verify_classification(const Graph& g, const Classification& c,
                           const std::vector<PatternGraph>& patterns);

struct WeakPancyclicPrediction {
  bool in_scope = false;
  bool weakly_pancyclic = false;
  std::vector<std::string> failed;
};

/// Under its preconditions (locally connected, 2 <= Δ <= 6, ξ(G) >= 1/2,
/// every component of order >= 3) the answer is always true; outside them the
/// result is out of scope. Disconnected inputs are allowed.
WeakPancyclicPrediction predict_weakly_pancyclic(const Graph& g);

}  // namespace cyclext
