#include "cyclext/recognizer.hpp"

#include "cyclext/error.hpp"
#include "cyclext/generators.hpp"
#include "cyclext/isomorphism.hpp"
#include "cyclext/local_props.hpp"

namespace cyclext {

namespace {

bool xi_at_least_half(const Graph& g) {
  if (g.order() == 0) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    const LocalProfile p = local_profile(g, v);
    if (!p.xi || *p.xi < Rational(1, 2)) return false;
  }
  return true;
}

const Graph& k113() {
  static const Graph g = join(complete_graph(2), empty_graph(3));
  return g;
}

}  // namespace

std::vector<std::string> HypothesisCheck::failed() const {
  std::vector<std::string> out;
  if (!connected) out.emplace_back("connected");
  if (!locally_connected) out.emplace_back("locally_connected");
  if (!xi_ok) out.emplace_back("xi_ok");
  if (!delta_ok) out.emplace_back("delta_ok");
  if (!min_degree_ok) out.emplace_back("min_degree_ok");
  if (!order_ok) out.emplace_back("order_ok");
  return out;
}

HypothesisCheck check_hypotheses(const Graph& g) {
  HypothesisCheck h;
  h.order_ok = g.order() >= 3;
  h.connected = g.order() > 0 && is_connected(g);
  h.locally_connected = g.order() > 0 && is_locally_connected(g).locally_connected;
  h.xi_ok = xi_at_least_half(g);
  if (g.order() > 0) {
    const DegreeStats d = degree_stats(g);
    h.delta_ok = d.max_degree <= 6;
    h.min_degree_ok = d.min_degree >= 2;
  }
  return h;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::fully_cycle_extendable: return "FullyCycleExtendable";
    case Verdict::obstructed: return "Obstructed";
    case Verdict::out_of_scope: return "OutOfScope";
  }
  return "unknown";
}

Classification classify(const Graph& g) { return classify(g, catalog()); }

Classification classify(const Graph& g, const std::vector<PatternGraph>& patterns) {
  Classification c;
  const HypothesisCheck h = check_hypotheses(g);
  if (!h.all()) {
    c.verdict = Verdict::out_of_scope;
    c.failed = h.failed();
    return c;
  }
  const std::size_t delta = degree_stats(g).max_degree;
  if (delta <= 3) {
    const bool known = are_isomorphic(g, complete_graph(3)).isomorphic ||
                       are_isomorphic(g, complete_graph(4)).isomorphic ||
                       are_isomorphic(g, k4_minus_edge()).isomorphic;
    if (!known)
      throw InternalContradiction("classify: in-hypothesis graph with max degree " +
                                  std::to_string(delta) + " is not K3, K4 or K4-e");
    c.verdict = Verdict::fully_cycle_extendable;
    return c;
  }
  if (delta == 4) {
    if (auto iso = are_isomorphic(k113(), g); iso.isomorphic) {
      c.verdict = Verdict::obstructed;
      c.obstruction = Obstruction{kK113Name, Embedding{kK113Name, iso.map}, true};
    } else {
      c.verdict = Verdict::fully_cycle_extendable;
    }
    return c;
  }
  if (auto o = contains_forbidden(g, patterns)) {
    c.verdict = Verdict::obstructed;
    c.obstruction = std::move(o);
  } else {
    c.verdict = Verdict::fully_cycle_extendable;
  }
  return c;
}

bool verify_classification(const Graph& g, const Classification& c,
                           const std::vector<PatternGraph>& patterns) {
  if (c.verdict != Verdict::obstructed) return !c.obstruction.has_value();
  if (!c.obstruction) return false;
  if (c.obstruction->pattern == kK113Name)
    return is_isomorphism(k113(), g, c.obstruction->embedding.map);
  return verify_obstruction(g, *c.obstruction, patterns);
}

WeakPancyclicPrediction predict_weakly_pancyclic(const Graph& g) {
  WeakPancyclicPrediction p;
  const HypothesisCheck h = check_hypotheses(g);
  bool parts_ok = g.order() > 0;
  for (const VertexSet& comp : components(g)) parts_ok = parts_ok && comp.size() >= 3;
  if (!parts_ok) p.failed.emplace_back("component_order");
  if (!h.locally_connected) p.failed.emplace_back("locally_connected");
  if (!h.xi_ok) p.failed.emplace_back("xi_ok");
  if (!h.delta_ok) p.failed.emplace_back("delta_ok");
  if (!h.min_degree_ok) p.failed.emplace_back("min_degree_ok");
  p.in_scope = p.failed.empty();
  p.weakly_pancyclic = p.in_scope;
  return p;
}

}  // namespace cyclext
