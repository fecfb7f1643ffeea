#include "cyclext/local_props.hpp"

#include <algorithm>

#include "cyclext/error.hpp"

namespace cyclext {

LocalProfile local_profile(const Graph& g, Vertex v) {
  const VertexSet nbrs = open_neighborhood(g, v);
  LocalProfile p;
  p.vertex = v;
  p.degree = nbrs.size();

  // Edge count and connectivity share one sweep: each BFS pop counts the
  // edges from the popped vertex into the neighbourhood.
  std::size_t twice_edges = 0;
  VertexSet remaining = nbrs;
  std::size_t pieces = 0;
  while (!remaining.empty()) {
    ++pieces;
    VertexSet frontier;
    frontier.insert(remaining.first());
    remaining -= frontier;
    while (!frontier.empty()) {
      Vertex u = frontier.first();
      frontier.erase(u);
      VertexSet inside = g.neighbors(u) & nbrs;
      twice_edges += inside.size();
      inside &= remaining;
      remaining -= inside;
      frontier |= inside;
    }
  }
  p.nbr_edges = twice_edges / 2;
  p.nbrhood_connected = pieces == 1;
  if (p.degree >= 2) {
    const auto pairs = static_cast<std::int64_t>(p.degree * (p.degree - 1) / 2);
    p.xi = Rational(static_cast<std::int64_t>(p.nbr_edges), pairs);
  }
  return p;
}

Rational clustering_coefficient(const Graph& g, Vertex v) {
  LocalProfile p = local_profile(g, v);
  if (!p.xi) throw UndefinedCoefficient(v, p.degree);
  return *p.xi;
}

Rational min_clustering_coefficient(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("min_clustering_coefficient: empty graph");
  Rational best(1);
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, clustering_coefficient(g, v));
  return best;
}

LocalConnectivity is_locally_connected(const Graph& g) {
  LocalConnectivity out;
  out.vacuous = g.order() == 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!local_profile(g, v).nbrhood_connected) {
      out.locally_connected = false;
      out.first_failure = v;
      break;
    }
  }
  return out;
}

bool are_true_twins(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw PreconditionError("are_true_twins: u == v");
  return closed_neighborhood(g, u) == closed_neighborhood(g, v);
}

std::vector<std::vector<Vertex>> true_twin_classes(const Graph& g) {
  std::vector<std::vector<Vertex>> classes;
  VertexSet assigned;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (assigned.contains(v)) continue;
    const VertexSet nv = closed_neighborhood(g, v);
    std::vector<Vertex> cls{v};
    for (Vertex w = v + 1; w < g.order(); ++w)
      if (!assigned.contains(w) && closed_neighborhood(g, w) == nv) {
        cls.push_back(w);
        assigned.insert(w);
      }
    assigned.insert(v);
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool is_claw_free(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexSet nbrs = g.neighbors(v);
    for (Vertex a = nbrs.first(); a < kMaxVertices; a = nbrs.next(a)) {
      const VertexSet after_a = nbrs - g.neighbors(a);
      for (Vertex b = after_a.next(a); b < kMaxVertices; b = after_a.next(b)) {
        const VertexSet third = after_a - g.neighbors(b);
        if (third.next(b) < kMaxVertices) return false;
      }
    }
  }
  return true;
}

DegreeStats degree_stats(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("degree_stats: empty graph");
  DegreeStats s{g.degree(0), g.degree(0)};
  for (Vertex v = 1; v < g.order(); ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  return s;
}

}  // namespace cyclext
