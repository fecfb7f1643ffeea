#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "cyclext/graph.hpp"

namespace cyclext {

/// Exact clustering coefficients. Comparisons cross-multiply; no floating point.
using Rational = boost::rational<std::int64_t>;

/// Per-vertex local data gathered in a single pass over <N(v)>.
struct LocalProfile {
  Vertex vertex = 0;
  std::size_t degree = 0;
  std::size_t nbr_edges = 0;       ///< |E(<N(v)>)|
  std::optional<Rational> xi;      ///< empty when degree < 2
  bool nbrhood_connected = false;  ///< <N(v)> connected and nonempty
};

LocalProfile local_profile(const Graph& g, Vertex v);

/// xi(v) = |E(<N(v)>)| / C(deg v, 2). Throws UndefinedCoefficient when deg v < 2.
Rational clustering_coefficient(const Graph& g, Vertex v);

/// xi(G), the minimum over all vertices. Throws UndefinedCoefficient on the
/// first vertex of degree < 2 and PreconditionError on the empty graph.
Rational min_clustering_coefficient(const Graph& g);

struct LocalConnectivity {
  bool locally_connected = true;
  std::optional<Vertex> first_failure;
  bool vacuous = false;  ///< n == 0
};

/// Every <N(v)> connected and nonempty.
LocalConnectivity is_locally_connected(const Graph& g);

/// N[u] == N[v]. Throws PreconditionError when u == v.
bool are_true_twins(const Graph& g, Vertex u, Vertex v);

/// Partition of V(G) into closed-neighbourhood classes (singletons included),
/// ordered by smallest member.
std::vector<std::vector<Vertex>> true_twin_classes(const Graph& g);

/// No vertex has three pairwise non-adjacent neighbours.
bool is_claw_free(const Graph& g);

struct DegreeStats {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
};

/// Throws PreconditionError when n == 0.
DegreeStats degree_stats(const Graph& g);

}  // namespace cyclext
