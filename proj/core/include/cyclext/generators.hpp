#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cyclext/graph.hpp"

namespace cyclext {

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
/// C_n, n >= 3, edges i ~ i+1 mod n.
Graph cycle_graph(std::size_t n);
/// P_n on n >= 1 vertices.
Graph path_graph(std::size_t n);
/// K_{1,k}, center 0.
Graph star_graph(std::size_t leaves);
/// K4 minus the edge {2,3}.
Graph k4_minus_edge();

/// Disjoint copies of a and b (a first) plus every a-b edge.
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph complement(const Graph& g);

/// Complete multipartite graph with the given part sizes (parts laid out in
/// order).
Graph complete_multipartite(std::span<const std::size_t> parts);

/// P_n strong product K_2, n >= 2. Vertex (i, a) has id 2i + a; two vertices
/// are adjacent iff their path positions differ by at most one.
Graph strong_product_path_k2(std::size_t n);

/// Named family members used by the CLI and the tests.
std::vector<NamedGraph> standard_graphs();

}  // namespace cyclext
