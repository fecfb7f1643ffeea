#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclext/graph.hpp"

namespace cyclext {

/// map[v] is the image in b of vertex v of a.
struct IsomorphismResult {
  bool isomorphic = false;
  std::vector<Vertex> map;
};

/// Plain backtracking. Vertices are matched only to partners with the same
/// degree and the same multiset of neighbour degrees.
IsomorphismResult are_isomorphic(const Graph& a, const Graph& b);

/// True when map is a bijection V(a) -> V(b) preserving adjacency and
/// non-adjacency.
bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& map);

/// Stable colouring obtained by iterated neighbourhood refinement from the
/// given initial colours (all zero when empty). Colour ids are label-free:
/// two isomorphic inputs get matching colourings.
std::vector<std::size_t> refine_colours(const Graph& g, std::vector<std::size_t> colours = {});

/// perm[v] is the position of v in the canonical labelling.
std::vector<Vertex> canonical_labelling(const Graph& g);

/// graph6 of the canonically relabelled graph; equal iff isomorphic.
std::string canonical_graph6(const Graph& g);

}  // namespace cyclext
