#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclext/catalog.hpp"
#include "cyclext/graph.hpp"

namespace cyclext {

/// Injective map V(pattern) -> V(host); map[p] is the host image of p.
struct Embedding {
  std::string pattern_name;
  std::vector<Vertex> map;
};

/// First strongly induced embedding in search order, or nothing. The search
/// is exhaustive: a nullopt means none exists.
std::optional<Embedding> find_strongly_induced(const Graph& host, const PatternGraph& pattern);

/// Number of strongly induced embeddings (automorphic copies counted
/// separately).
std::size_t count_strongly_induced(const Graph& host, const PatternGraph& pattern);

/// Checks injectivity, induced adjacency and the degree seal on
/// non-attachment vertices independently of the search.
bool verify_strongly_induced(const Graph& host, const PatternGraph& pattern, const Embedding& e);

/// A match found by contains_forbidden. For an F graph the embedding is an
/// isomorphism onto the whole host.
struct Obstruction {
  std::string pattern;
  Embedding embedding;
  bool whole_graph = false;
};

/// F1..F4 by isomorphism, then H1..H5 by strongly induced embedding; first
/// hit wins.
std::optional<Obstruction> contains_forbidden(const Graph& host);
std::optional<Obstruction> contains_forbidden(const Graph& host,
                                              const std::vector<PatternGraph>& patterns);

/// Re-verifies an obstruction against the host from scratch.
bool verify_obstruction(const Graph& host, const Obstruction& o,
                        const std::vector<PatternGraph>& patterns);

}  // namespace cyclext
