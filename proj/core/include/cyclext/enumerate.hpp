#pragma once

#include <cstddef>
#include <vector>

#include "cyclext/graph.hpp"

namespace cyclext {

/// Largest order handled by the enumerator. n = 9 (261080 classes) takes
/// about a minute; bigger corpora come in as graph6 streams.
inline constexpr std::size_t kEnumerateMaxOrder = 9;

/// One canonically labelled representative per isomorphism class of
/// connected graphs on n vertices, sorted by graph6. Throws
/// PreconditionError unless 1 <= n <= kEnumerateMaxOrder.
std::vector<Graph> enumerate_connected_graphs(std::size_t n);

/// Connected graphs for every order in [lo, hi], concatenated by order.
std::vector<Graph> enumerate_connected_graphs(std::size_t lo, std::size_t hi);

}  // namespace cyclext
