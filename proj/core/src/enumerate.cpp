#include "cyclext/enumerate.hpp"

#include <map>
#include <string>

#include "cyclext/error.hpp"
#include "cyclext/graph6.hpp"
#include "cyclext/isomorphism.hpp"

namespace cyclext {

namespace {

// Every connected graph has a vertex whose removal leaves it connected, so
// level n is reached from level n-1 by adding a vertex with a nonempty
// neighbourhood.
std::vector<Graph> next_level(const std::vector<Graph>& prev, std::size_t n) {
  std::map<std::string, Graph> seen;
  const std::size_t m = n - 1;
  for (const Graph& base : prev) {
    for (std::uint64_t nbrs = 1; nbrs < (std::uint64_t{1} << m); ++nbrs) {
      Graph g(n);
      for (auto [u, v] : base.edges()) g.add_edge(u, v);
      for (Vertex u = 0; u < m; ++u)
        if ((nbrs >> u) & 1U) g.add_edge(u, m);
      std::string key = canonical_graph6(g);
      if (seen.contains(key)) continue;
      Graph canon = parse_graph6(key);
      seen.emplace(std::move(key), std::move(canon));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [key, g] : seen) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<Graph> enumerate_connected_graphs(std::size_t n) {
  if (n < 1 || n > kEnumerateMaxOrder)
    throw PreconditionError("enumerate_connected_graphs: n must be in 1.." +
                            std::to_string(kEnumerateMaxOrder) +
                            "; feed larger orders as a graph6 stream");
  std::vector<Graph> level{Graph(1)};
  for (std::size_t k = 2; k <= n; ++k) level = next_level(level, k);
  return level;
}

std::vector<Graph> enumerate_connected_graphs(std::size_t lo, std::size_t hi) {
  std::vector<Graph> out;
  if (lo > hi) return out;
  if (lo < 1 || hi > kEnumerateMaxOrder)
    throw PreconditionError("enumerate_connected_graphs: range outside 1.." +
                            std::to_string(kEnumerateMaxOrder));
  std::vector<Graph> level{Graph(1)};
  for (std::size_t k = 1; k <= hi; ++k) {
    if (k > 1) level = next_level(level, k);
    if (k >= lo) out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace cyclext
