#include "cyclext/generators.hpp"

#include <string>

#include "cyclext/error.hpp"

namespace cyclext {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle_graph: n must be at least 3");
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(std::size_t n) {
  require(n >= 1, "path_graph: n must be at least 1");
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph star_graph(std::size_t leaves) {
  require(leaves >= 1, "star_graph: need at least one leaf");
  Graph g(leaves + 1);
  for (Vertex i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph k4_minus_edge() {
  Graph g = complete_graph(4);
  g.remove_edge(2, 3);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const std::size_t off = a.order();
  Graph g(off + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + off, v + off);
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph complete_multipartite(std::span<const std::size_t> parts) {
  Graph g;
  for (std::size_t p : parts) g = join(g, empty_graph(p));
  return g;
}

Graph strong_product_path_k2(std::size_t n) {
  require(n >= 2, "strong_product_path_k2: n must be at least 2");
  Graph g(2 * n);
  for (Vertex u = 0; u < 2 * n; ++u)
    for (Vertex v = u + 1; v < 2 * n; ++v)
      if (v / 2 - u / 2 <= 1) g.add_edge(u, v);
  return g;
}

std::vector<NamedGraph> standard_graphs() {
  std::vector<NamedGraph> out;
  for (std::size_t n = 3; n <= 8; ++n) out.push_back({complete_graph(n), "K" + std::to_string(n)});
  for (std::size_t n = 4; n <= 8; ++n) out.push_back({cycle_graph(n), "C" + std::to_string(n)});
  for (std::size_t n = 3; n <= 6; ++n) out.push_back({path_graph(n), "P" + std::to_string(n)});
  out.push_back({star_graph(3), "K1,3"});
  out.push_back({k4_minus_edge(), "K4-e"});
  out.push_back({join(complete_graph(2), empty_graph(3)), "K2+K3bar"});
  out.push_back({join(complete_graph(3), empty_graph(4)), "K3+K4bar"});
  for (std::size_t n = 2; n <= 6; ++n)
    out.push_back({strong_product_path_k2(n), "P" + std::to_string(n) + "xK2"});
  return out;
}

}  // namespace cyclext
