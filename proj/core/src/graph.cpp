#include "cyclext/graph.hpp"

#include <algorithm>

#include "cyclext/error.hpp"

namespace cyclext {

Graph::Graph(std::size_t n) : n_(n), adj_(n) {
  if (n > kMaxVertices)
    throw PreconditionError("graph order " + std::to_string(n) +
                            " exceeds the bitset capacity of " +
                            std::to_string(kMaxVertices));
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t Graph::size() const noexcept {
  std::size_t twice = 0;
  for (const auto& s : adj_) twice += s.size();
  return twice / 2;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_)
    throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(n_));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u].erase(v);
  adj_[v].erase(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    adj_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

VertexSet open_neighborhood(const Graph& g, Vertex v) {
  if (v >= g.order())
    throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  return g.neighbors(v);
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet s = open_neighborhood(g, v);
  s.insert(v);
  return s;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (!s.is_subset_of(g.vertices()))
    throw PreconditionError("induced_subgraph: vertex set not contained in V(g)");
  InducedSubgraph out;
  out.to_host = s.to_vector();
  out.to_sub.assign(g.order(), -1);
  for (std::size_t i = 0; i < out.to_host.size(); ++i)
    out.to_sub[out.to_host[i]] = static_cast<std::ptrdiff_t>(i);
  out.graph = Graph(out.to_host.size());
  for (std::size_t i = 0; i < out.to_host.size(); ++i)
    (g.neighbors(out.to_host[i]) & s).for_each([&](Vertex w) {
      auto j = static_cast<std::size_t>(out.to_sub[w]);
      if (i < j) out.graph.add_edge(i, j);
    });
  return out;
}

Graph remove_vertex(const Graph& g, Vertex v) {
  VertexSet keep = g.vertices();
  keep.erase(v);
  return induced_subgraph(g, keep).graph;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order())
    throw PreconditionError("relabel: permutation size mismatch");
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

VertexSet reachable(const Graph& g, Vertex start, const VertexSet& within) {
  VertexSet seen;
  seen.insert(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices() - removed;
  while (!left.empty()) {
    VertexSet comp = reachable(g, left.first(), left);
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reachable(g, 0, g.vertices()).size() == g.order();
}

}  // namespace cyclext
