#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclext/vertex_set.hpp"

namespace cyclext {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
///
/// Adjacency is kept symmetric and irreflexive by every mutator; a graph is
/// treated as an immutable value once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept;  ///< edge count

  bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const noexcept { return adj_[v]; }
  std::size_t degree(Vertex v) const noexcept { return adj_[v].size(); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::vector<VertexSet> adj_;
};

/// A graph with a human-readable label such as "K4" or "P3xK2".
struct NamedGraph {
  Graph graph;
  std::string label;
};

/// The subgraph induced by a vertex set, with both directions of the relabeling.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;        ///< new id -> host id
  std::vector<std::ptrdiff_t> to_sub; ///< host id -> new id, or -1
};

/// N(v). Throws PreconditionError when v is out of range.
VertexSet open_neighborhood(const Graph& g, Vertex v);
/// N[v] = N(v) + v.
VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// <S>. Vertices keep their relative order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// g - v, relabeled to 0..n-2 preserving order.
Graph remove_vertex(const Graph& g, Vertex v);

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Vertex sets of the connected components of g - removed.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {});

bool is_connected(const Graph& g);

/// Vertices reachable from `start` without leaving `within`.
VertexSet reachable(const Graph& g, Vertex start, const VertexSet& within);

}  // namespace cyclext
