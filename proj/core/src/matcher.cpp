#include "cyclext/matcher.hpp"

#include <algorithm>

#include "cyclext/isomorphism.hpp"

namespace cyclext {

namespace {

// Highest-degree pattern vertex first, then always the unplaced vertex with
// the most placed neighbours so candidates come from a host neighbourhood.
std::vector<Vertex> match_order(const Graph& p) {
  std::vector<Vertex> order;
  VertexSet placed;
  while (order.size() < p.order()) {
    Vertex best = kMaxVertices;
    std::size_t best_links = 0;
    for (Vertex v = 0; v < p.order(); ++v) {
      if (placed.contains(v)) continue;
      const std::size_t links = (p.neighbors(v) & placed).size();
      if (best == kMaxVertices || links > best_links ||
          (links == best_links && p.degree(v) > p.degree(best))) {
        best = v;
        best_links = links;
      }
    }
    order.push_back(best);
    placed.insert(best);
  }
  return order;
}

class StrongMatcher {
 public:
  StrongMatcher(const Graph& host, const PatternGraph& pattern, bool stop_at_first)
      : host_(host), pat_(pattern), order_(match_order(pattern.graph)),
        map_(pattern.graph.order(), kMaxVertices), stop_(stop_at_first) {
    // anchor_[k]: an already placed pattern neighbour of order_[k], if any
    VertexSet placed;
    for (Vertex p : order_) {
      anchor_.push_back(kMaxVertices);
      const VertexSet back = pat_.graph.neighbors(p) & placed;
      if (!back.empty()) anchor_.back() = back.first();
      placed.insert(p);
    }
  }

  std::size_t run() {
    if (pat_.graph.order() <= host_.order()) place(0);
    return found_;
  }
  const std::vector<Vertex>& first() const { return first_; }

 private:
  bool place(std::size_t k) {
    if (k == order_.size()) {
      if (found_++ == 0) first_ = map_;
      return stop_;
    }
    const Vertex p = order_[k];
    const bool sealed = !pat_.attachment.contains(p);
    const std::size_t pdeg = pat_.graph.degree(p);
    const VertexSet pool =
        anchor_[k] == kMaxVertices ? host_.vertices() - used_ : host_.neighbors(map_[anchor_[k]]) - used_;
    for (Vertex h = pool.first(); h < kMaxVertices; h = pool.next(h)) {
      const std::size_t hdeg = host_.degree(h);
      // Equal degree plus induced adjacency keeps a sealed image's whole
      // neighbourhood inside the embedding.
      if (sealed ? hdeg != pdeg : hdeg < pdeg) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        const Vertex q = order_[i];
        ok = pat_.graph.adjacent(p, q) == host_.adjacent(h, map_[q]);
      }
      if (!ok) continue;
      map_[p] = h;
      used_.insert(h);
      if (place(k + 1)) return true;
      used_.erase(h);
      map_[p] = kMaxVertices;
    }
    return false;
  }

  const Graph& host_;
  const PatternGraph& pat_;
  std::vector<Vertex> order_;
  std::vector<Vertex> anchor_;
  std::vector<Vertex> map_;
  VertexSet used_;
  bool stop_;
  std::size_t found_ = 0;
  std::vector<Vertex> first_;
};

}  // namespace

std::optional<Embedding> find_strongly_induced(const Graph& host, const PatternGraph& pattern) {
  StrongMatcher m(host, pattern, true);
  if (m.run() == 0) return std::nullopt;
  return Embedding{pattern.name, m.first()};
}

std::size_t count_strongly_induced(const Graph& host, const PatternGraph& pattern) {
  return StrongMatcher(host, pattern, false).run();
}

bool verify_strongly_induced(const Graph& host, const PatternGraph& pattern, const Embedding& e) {
  const Graph& p = pattern.graph;
  if (e.map.size() != p.order()) return false;
  VertexSet image;
  for (Vertex h : e.map) {
    if (h >= host.order() || image.contains(h)) return false;
    image.insert(h);
  }
  for (Vertex u = 0; u < p.order(); ++u)
    for (Vertex v = u + 1; v < p.order(); ++v)
      if (p.adjacent(u, v) != host.adjacent(e.map[u], e.map[v])) return false;
  for (Vertex u = 0; u < p.order(); ++u)
    if (!pattern.attachment.contains(u) && !host.neighbors(e.map[u]).is_subset_of(image)) return false;
  return true;
}

std::optional<Obstruction> contains_forbidden(const Graph& host) {
  return contains_forbidden(host, catalog());
}

std::optional<Obstruction> contains_forbidden(const Graph& host, const std::vector<PatternGraph>& patterns) {
  for (const PatternGraph& p : patterns) {
    if (!p.whole_graph()) continue;
    if (auto iso = are_isomorphic(p.graph, host); iso.isomorphic)
      return Obstruction{p.name, Embedding{p.name, iso.map}, true};
  }
  for (const PatternGraph& p : patterns) {
    if (p.whole_graph()) continue;
    if (auto e = find_strongly_induced(host, p)) return Obstruction{p.name, *e, false};
  }
  return std::nullopt;
}

bool verify_obstruction(const Graph& host, const Obstruction& o, const std::vector<PatternGraph>& patterns) {
  for (const PatternGraph& p : patterns) {
    if (p.name != o.pattern) continue;
    if (o.whole_graph) return p.whole_graph() && is_isomorphism(p.graph, host, o.embedding.map);
    return !p.whole_graph() && verify_strongly_induced(host, p, o.embedding);
  }
  return false;
}

}  // namespace cyclext
