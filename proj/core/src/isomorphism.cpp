#include "cyclext/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cyclext/graph6.hpp"

namespace cyclext {

namespace {

using Invariant = std::pair<std::size_t, std::vector<std::size_t>>;

std::vector<Invariant> degree_invariants(const Graph& g) {
  std::vector<Invariant> inv(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    inv[v].first = g.degree(v);
    g.neighbors(v).for_each([&](Vertex u) { inv[v].second.push_back(g.degree(u)); });
    std::sort(inv[v].second.begin(), inv[v].second.end());
  }
  return inv;
}

// Pattern vertices in an order where each one (after the first of its
// component) already has a placed neighbour.
std::vector<Vertex> connected_order(const Graph& g) {
  std::vector<Vertex> order;
  VertexSet placed;
  while (order.size() < g.order()) {
    Vertex best = kMaxVertices;
    std::size_t best_links = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (placed.contains(v)) continue;
      const std::size_t links = (g.neighbors(v) & placed).size();
      if (best == kMaxVertices || links > best_links ||
          (links == best_links && g.degree(v) > g.degree(best))) {
        best = v;
        best_links = links;
      }
    }
    order.push_back(best);
    placed.insert(best);
  }
  return order;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b)
      : a_(a), b_(b), inv_a_(degree_invariants(a)), inv_b_(degree_invariants(b)),
        order_(connected_order(a)), map_(a.order(), kMaxVertices) {}

  bool run() { return place(0); }
  const std::vector<Vertex>& map() const { return map_; }

 private:
  bool place(std::size_t k) {
    if (k == order_.size()) return true;
    const Vertex p = order_[k];
    for (Vertex h = 0; h < b_.order(); ++h) {
      if (used_.contains(h) || inv_a_[p] != inv_b_[h]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        const Vertex q = order_[i];
        ok = a_.adjacent(p, q) == b_.adjacent(h, map_[q]);
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

  const Graph& a_;
  const Graph& b_;
  std::vector<Invariant> inv_a_, inv_b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  VertexSet used_;
};

std::size_t count_colours(const std::vector<std::size_t>& c) {
  std::vector<std::size_t> s = c;
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g) {}

  std::vector<Vertex> run() {
    search(refine_colours(g_));
    return best_perm_;
  }

 private:
  void search(const std::vector<std::size_t>& colours) {
    const std::size_t n = g_.order();
    if (count_colours(colours) == n) {
      std::vector<Vertex> perm(colours.begin(), colours.end());
      std::string cert = write_graph6(relabel(g_, perm));
      if (best_perm_.empty() || cert > best_cert_) {
        best_cert_ = std::move(cert);
        best_perm_ = std::move(perm);
      }
      return;
    }
    // Target cell: the smallest colour id shared by two or more vertices.
    std::vector<std::size_t> size(n, 0);
    for (std::size_t c : colours) ++size[c];
    std::size_t target = 0;
    while (size[target] < 2) ++target;

    std::vector<Vertex> cell;
    for (Vertex v = 0; v < n; ++v)
      if (colours[v] == target) cell.push_back(v);

    // Swapping two twins is an automorphism that fixes every earlier
    // individualisation, so one representative per twin class suffices.
    std::vector<Vertex> reps;
    for (Vertex v : cell) {
      bool twin = false;
      for (Vertex r : reps) {
        VertexSet nv = g_.neighbors(v), nr = g_.neighbors(r);
        nv.erase(r);
        nr.erase(v);
        if (nv == nr) {
          twin = true;
          break;
        }
      }
      if (!twin) reps.push_back(v);
    }

    for (Vertex v : reps) {
      std::vector<std::size_t> split(n);
      for (Vertex u = 0; u < n; ++u) split[u] = 2 * colours[u] + (colours[u] == target && u != v ? 1 : 0);
      search(refine_colours(g_, std::move(split)));
    }
  }

  const Graph& g_;
  std::string best_cert_;
  std::vector<Vertex> best_perm_;
};

}  // namespace

IsomorphismResult are_isomorphic(const Graph& a, const Graph& b) {
  IsomorphismResult r;
  if (a.order() != b.order() || a.size() != b.size()) return r;
  auto ia = degree_invariants(a), ib = degree_invariants(b);
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  if (ia != ib) return r;
  IsoSearch s(a, b);
  if (s.run()) {
    r.isomorphic = true;
    r.map = s.map();
  }
  return r;
}

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& map) {
  if (a.order() != b.order() || map.size() != a.order()) return false;
  VertexSet image;
  for (Vertex v : map) {
    if (v >= b.order() || image.contains(v)) return false;
    image.insert(v);
  }
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = u + 1; v < a.order(); ++v)
      if (a.adjacent(u, v) != b.adjacent(map[u], map[v])) return false;
  return true;
}

std::vector<std::size_t> refine_colours(const Graph& g, std::vector<std::size_t> colours) {
  const std::size_t n = g.order();
  if (colours.empty()) colours.assign(n, 0);
  // Normalise to dense ranks so the initial ids carry only their order.
  {
    std::vector<std::size_t> ids = colours;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (auto& c : colours) c = static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), c) - ids.begin());
  }
  std::size_t classes = count_colours(colours);
  while (true) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> key(n);
    for (Vertex v = 0; v < n; ++v) {
      key[v].first = colours[v];
      g.neighbors(v).for_each([&](Vertex u) { key[v].second.push_back(colours[u]); });
      std::sort(key[v].second.begin(), key[v].second.end());
    }
    auto sorted = key;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v)
      colours[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), key[v]) - sorted.begin());
    if (sorted.size() == classes) break;
    classes = sorted.size();
  }
  return colours;
}

std::vector<Vertex> canonical_labelling(const Graph& g) {
  if (g.order() == 0) return {};
  return CanonSearch(g).run();
}

std::string canonical_graph6(const Graph& g) {
  if (g.order() == 0) return write_graph6(g);
  return write_graph6(relabel(g, canonical_labelling(g)));
}

}  // namespace cyclext
