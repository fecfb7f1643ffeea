#include "cyclext/cycle_oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

namespace cyclext {

namespace {

bool set_less(const VertexSet& a, const VertexSet& b) {
  const std::size_t sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  // same order as the subset scan: increasing bitmask
  return a.low_word() < b.low_word();
}

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

void require_cycle_host(const Graph& g, const char* who) {
  if (g.order() < 3) throw NotApplicable(std::string(who) + ": order < 3");
  if (!is_connected(g)) throw NotApplicable(std::string(who) + ": graph is disconnected");
}

// Extends a path ending at `end` through every vertex of `remaining`, then
// closes it at `start`.
class HamiltonSearch {
 public:
  HamiltonSearch(const Graph& g, Budget& budget) : g_(g), budget_(budget) {}

  std::optional<std::vector<Vertex>> run(const VertexSet& s) {
    if (s.size() < 3) return std::nullopt;
    Vertex start = s.first();
    for (Vertex v = s.first(); v < kMaxVertices; v = s.next(v))
      if ((g_.neighbors(v) & s).size() < (g_.neighbors(start) & s).size()) start = v;
    for (Vertex v = s.first(); v < kMaxVertices; v = s.next(v))
      if ((g_.neighbors(v) & s).size() < 2) return std::nullopt;
    start_ = start;
    path_.assign(1, start);
    VertexSet remaining = s;
    remaining.erase(start);
    if (extend(start, remaining)) return path_;
    return std::nullopt;
  }

 private:
  bool extend(Vertex end, const VertexSet& remaining) {
    budget_.charge();
    if (remaining.empty()) return g_.adjacent(end, start_);
    if (!g_.neighbors(start_).intersects(remaining)) return false;

    VertexSet open = remaining;
    open.insert(end);
    open.insert(start_);
    std::vector<std::pair<std::size_t, Vertex>> cands;
    const VertexSet next = g_.neighbors(end) & remaining;
    for (Vertex u = remaining.first(); u < kMaxVertices; u = remaining.next(u)) {
      const std::size_t links = (g_.neighbors(u) & open).size();
      if (links < 2) return false;
      if (next.contains(u)) cands.emplace_back(links, u);
    }
    std::sort(cands.begin(), cands.end());
    for (auto [links, u] : cands) {
      VertexSet rest = remaining;
      rest.erase(u);
      path_.push_back(u);
      if (extend(u, rest)) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  Budget& budget_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
};

// Decides whether g has a cycle of exactly `len` vertices. The cycle is rooted
// at its smallest vertex; every other vertex must exceed the root.
class LengthSearch {
 public:
  LengthSearch(const Graph& g, std::size_t len, Budget& budget)
      : g_(g), len_(len), budget_(budget) {}

  bool run() {
    const std::size_t n = g_.order();
    for (Vertex r = 0; r + len_ <= n; ++r) {
      VertexSet allowed;
      for (Vertex v = r + 1; v < n; ++v) allowed.insert(v);
      allowed = reachable_from(r, allowed);
      if (allowed.size() + 1 < len_) continue;
      root_ = r;
      if (grow(r, 1, allowed)) return true;
    }
    return false;
  }

 private:
  VertexSet reachable_from(Vertex r, const VertexSet& allowed) const {
    VertexSet within = allowed;
    within.insert(r);
    VertexSet out = reachable(g_, r, within);
    out.erase(r);
    return out;
  }

  bool grow(Vertex end, std::size_t have, const VertexSet& free) {
    budget_.charge();
    if (have == len_) return g_.adjacent(end, root_);
    const std::size_t need = len_ - have;
    if (free.size() < need) return false;
    if (!g_.neighbors(root_).intersects(free)) return false;
    const VertexSet next = g_.neighbors(end) & free;
    for (Vertex u = next.first(); u < kMaxVertices; u = next.next(u)) {
      VertexSet rest = free;
      rest.erase(u);
      if (grow(u, have + 1, rest)) return true;
    }
    return false;
  }

  const Graph& g_;
  std::size_t len_;
  Budget& budget_;
  Vertex root_ = 0;
};

std::optional<std::vector<Vertex>> extend_set(const Graph& g, const VertexSet& s, Budget& budget) {
  const VertexSet off = g.vertices() - s;
  for (Vertex w = off.first(); w < kMaxVertices; w = off.next(w)) {
    if ((g.neighbors(w) & s).size() < 2) continue;
    VertexSet bigger = s;
    bigger.insert(w);
    if (auto cyc = hamiltonian_cycle_on(g, bigger, budget)) return cyc;
  }
  return std::nullopt;
}

std::optional<Vertex> first_vertex_off_triangles(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexSet nbrs = g.neighbors(v);
    bool found = false;
    for (Vertex u = nbrs.first(); u < kMaxVertices && !found; u = nbrs.next(u))
      found = g.neighbors(u).intersects(nbrs);
    if (!found) return v;
  }
  return std::nullopt;
}

// reach[mask] holds the far endpoints of Hamilton paths of <mask> that start
// at the smallest member of mask. A mask carries a cycle when one of those
// endpoints closes back to the start.
class SubsetTable {
 public:
  SubsetTable(const Graph& g, Budget& budget) : n_(g.order()) {
    if (n_ > kSubsetDpMaxOrder)
      throw PreconditionError("subset_dp: order exceeds " + std::to_string(kSubsetDpMaxOrder));
    nbr_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) nbr_[v] = static_cast<std::uint32_t>(g.neighbors(v).low_word());
    const std::uint32_t full = n_ == 0 ? 0 : (std::uint32_t{1} << n_) - 1;
    reach_.assign(std::size_t{full} + 1, 0);
    for (Vertex v = 0; v < n_; ++v) reach_[std::uint32_t{1} << v] = std::uint32_t{1} << v;
    budget.charge(reach_.size());
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
      std::uint32_t ends = reach_[mask];
      if (ends == 0) continue;
      const unsigned root = static_cast<unsigned>(std::countr_zero(mask));
      const std::uint32_t above = full & ~((std::uint32_t{2} << root) - 1);
      while (ends != 0) {
        const unsigned v = static_cast<unsigned>(std::countr_zero(ends));
        ends &= ends - 1;
        std::uint32_t step = nbr_[v] & above & ~mask;
        budget.charge();
        while (step != 0) {
          const unsigned w = static_cast<unsigned>(std::countr_zero(step));
          step &= step - 1;
          reach_[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
        }
      }
    }
  }

  bool cyclable(std::uint32_t mask) const {
    if (std::popcount(mask) < 3) return false;
    const unsigned root = static_cast<unsigned>(std::countr_zero(mask));
    return (reach_[mask] & nbr_[root]) != 0;
  }

  bool extendable(std::uint32_t mask) const {
    std::uint32_t off = ((std::uint32_t{1} << n_) - 1) & ~mask;
    while (off != 0) {
      const unsigned w = static_cast<unsigned>(std::countr_zero(off));
      off &= off - 1;
      if (cyclable(mask | (std::uint32_t{1} << w))) return true;
    }
    return false;
  }

  std::size_t order() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> nbr_;
  std::vector<std::uint32_t> reach_;
};

VertexSet from_mask(std::uint32_t mask) {
  VertexSet s;
  while (mask != 0) {
    s.insert(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

// Calls fn on every cyclable, non-extendable, nonspanning mask in order of
// size then value; fn returns false to stop.
template <typename Fn>
void scan_subset_table(const SubsetTable& table, Fn&& fn) {
  const std::size_t n = table.order();
  for (std::size_t k = 3; k < n; ++k) {
    std::uint32_t mask = (std::uint32_t{1} << k) - 1;
    const std::uint32_t limit = std::uint32_t{1} << n;
    while (mask < limit) {
      if (table.cyclable(mask) && !table.extendable(mask) && !fn(mask)) return;
      // next mask with the same popcount
      const std::uint32_t low = mask & (~mask + 1);
      const std::uint32_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
}

std::vector<VertexSet> cycle_vertex_sets(const Graph& g, Budget& budget) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  for_each_cycle(
      g,
      [&](const std::vector<Vertex>& seq) {
        VertexSet s;
        for (Vertex v : seq) s.insert(v);
        seen.insert(s);
        return true;
      },
      budget, CycleFilter{std::nullopt, 3, g.order() - 1});
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

bool use_subset_dp(const Graph& g, FceMethod m) {
  if (m == FceMethod::subset_dp) return true;
  if (m == FceMethod::cycle_enumeration) return false;
  return g.order() <= kSubsetDpMaxOrder;
}

}  // namespace

Cycle::Cycle(const Graph& g, std::vector<Vertex> seq) : host_n_(g.order()), seq_(std::move(seq)) {
  if (!valid_in(g)) throw PreconditionError("not a cycle of the host graph: " + to_string(*this));
}

bool Cycle::valid_in(const Graph& g) const {
  if (g.order() != host_n_ || seq_.size() < 3) return false;
  VertexSet seen;
  for (Vertex v : seq_) {
    if (v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < seq_.size(); ++i)
    if (!g.adjacent(seq_[i], seq_[(i + 1) % seq_.size()])) return false;
  return true;
}

VertexSet Cycle::vertex_set() const {
  VertexSet s;
  for (Vertex v : seq_) s.insert(v);
  return s;
}

Cycle Cycle::canonical() const {
  const std::size_t t = seq_.size();
  const auto at = std::min_element(seq_.begin(), seq_.end()) - seq_.begin();
  const auto pos = static_cast<std::size_t>(at);
  std::vector<Vertex> fwd(t), back(t);
  for (std::size_t k = 0; k < t; ++k) {
    fwd[k] = seq_[(pos + k) % t];
    back[k] = seq_[(pos + t - k) % t];
  }
  Cycle out;
  out.host_n_ = host_n_;
  out.seq_ = std::min(fwd, back);
  return out;
}

std::string to_string(const Cycle& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.seq().size(); ++i) os << (i ? "-" : "") << c.seq()[i];
  return os.str();
}

void for_each_cycle(const Graph& g, const std::function<bool(const std::vector<Vertex>&)>& fn,
                    Budget& budget, const CycleFilter& filter) {
  const VertexSet within = filter.within ? *filter.within & g.vertices() : g.vertices();
  std::vector<Vertex> path;
  bool stop = false;

  std::function<void(Vertex, const VertexSet&)> dfs = [&](Vertex end, const VertexSet& free) {
    budget.charge();
    const Vertex root = path.front();
    if (path.size() >= 3 && path.size() >= filter.min_length && g.adjacent(end, root) &&
        path[1] < end) {
      if (!fn(path)) {
        stop = true;
        return;
      }
    }
    if (path.size() >= filter.max_length) return;
    const VertexSet next = g.neighbors(end) & free;
    for (Vertex u = next.first(); u < kMaxVertices && !stop; u = next.next(u)) {
      VertexSet rest = free;
      rest.erase(u);
      path.push_back(u);
      dfs(u, rest);
      path.pop_back();
    }
  };

  for (Vertex r = within.first(); r < kMaxVertices && !stop; r = within.next(r)) {
    VertexSet free;
    for (Vertex v = within.next(r); v < kMaxVertices; v = within.next(v)) free.insert(v);
    path.assign(1, r);
    dfs(r, free);
  }
}

std::optional<std::vector<Vertex>> hamiltonian_cycle_on(const Graph& g, const VertexSet& s,
                                                        Budget& budget) {
  return HamiltonSearch(g, budget).run(s & g.vertices());
}

HamiltonResult is_hamiltonian(const Graph& g, std::uint64_t budget) {
  require_cycle_host(g, "is_hamiltonian");
  Budget b(budget);
  HamiltonResult r;
  if (auto seq = hamiltonian_cycle_on(g, g.vertices(), b)) {
    r.hamiltonian = true;
    r.witness = Cycle(g, std::move(*seq));
  }
  return r;
}

CycleSpectrum cycle_spectrum(const Graph& g, std::uint64_t budget) {
  Budget b(budget);
  CycleSpectrum s;
  for (std::size_t len = 3; len <= g.order(); ++len)
    if (LengthSearch(g, len, b).run()) s.present.insert(len);
  if (!s.present.empty()) {
    s.girth = *s.present.begin();
    s.circumference = *s.present.rbegin();
  }
  return s;
}

bool is_weakly_pancyclic(const CycleSpectrum& s) {
  if (s.present.empty()) throw NotApplicable("is_weakly_pancyclic: graph is acyclic");
  return s.present.size() == *s.circumference - *s.girth + 1;
}

bool is_weakly_pancyclic(const Graph& g, std::uint64_t budget) {
  return is_weakly_pancyclic(cycle_spectrum(g, budget));
}

bool is_pancyclic(const Graph& g, std::uint64_t budget) {
  if (g.order() < 3) throw PreconditionError("is_pancyclic: order < 3");
  return cycle_spectrum(g, budget).present.size() == g.order() - 2;
}

ExtensionResult is_cycle_extendable_at(const Graph& g, const Cycle& c, std::uint64_t budget) {
  if (!c.valid_in(g)) throw PreconditionError("is_cycle_extendable_at: cycle not in host");
  if (c.length() == g.order())
    throw NotApplicable("is_cycle_extendable_at: hamiltonian cycles are not subject to extension");
  Budget b(budget);
  ExtensionResult r;
  if (auto seq = extend_set(g, c.vertex_set(), b)) {
    r.extendable = true;
    r.witness = Cycle(g, std::move(*seq));
  }
  return r;
}

const char* to_string(FceResult::Failure f) {
  switch (f) {
    case FceResult::Failure::none: return "none";
    case FceResult::Failure::vertex_not_on_triangle: return "vertex_not_on_triangle";
    case FceResult::Failure::non_extendable_cycle: return "non_extendable_cycle";
  }
  return "unknown";
}

FceResult is_fully_cycle_extendable(const Graph& g, const OracleOptions& opts) {
  require_cycle_host(g, "is_fully_cycle_extendable");
  FceResult r;
  if (auto v = first_vertex_off_triangles(g)) {
    r.failure = FceResult::Failure::vertex_not_on_triangle;
    r.triangle_free_vertex = v;
    return r;
  }
  Budget b(opts.budget);
  std::optional<VertexSet> bad;
  if (use_subset_dp(g, opts.method)) {
    SubsetTable table(g, b);
    scan_subset_table(table, [&](std::uint32_t mask) {
      bad = from_mask(mask);
      return false;
    });
  } else {
    for (const VertexSet& s : cycle_vertex_sets(g, b))
      if (!extend_set(g, s, b)) {
        bad = s;
        break;
      }
  }
  if (bad) {
    r.failure = FceResult::Failure::non_extendable_cycle;
    auto seq = hamiltonian_cycle_on(g, *bad, b);
    if (!seq) throw InternalContradiction("is_fully_cycle_extendable: witness set has no cycle");
    r.counterexample = Cycle(g, std::move(*seq)).canonical();
    return r;
  }
  r.fully_cycle_extendable = true;
  return r;
}

std::vector<VertexSet> non_extendable_cycle_sets(const Graph& g, const OracleOptions& opts) {
  Budget b(opts.budget);
  std::vector<VertexSet> out;
  if (g.order() < 4) return out;
  if (use_subset_dp(g, opts.method)) {
    SubsetTable table(g, b);
    scan_subset_table(table, [&](std::uint32_t mask) {
      out.push_back(from_mask(mask));
      return true;
    });
  } else {
    for (const VertexSet& s : cycle_vertex_sets(g, b))
      if (!extend_set(g, s, b)) out.push_back(s);
  }
  return out;
}

std::string to_string(const Lemma1Violation& v) {
  std::ostringstream os;
  os << "statement " << v.statement << " at (i=" << v.i << ", j=" << v.j << ", x=" << v.common
     << "): " << v.detail;
  return os.str();
}

std::vector<Lemma1Violation> evaluate_lemma1_statements(const Graph& g, const Cycle& c) {
  if (!c.valid_in(g)) throw PreconditionError("evaluate_lemma1_statements: cycle not in host");
  const std::size_t t = c.length();
  const VertexSet on = c.vertex_set();
  const VertexSet off = g.vertices() - on;
  auto v = [&](std::size_t i, std::ptrdiff_t d) {
    return c.seq()[(i + t + static_cast<std::size_t>(d + static_cast<std::ptrdiff_t>(t))) % t];
  };
  std::vector<Lemma1Violation> out;
  auto report = [&](int st, std::size_t i, std::size_t j, Vertex x, std::string what) {
    out.push_back({st, i, j, x, std::move(what)});
  };

  for (Vertex x = off.first(); x < kMaxVertices; x = off.next(x)) {
    std::vector<std::size_t> att;
    for (std::size_t i = 0; i < t; ++i)
      if (g.adjacent(c.seq()[i], x)) att.push_back(i);
    for (std::size_t i : att)
      for (std::size_t j : att) {
        if (i == j) continue;
        if (j == (i + 1) % t || j == (i + t - 1) % t) report(1, i, j, x, "attachments are consecutive");
        if (g.adjacent(v(i, 1), v(j, 1))) report(2, i, j, x, "v_{i+1} ~ v_{j+1}");
        if (g.adjacent(v(i, -1), v(j, -1))) report(2, i, j, x, "v_{i-1} ~ v_{j-1}");
        if (g.adjacent(v(i, -1), v(i, 1))) {
          if (g.adjacent(v(j, -1), v(i, 0))) report(3, i, j, x, "v_{i-1} ~ v_{i+1} and v_{j-1} ~ v_i");
          if (g.adjacent(v(j, 1), v(i, 0))) report(3, i, j, x, "v_{i-1} ~ v_{i+1} and v_{j+1} ~ v_i");
        }
        if (j == (i + 2) % t) {
          const Vertex mid = v(i, 1);
          // consecutive pairs on the path v_{i+2} ... v_i
          for (std::size_t k = 2; k < t; ++k) {
            const Vertex a = v(i, static_cast<std::ptrdiff_t>(k));
            const Vertex b2 = v(i, static_cast<std::ptrdiff_t>(k + 1));
            if (g.adjacent(mid, a) && g.adjacent(mid, b2))
              report(4, i, j, x, "v_{i+1} ~ consecutive " + std::to_string(a) + "," + std::to_string(b2));
          }
        }
      }
  }
  return out;
}

std::vector<Lemma1Violation> check_lemma1(const Graph& g, const Cycle& c, std::uint64_t budget) {
  if (!c.valid_in(g)) throw PreconditionError("check_lemma1: cycle not in host");
  if (c.length() == g.order()) throw PreconditionError("check_lemma1: cycle is hamiltonian");
  if (is_cycle_extendable_at(g, c, budget).extendable)
    throw PreconditionError("check_lemma1: cycle is extendable");
  return evaluate_lemma1_statements(g, c);
}

bool cut_set_nonhamiltonicity_witness(const Graph& g, const VertexSet& u) {
  if (!u.is_subset_of(g.vertices()))
    throw PreconditionError("cut_set_nonhamiltonicity_witness: cut not inside V(g)");
  const std::size_t pieces = components(g, u).size();
  return u.empty() ? pieces > 1 : pieces > u.size();
}

}  // namespace cyclext
