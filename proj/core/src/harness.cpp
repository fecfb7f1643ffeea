#include "cyclext/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "cyclext/enumerate.hpp"
#include "cyclext/graph6.hpp"
#include "cyclext/local_props.hpp"
#include "cyclext/recognizer.hpp"

namespace cyclext {

namespace {

enum class Mode { theorem, corollary, probe };

bool wants_theorem(Mode m) { return m != Mode::corollary; }
bool wants_corollary(Mode m) { return m != Mode::theorem; }

template <typename T>
void append(std::vector<T>& into, std::vector<T>& from) {
  into.insert(into.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

void merge(VerificationReport& into, VerificationReport& from) {
  into.graphs_seen += from.graphs_seen;
  into.in_hypothesis += from.in_hypothesis;
  into.agreements += from.agreements;
  append(into.disagreements, from.disagreements);
  into.weak_pancyclic_checked += from.weak_pancyclic_checked;
  append(into.weak_pancyclic_failures, from.weak_pancyclic_failures);
  into.mechanics_checked += from.mechanics_checked;
  append(into.mechanics_failures, from.mechanics_failures);
  into.lemma1_cycles_checked += from.lemma1_cycles_checked;
  append(into.lemma1_violations, from.lemma1_violations);
  append(into.budget_exhausted, from.budget_exhausted);
  for (auto& [k, v] : from.verdict_counts) into.verdict_counts[k] += v;
  append(into.rows, from.rows);
}

void finish(VerificationReport& r) {
  std::sort(r.disagreements.begin(), r.disagreements.end());
  std::sort(r.weak_pancyclic_failures.begin(), r.weak_pancyclic_failures.end());
  std::sort(r.mechanics_failures.begin(), r.mechanics_failures.end());
  std::sort(r.lemma1_violations.begin(), r.lemma1_violations.end());
  std::sort(r.budget_exhausted.begin(), r.budget_exhausted.end());
  r.budget_exhausted.erase(std::unique(r.budget_exhausted.begin(), r.budget_exhausted.end()),
                           r.budget_exhausted.end());
}

std::string verdict_label(const Classification& c) {
  std::string s = to_string(c.verdict);
  if (c.obstruction) s += "(" + c.obstruction->pattern + ")";
  return s;
}

void run_lemma1(const Graph& g, const std::string& g6, const CampaignOptions& opts,
                VerificationReport& out) {
  for (const VertexSet& s : non_extendable_cycle_sets(g, {opts.budget})) {
    Budget b(opts.budget);
    bool first = true;
    for_each_cycle(
        g,
        [&](const std::vector<Vertex>& seq) {
          const Cycle c(g, seq);
          std::vector<Lemma1Violation> found;
          if (first) {
            // The first cycle on each set goes through the independent
            // extendability search as well.
            try {
              found = check_lemma1(g, c, opts.budget);
            } catch (const PreconditionError& e) {
              out.lemma1_violations.push_back({g6, to_string(c), std::string("oracle mismatch: ") + e.what()});
            }
            first = false;
          } else {
            found = evaluate_lemma1_statements(g, c);
          }
          ++out.lemma1_cycles_checked;
          for (const Lemma1Violation& v : found)
            out.lemma1_violations.push_back({g6, to_string(c), to_string(v)});
          return true;
        },
        b, CycleFilter{s, s.size(), s.size()});
  }
}

void run_theorem(const Graph& g, const std::string& g6, VerificationReport& out, GraphRow& row,
                 const CampaignOptions& opts) {
  const Classification cls = classify(g);
  row.recognizer = verdict_label(cls);
  ++out.verdict_counts[row.recognizer];
  const FceResult fce = is_fully_cycle_extendable(g, {opts.budget});
  row.oracle = fce.fully_cycle_extendable ? "FCE" : "notFCE";
  std::string problem;
  if ((cls.verdict == Verdict::fully_cycle_extendable) != fce.fully_cycle_extendable)
    problem = row.oracle;
  else if (!verify_classification(g, cls, catalog()))
    problem = "witness does not re-verify";
  else if (fce.counterexample && is_cycle_extendable_at(g, *fce.counterexample, opts.budget).extendable)
    problem = "oracle counterexample is extendable";
  if (problem.empty())
    ++out.agreements;
  else
    out.disagreements.push_back({g6, row.recognizer, problem});
}

void run_corollary(const Graph& g, const std::string& g6, VerificationReport& out, GraphRow& row,
                   const CampaignOptions& opts, bool mechanics) {
  const CycleSpectrum cs = cycle_spectrum(g, opts.budget);
  const bool wp = is_weakly_pancyclic(cs);
  row.weakly_pancyclic = wp ? "true" : "false";
  ++out.weak_pancyclic_checked;
  if (wp != predict_weakly_pancyclic(g).weakly_pancyclic) out.weak_pancyclic_failures.push_back(g6);
  if (!mechanics || g.order() < 4) return;

  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) continue;
    ++out.mechanics_checked;
    const Vertex a = g.neighbors(v).first();
    const Vertex b = g.neighbors(v).next(a);
    if (!g.adjacent(a, b)) out.mechanics_failures.push_back({g6, v, "neighbours not adjacent"});
    const Graph h = remove_vertex(g, v);
    const HypothesisCheck hc = check_hypotheses(h);
    if (!hc.all()) {
      std::string why = "deletion leaves hypothesis:";
      for (const std::string& f : hc.failed()) why += " " + f;
      out.mechanics_failures.push_back({g6, v, why});
      continue;
    }
    const std::size_t c = *cs.circumference;
    const CycleSpectrum hs = cycle_spectrum(h, opts.budget);
    const std::size_t ch = hs.circumference.value_or(0);
    if (ch != c && ch + 1 != c)
      out.mechanics_failures.push_back(
          {g6, v, "circumference " + std::to_string(c) + " -> " + std::to_string(ch)});
  }
}

VerificationReport evaluate(const Graph& g, Mode mode, const CampaignOptions& opts) {
  VerificationReport out;
  out.graphs_seen = 1;
  const std::string g6 = write_graph6(g);
  GraphRow row{g6, false, "-", "-", "-"};
  const HypothesisCheck hc = check_hypotheses(g);
  row.in_hypothesis = hc.all();
  try {
    if (row.in_hypothesis) {
      ++out.in_hypothesis;
      if (wants_theorem(mode)) run_theorem(g, g6, out, row, opts);
      if (wants_corollary(mode)) run_corollary(g, g6, out, row, opts, mode == Mode::corollary || mode == Mode::probe);
    } else {
      ++out.verdict_counts["OutOfScope"];
    }
    const bool lemma1 = wants_theorem(mode) &&
                        (opts.lemma1_scope == Lemma1Scope::all_connected
                             ? g.order() >= 3 && is_connected(g)
                             : opts.lemma1_scope == Lemma1Scope::in_hypothesis && row.in_hypothesis);
    if (lemma1) run_lemma1(g, g6, opts, out);
  } catch (const BudgetExceeded&) {
    out.budget_exhausted.push_back(g6);
    if (row.oracle == "-") row.oracle = "budget";
  }
  if (opts.keep_rows) out.rows.push_back(std::move(row));
  return out;
}

VerificationReport run_campaign(std::size_t count, const std::function<Graph(std::size_t)>& get, Mode mode,
                                const CampaignOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<VerificationReport> parts(count);
  parallel_for(count, opts.workers, [&](std::size_t i) { parts[i] = evaluate(get(i), mode, opts); });
  VerificationReport r;
  for (auto& p : parts) merge(r, p);
  finish(r);
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

VerificationReport run_stream(const std::vector<Graph>& graphs, Mode mode, const CampaignOptions& opts) {
  // Build the catalog before any worker needs it.
  catalog();
  VerificationReport r = run_campaign(
      graphs.size(), [&](std::size_t i) { return graphs[i]; }, mode, opts);
  r.source = "stream";
  if (!graphs.empty()) {
    r.n_min = graphs.front().order();
    r.n_max = graphs.front().order();
    for (const Graph& g : graphs) {
      r.n_min = std::min(r.n_min, g.order());
      r.n_max = std::max(r.n_max, g.order());
    }
  }
  return r;
}

VerificationReport run_builtin(std::size_t n_max, Mode mode, const CampaignOptions& opts) {
  if (n_max > kBuiltinMaxOrder)
    throw PreconditionError("builtin sweep: n_max must be at most " + std::to_string(kBuiltinMaxOrder) +
                            "; feed larger orders as a graph6 stream");
  const std::size_t lo = std::max<std::size_t>(opts.n_min, 1);
  const std::vector<Graph> graphs = enumerate_connected_graphs(lo, n_max);
  VerificationReport r = run_stream(graphs, mode, opts);
  r.source = "builtin";
  r.n_min = lo;
  r.n_max = n_max;
  return r;
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t m) { return rng() % m; }

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

// New vertices hang off an edge, a triangle or a K4 so neighbourhoods stay
// dense; a few distance-2 chords are added afterwards.
Graph local_growth(std::size_t n, std::mt19937_64& rng) {
  const std::size_t seed_order = n >= 4 && below(rng, 2) == 0 ? 4 : 3;
  Graph g(n);
  for (Vertex u = 0; u < seed_order; ++u)
    for (Vertex v = u + 1; v < seed_order; ++v) g.add_edge(u, v);

  for (Vertex nv = seed_order; nv < n; ++nv) {
    const VertexSet live = VertexSet::range(nv);
    VertexSet room;
    for (Vertex v = 0; v < nv; ++v)
      if (g.degree(v) < 6) room.insert(v);
    std::vector<std::vector<Vertex>> cliques[3];
    for (Vertex a = 0; a < nv; ++a)
      for (Vertex b = a + 1; b < nv; ++b) {
        if (!g.adjacent(a, b)) continue;
        const bool ab = room.contains(a) && room.contains(b);
        if (ab) cliques[0].push_back({a, b});
        const VertexSet common = g.neighbors(a) & g.neighbors(b) & live;
        for (Vertex c = common.next(b); c < kMaxVertices; c = common.next(c)) {
          if (ab && room.contains(c)) cliques[1].push_back({a, b, c});
          const VertexSet c4 = common & g.neighbors(c);
          for (Vertex d = c4.next(c); d < kMaxVertices; d = c4.next(d))
            if (ab && room.contains(c) && room.contains(d)) cliques[2].push_back({a, b, c, d});
        }
      }
    std::size_t kind = below(rng, 3);
    while (kind > 0 && cliques[kind].empty()) --kind;
    std::vector<Vertex> target;
    if (!cliques[kind].empty()) {
      target = cliques[kind][below(rng, cliques[kind].size())];
    } else {
      const Vertex a = below(rng, nv);
      const Vertex b = g.neighbors(a).first();
      target = {a, b};
    }
    for (Vertex t : target) g.add_edge(t, nv);
  }

  const std::size_t chords = below(rng, 3);
  for (std::size_t k = 0; k < chords; ++k) {
    std::vector<Edge> options;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!g.adjacent(u, v) && g.degree(u) < 6 && g.degree(v) < 6 &&
            g.neighbors(u).intersects(g.neighbors(v)))
          options.emplace_back(u, v);
    if (options.empty()) break;
    auto [u, v] = options[below(rng, options.size())];
    g.add_edge(u, v);
  }
  return g;
}

Graph gnp(std::size_t n, double p, std::mt19937_64& rng) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (unit(rng) < p) g.add_edge(u, v);
  return g;
}

}  // namespace

std::string VerificationReport::status() const {
  if (failed()) return "fail";
  if (!budget_exhausted.empty()) return "budget";
  if (vacuous()) return "vacuous";
  return "pass";
}

int VerificationReport::exit_code() const {
  if (failed()) return 1;
  if (!budget_exhausted.empty() || vacuous()) return 2;
  return 0;
}

void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count && !failed; i = next++) fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
      (void)w;
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

VerificationReport verify_theorem(std::size_t n_max, const CampaignOptions& opts) {
  VerificationReport r = run_builtin(n_max, Mode::theorem, opts);
  r.campaign = "theorem";
  return r;
}

VerificationReport verify_theorem(const std::vector<Graph>& graphs, const CampaignOptions& opts) {
  VerificationReport r = run_stream(graphs, Mode::theorem, opts);
  r.campaign = "theorem";
  return r;
}

VerificationReport verify_corollary(std::size_t n_max, const CampaignOptions& opts) {
  VerificationReport r = run_builtin(n_max, Mode::corollary, opts);
  r.campaign = "corollary";
  return r;
}

VerificationReport verify_corollary(const std::vector<Graph>& graphs, const CampaignOptions& opts) {
  VerificationReport r = run_stream(graphs, Mode::corollary, opts);
  r.campaign = "corollary";
  return r;
}

Graph sample_graph(std::size_t n, std::uint64_t seed, std::uint64_t k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
  std::mt19937_64 rng(seq);
  Graph g;
  if (below(rng, 4) == 0) {
    g = gnp(n, 0.25 + 0.05 * static_cast<double>(k % 11), rng);
  } else {
    g = local_growth(n, rng);
  }
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[below(rng, i)]);
  return relabel(g, perm);
}

VerificationReport random_probe(std::size_t n, std::uint64_t trials, std::uint64_t seed,
                                const CampaignOptions& opts) {
  if (n < 3 || n > kProbeMaxOrder)
    throw PreconditionError("random_probe: n must be in 3.." + std::to_string(kProbeMaxOrder));
  catalog();
  VerificationReport r = run_campaign(
      static_cast<std::size_t>(trials), [&](std::size_t k) { return sample_graph(n, seed, k); },
      Mode::probe, opts);
  r.campaign = "probe";
  r.source = "random";
  r.n_min = n;
  r.n_max = n;
  r.seed = seed;
  r.trials = trials;
  return r;
}

}  // namespace cyclext
