#include <gtest/gtest.h>

#include <random>

#include "cyclext/enumerate.hpp"
#include "cyclext/error.hpp"
#include "cyclext/generators.hpp"
#include "cyclext/cycle_oracle.hpp"
#include "oracles.hpp"

using namespace cyclext;

namespace {

Graph k113() { return join(complete_graph(2), empty_graph(3)); }

std::vector<Graph> connected_up_to(std::size_t n_max) {
  std::vector<Graph> out;
  for (std::size_t n = 3; n <= n_max; ++n)
    for (Graph& g : enumerate_connected_graphs(n)) out.push_back(std::move(g));
  return out;
}

}  // namespace

TEST(Cycle, Validation) {
  const Graph g = cycle_graph(5);
  EXPECT_NO_THROW(Cycle(g, {0, 1, 2, 3, 4}));
  EXPECT_THROW(Cycle(g, {0, 1, 2}), PreconditionError);
  EXPECT_THROW(Cycle(g, {0, 1}), PreconditionError);
  EXPECT_THROW(Cycle(g, {0, 1, 2, 3, 3}), PreconditionError);
  EXPECT_THROW(Cycle(g, {0, 1, 2, 3, 9}), PreconditionError);
}

TEST(Cycle, IndexWrapsAround) {
  const Cycle c(cycle_graph(5), {2, 3, 4, 0, 1});
  EXPECT_EQ(c[0], 2u);
  EXPECT_EQ(c[5], 2u);
  EXPECT_EQ(c[7], 4u);
}

TEST(Cycle, CanonicalFormIsRotationAndReflectionInvariant) {
  const Graph g = complete_graph(6);
  const std::vector<Vertex> base{3, 1, 5, 0, 4};
  const Cycle want = Cycle(g, base).canonical();
  EXPECT_EQ(want.seq(), (std::vector<Vertex>{0, 4, 3, 1, 5}));
  for (std::size_t r = 0; r < base.size(); ++r) {
    std::vector<Vertex> rot(base.size()), rev(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      rot[i] = base[(i + r) % base.size()];
      rev[i] = base[(base.size() + r - i) % base.size()];
    }
    EXPECT_EQ(Cycle(g, rot).canonical(), want);
    EXPECT_EQ(Cycle(g, rev).canonical(), want);
  }
}

TEST(ForEachCycle, CountsOnCompleteGraphs) {
  // K_n has sum over t of C(n,t)(t-1)!/2 cycles
  const std::size_t expected[] = {0, 0, 0, 1, 7, 37, 197, 1172};
  for (std::size_t n = 3; n <= 7; ++n) {
    Budget b;
    std::size_t count = 0;
    for_each_cycle(complete_graph(n), [&](const std::vector<Vertex>&) { return ++count, true; }, b);
    EXPECT_EQ(count, expected[n]);
  }
}

TEST(ForEachCycle, AgreesWithBruteForce) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(3 + trial % 5, 0.6, rng);
    std::set<std::vector<Vertex>> seen;
    Budget b;
    for_each_cycle(g, [&](const std::vector<Vertex>& s) {
      EXPECT_TRUE(seen.insert(Cycle(g, s).canonical().seq()).second);
      return true;
    }, b);
    EXPECT_EQ(seen, oracle::all_cycles(g));
  }
}

TEST(ForEachCycle, FilterRestrictsLengthAndSet) {
  const Graph g = complete_graph(6);
  CycleFilter f;
  f.within = VertexSet::range(4);
  f.min_length = 4;
  f.max_length = 4;
  Budget b;
  std::size_t count = 0;
  for_each_cycle(g, [&](const std::vector<Vertex>& s) {
    EXPECT_EQ(s.size(), 4u);
    for (Vertex v : s) EXPECT_LT(v, 4u);
    return ++count, true;
  }, b, f);
  EXPECT_EQ(count, 3u);
}

TEST(Spectrum, K113) {
  const CycleSpectrum s = cycle_spectrum(k113());
  EXPECT_EQ(s.present, (std::set<std::size_t>{3, 4}));
  EXPECT_EQ(s.girth, 3u);
  EXPECT_EQ(s.circumference, 4u);
  EXPECT_TRUE(is_weakly_pancyclic(s));
}

TEST(Spectrum, Examples) {
  EXPECT_EQ(cycle_spectrum(cycle_graph(7)).present, std::set<std::size_t>{7});
  EXPECT_TRUE(cycle_spectrum(path_graph(6)).present.empty());
  EXPECT_FALSE(cycle_spectrum(path_graph(6)).girth.has_value());
  // C4 plus C6 sharing a vertex: lengths 4 and 6 only
  Graph g(9);
  for (auto [u, v] : std::initializer_list<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}})
    g.add_edge(u, v);
  const CycleSpectrum s = cycle_spectrum(g);
  EXPECT_EQ(s.present, (std::set<std::size_t>{4, 6}));
  EXPECT_FALSE(is_weakly_pancyclic(s));
  EXPECT_THROW(is_weakly_pancyclic(path_graph(4)), NotApplicable);
}

TEST(Spectrum, AgreesWithBruteForce) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(3 + trial % 6, 0.3 + 0.1 * (trial % 6), rng);
    EXPECT_EQ(cycle_spectrum(g).present, oracle::spectrum(g));
  }
}

TEST(Hamiltonicity, MatchesSpectrumUpToEight) {
  for (const Graph& g : connected_up_to(7)) {
    const HamiltonResult h = is_hamiltonian(g);
    EXPECT_EQ(h.hamiltonian, oracle::spectrum(g).count(g.order()) == 1);
    if (h.hamiltonian) {
      ASSERT_TRUE(h.witness.has_value());
      EXPECT_TRUE(h.witness->valid_in(g));
      EXPECT_EQ(h.witness->length(), g.order());
    }
  }
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(8, 0.45, rng);
    if (!is_connected(g)) continue;
    EXPECT_EQ(is_hamiltonian(g).hamiltonian, oracle::spectrum(g).count(8) == 1);
  }
}

TEST(Hamiltonicity, NotApplicable) {
  EXPECT_THROW(is_hamiltonian(disjoint_union(complete_graph(3), complete_graph(3))), NotApplicable);
  EXPECT_THROW(is_hamiltonian(complete_graph(2)), NotApplicable);
}

TEST(Hamiltonicity, CutWitnessImpliesNonhamiltonian) {
  for (const Graph& g : connected_up_to(6)) {
    const std::size_t n = g.order();
    const bool ham = is_hamiltonian(g).hamiltonian;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n) - 1; ++mask) {
      VertexSet u;
      for (Vertex v = 0; v < n; ++v)
        if (mask >> v & 1) u.insert(v);
      if (cut_set_nonhamiltonicity_witness(g, u)) EXPECT_FALSE(ham);
    }
  }
  EXPECT_TRUE(cut_set_nonhamiltonicity_witness(k113(), VertexSet{0, 1}));
  EXPECT_FALSE(cut_set_nonhamiltonicity_witness(complete_graph(4), VertexSet{0}));
  EXPECT_THROW(cut_set_nonhamiltonicity_witness(complete_graph(4), VertexSet{7}), PreconditionError);
}

TEST(Hamiltonicity, BudgetIsNeverAnAnswer) {
  const Graph g = join(empty_graph(6), empty_graph(5));
  EXPECT_THROW(is_hamiltonian(g, 5), BudgetExceeded);
  EXPECT_FALSE(is_hamiltonian(g).hamiltonian);
  const Graph k = complete_graph(12);
  EXPECT_THROW(cycle_spectrum(k, 5), BudgetExceeded);
  EXPECT_THROW(is_fully_cycle_extendable(k, {5, FceMethod::subset_dp}), BudgetExceeded);
  EXPECT_THROW(is_fully_cycle_extendable(k, {5, FceMethod::cycle_enumeration}), BudgetExceeded);
}

TEST(Pancyclic, Examples) {
  EXPECT_TRUE(is_pancyclic(complete_graph(6)));
  EXPECT_FALSE(is_pancyclic(cycle_graph(6)));
  EXPECT_FALSE(is_pancyclic(k113()));
  EXPECT_THROW(is_pancyclic(complete_graph(2)), PreconditionError);
}

TEST(Extension, K113FourCycleIsStuck) {
  const Graph g = k113();
  const Cycle c(g, {0, 2, 1, 3});
  EXPECT_FALSE(is_cycle_extendable_at(g, c).extendable);
  const Cycle tri(g, {0, 1, 2});
  const ExtensionResult r = is_cycle_extendable_at(g, tri);
  ASSERT_TRUE(r.extendable);
  EXPECT_TRUE(r.witness->valid_in(g));
  EXPECT_EQ(r.witness->length(), 4u);
  EXPECT_TRUE(tri.vertex_set().is_subset_of(r.witness->vertex_set()));
  EXPECT_THROW(is_cycle_extendable_at(complete_graph(3), Cycle(complete_graph(3), {0, 1, 2})), NotApplicable);
  EXPECT_THROW(is_cycle_extendable_at(g, Cycle(complete_graph(5), {2, 3, 4})), PreconditionError);
}

TEST(FullyCycleExtendable, K113HasCanonicalFourCycle) {
  for (FceMethod m : {FceMethod::subset_dp, FceMethod::cycle_enumeration}) {
    const FceResult r = is_fully_cycle_extendable(k113(), {kDefaultBudget, m});
    EXPECT_FALSE(r.fully_cycle_extendable);
    EXPECT_EQ(r.failure, FceResult::Failure::non_extendable_cycle);
    ASSERT_TRUE(r.counterexample.has_value());
    EXPECT_EQ(r.counterexample->seq(), (std::vector<Vertex>{0, 2, 1, 3}));
  }
  EXPECT_EQ(non_extendable_cycle_sets(k113()),
            (std::vector<VertexSet>{VertexSet{0, 1, 2, 3}, VertexSet{0, 1, 2, 4}, VertexSet{0, 1, 3, 4}}));
}

TEST(FullyCycleExtendable, Examples) {
  EXPECT_TRUE(is_fully_cycle_extendable(complete_graph(5)).fully_cycle_extendable);
  EXPECT_TRUE(is_fully_cycle_extendable(k4_minus_edge()).fully_cycle_extendable);
  EXPECT_TRUE(is_fully_cycle_extendable(strong_product_path_k2(5)).fully_cycle_extendable);
  const FceResult c5 = is_fully_cycle_extendable(cycle_graph(5));
  EXPECT_FALSE(c5.fully_cycle_extendable);
  EXPECT_EQ(c5.failure, FceResult::Failure::vertex_not_on_triangle);
  EXPECT_EQ(c5.triangle_free_vertex, Vertex{0});
  EXPECT_THROW(is_fully_cycle_extendable(path_graph(2)), NotApplicable);
  EXPECT_THROW(is_fully_cycle_extendable(disjoint_union(complete_graph(3), complete_graph(3))), NotApplicable);
  EXPECT_STREQ(to_string(FceResult::Failure::non_extendable_cycle), "non_extendable_cycle");
}

TEST(FullyCycleExtendable, BothRoutesAgreeWithDefinition) {
  for (const Graph& g : connected_up_to(7)) {
    const FceResult dp = is_fully_cycle_extendable(g, {kDefaultBudget, FceMethod::subset_dp});
    const FceResult en = is_fully_cycle_extendable(g, {kDefaultBudget, FceMethod::cycle_enumeration});
    ASSERT_EQ(dp.fully_cycle_extendable, en.fully_cycle_extendable);
    EXPECT_EQ(dp.failure, en.failure);
    EXPECT_EQ(dp.counterexample.has_value(), en.counterexample.has_value());
    if (dp.counterexample) {
      EXPECT_EQ(dp.counterexample->length(), en.counterexample->length());
      EXPECT_FALSE(is_cycle_extendable_at(g, *dp.counterexample).extendable);
      EXPECT_FALSE(is_cycle_extendable_at(g, *en.counterexample).extendable);
    }
    EXPECT_EQ(non_extendable_cycle_sets(g, {kDefaultBudget, FceMethod::subset_dp}),
              non_extendable_cycle_sets(g, {kDefaultBudget, FceMethod::cycle_enumeration}));
    if (g.order() <= 6) EXPECT_EQ(dp.fully_cycle_extendable, oracle::fully_cycle_extendable(g));
  }
}

TEST(FullyCycleExtendable, ChainOfImplications) {
  // fully cycle extendable => pancyclic => weakly pancyclic
  std::mt19937_64 rng(31);
  std::size_t fce = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const Graph g = oracle::random_graph(4 + trial % 7, 0.55, rng);
    if (!is_connected(g)) continue;
    const bool f = is_fully_cycle_extendable(g).fully_cycle_extendable;
    const CycleSpectrum s = cycle_spectrum(g);
    const bool pan = s.present.size() == g.order() - 2;
    if (f) {
      ++fce;
      EXPECT_TRUE(pan);
    }
    if (pan) EXPECT_TRUE(is_weakly_pancyclic(s));
    EXPECT_EQ(pan, is_pancyclic(g));
  }
  EXPECT_GT(fce, 100u);
}

TEST(Lemma1, HoldsOnNonExtendableCyclesUpToSeven) {
  std::size_t checked = 0;
  for (const Graph& g : connected_up_to(7))
    for (const VertexSet& s : non_extendable_cycle_sets(g)) {
      Budget b;
      const auto seq = hamiltonian_cycle_on(g, s, b);
      ASSERT_TRUE(seq.has_value());
      const Cycle c(g, *seq);
      EXPECT_TRUE(check_lemma1(g, c).empty()) << to_string(c);
      ++checked;
    }
  EXPECT_GT(checked, 1000u);
}

TEST(Lemma1, NegativeControlReportsViolations) {
  // triangle 0 1 2 in K4 is extendable; vertex 3 sees consecutive positions
  const Graph g = complete_graph(4);
  const Cycle c(g, {0, 1, 2});
  const auto v = evaluate_lemma1_statements(g, c);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().statement, 1);
  EXPECT_EQ(v.front().common, 3u);
  EXPECT_NE(to_string(v.front()).find("statement 1"), std::string::npos);
  EXPECT_THROW(check_lemma1(g, c), PreconditionError);
  EXPECT_THROW(check_lemma1(g, Cycle(g, {0, 1, 2, 3})), PreconditionError);
}

TEST(Lemma1, NegativeControlOnPlantedChord) {
  // C6 with x joined to positions 0 and 2, plus the chord v1 v3 which puts a
  // triangle v1 v2 v3 beside a two-step attachment
  Graph g = cycle_graph(6);
  g = disjoint_union(g, Graph(1));
  g.add_edge(6, 0);
  g.add_edge(6, 2);
  g.add_edge(1, 3);
  const auto v = evaluate_lemma1_statements(g, Cycle(g, {0, 1, 2, 3, 4, 5}));
  bool four = false;
  for (const auto& x : v) four = four || x.statement == 4;
  EXPECT_TRUE(four);
}
