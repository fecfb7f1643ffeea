#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "cyclext/catalog.hpp"
#include "cyclext/enumerate.hpp"
#include "cyclext/error.hpp"
#include "cyclext/generators.hpp"
#include "cyclext/graph6.hpp"
#include "cyclext/harness.hpp"
#include "cyclext/isomorphism.hpp"
#include "cyclext/recognizer.hpp"
#include "cyclext/report.hpp"
#include "oracles.hpp"

using namespace cyclext;

TEST(Enumerate, CountsMatchBruteForceUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_connected_graphs(n).size(), oracle::count_connected_classes(n)) << n;
}

TEST(Enumerate, KnownCountsAtSevenAndEight) {
  // OEIS A001349
  EXPECT_EQ(enumerate_connected_graphs(7).size(), 853u);
  EXPECT_EQ(enumerate_connected_graphs(8).size(), 11117u);
}

TEST(Enumerate, OutputIsCanonicalSortedAndConnected) {
  const auto gs = enumerate_connected_graphs(6);
  std::string prev;
  for (const Graph& g : gs) {
    EXPECT_TRUE(is_connected(g));
    const std::string g6 = write_graph6(g);
    EXPECT_EQ(g6, canonical_graph6(g));
    EXPECT_LT(prev, g6);
    prev = g6;
  }
  EXPECT_THROW(enumerate_connected_graphs(0), PreconditionError);
  EXPECT_THROW(enumerate_connected_graphs(10), PreconditionError);
  EXPECT_THROW(verify_theorem(9), PreconditionError);
  EXPECT_EQ(enumerate_connected_graphs(1, 4).size(), 1u + 1u + 2u + 6u);
}

TEST(VerifyTheorem, UpToFive) {
  const VerificationReport r = verify_theorem(5);
  EXPECT_EQ(r.graphs_seen, 2u + 6u + 21u);
  EXPECT_EQ(r.disagreements.size(), 0u);
  EXPECT_EQ(r.agreements, r.in_hypothesis);
  EXPECT_EQ(r.verdict_counts.at("Obstructed(K2+K3bar)"), 1u);
  EXPECT_EQ(r.status(), "pass");
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_GT(r.lemma1_cycles_checked, 0u);
}

TEST(VerifyTheorem, UpToSevenFindsH1) {
  CampaignOptions opts;
  opts.keep_rows = true;
  const VerificationReport r = verify_theorem(7, opts);
  EXPECT_TRUE(r.disagreements.empty());
  EXPECT_TRUE(r.lemma1_violations.empty());
  EXPECT_GE(r.verdict_counts.at("Obstructed(H1)"), 1u);
  const std::string h1 = canonical_graph6(find_pattern("H1").graph);
  bool seen = false;
  for (const GraphRow& row : r.rows)
    if (row.graph6 == h1) {
      seen = true;
      EXPECT_EQ(row.recognizer, "Obstructed(H1)");
      EXPECT_EQ(row.oracle, "notFCE");
    }
  EXPECT_TRUE(seen);
  EXPECT_EQ(r.rows.size(), r.graphs_seen);
}

TEST(VerifyTheorem, StreamWithF3AndF4) {
  const std::vector<Graph> gs{find_pattern("F3").graph, find_pattern("F4").graph};
  const VerificationReport r = verify_theorem(gs);
  EXPECT_EQ(r.source, "stream");
  EXPECT_EQ(r.graphs_seen, 2u);
  // F4 falls outside the hypotheses, so only F3 is compared
  EXPECT_EQ(r.in_hypothesis, 1u);
  EXPECT_EQ(r.verdict_counts.at("Obstructed(F3)"), 1u);
  EXPECT_EQ(r.verdict_counts.at("OutOfScope"), 1u);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(VerifyTheorem, EmptyStreamIsVacuous) {
  const VerificationReport r = verify_theorem(std::vector<Graph>{cycle_graph(5)});
  EXPECT_TRUE(r.vacuous());
  EXPECT_EQ(r.status(), "vacuous");
  EXPECT_EQ(r.exit_code(), 2);
}

TEST(VerifyTheorem, BudgetExhaustionIsReportedNotCounted) {
  CampaignOptions opts;
  opts.budget = 50;
  const VerificationReport r = verify_theorem(std::vector<Graph>{strong_product_path_k2(8)}, opts);
  EXPECT_EQ(r.budget_exhausted.size(), 1u);
  EXPECT_EQ(r.agreements, 0u);
  EXPECT_TRUE(r.disagreements.empty());
  EXPECT_EQ(r.status(), "budget");
  EXPECT_EQ(r.exit_code(), 2);
}

TEST(VerifyCorollary, UpToSeven) {
  const VerificationReport r = verify_corollary(7);
  EXPECT_EQ(r.campaign, "corollary");
  EXPECT_EQ(r.weak_pancyclic_checked, r.in_hypothesis);
  EXPECT_TRUE(r.weak_pancyclic_failures.empty());
  EXPECT_GT(r.mechanics_checked, 0u);
  EXPECT_TRUE(r.mechanics_failures.empty());
  EXPECT_EQ(r.lemma1_cycles_checked, 0u);
}

TEST(VerifyCorollary, DeletionMechanicsOnH1) {
  const VerificationReport r = verify_corollary(std::vector<Graph>{find_pattern("H1").graph});
  EXPECT_EQ(r.in_hypothesis, 1u);
  EXPECT_EQ(r.mechanics_checked, 2u);
  EXPECT_TRUE(r.mechanics_failures.empty());
}

TEST(VerifyCorollary, C5IsExcluded) {
  const VerificationReport r = verify_corollary(std::vector<Graph>{cycle_graph(5)});
  EXPECT_EQ(r.in_hypothesis, 0u);
  EXPECT_EQ(r.weak_pancyclic_checked, 0u);
}

TEST(Probe, DeterministicAndWorkerIndependent) {
  CampaignOptions one, four;
  four.workers = 4;
  const auto a = random_probe(10, 300, 7, one);
  const auto b = random_probe(10, 300, 7, four);
  const auto c = random_probe(10, 300, 7, one);
  EXPECT_EQ(report_to_json(a), report_to_json(b));
  EXPECT_EQ(report_to_json(a), report_to_json(c));
  EXPECT_NE(report_to_json(a), report_to_json(random_probe(10, 300, 8, one)));
  EXPECT_FALSE(a.failed());
  EXPECT_GT(a.in_hypothesis, 0u);
}

TEST(Probe, SamplesDependOnlyOnSeedAndIndex) {
  for (std::uint64_t k = 0; k < 50; ++k) {
    const Graph g = sample_graph(11, 99, k);
    EXPECT_EQ(g.order(), 11u);
    EXPECT_EQ(g, sample_graph(11, 99, k));
  }
  EXPECT_NE(sample_graph(11, 99, 0), sample_graph(11, 99, 1));
}

TEST(Probe, ZeroTrialsIsVacuous) {
  const auto r = random_probe(9, 0, 1);
  EXPECT_EQ(r.graphs_seen, 0u);
  EXPECT_EQ(r.status(), "vacuous");
  EXPECT_EQ(r.exit_code(), 2);
  EXPECT_THROW(random_probe(2, 1, 1), PreconditionError);
  EXPECT_THROW(random_probe(kProbeMaxOrder + 1, 1, 1), PreconditionError);
}

TEST(ParallelFor, VisitsEachIndexOnce) {
  for (std::size_t workers : {1u, 3u, 16u}) {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), workers, [&](std::size_t i) { ++hits[i]; });
    for (int h : hits) EXPECT_EQ(h, 1);
  }
  parallel_for(0, 4, [](std::size_t) { FAIL(); });
}

TEST(Report, JsonInvariants) {
  const VerificationReport r = verify_theorem(6);
  const auto j = nlohmann::json::parse(report_to_json(r));
  EXPECT_EQ(j["campaign"], "theorem");
  EXPECT_EQ(j["source"], "builtin");
  EXPECT_EQ(j["n_range"], nlohmann::json::array({3, 6}));
  EXPECT_EQ(j["agreements"].get<std::uint64_t>() + j["disagreements"].size(),
            j["in_hypothesis"].get<std::uint64_t>());
  std::uint64_t total = 0;
  for (auto& [k, v] : j["verdict_counts"].items()) total += v.get<std::uint64_t>();
  EXPECT_EQ(total, j["graphs_seen"].get<std::uint64_t>());
  EXPECT_FALSE(j.contains("elapsed_seconds"));
  EXPECT_FALSE(j.contains("seed"));
  EXPECT_TRUE(nlohmann::json::parse(report_to_json(r, true)).contains("elapsed_seconds"));
  EXPECT_EQ(j["status"], "pass");
}

TEST(Report, CsvAndText) {
  CampaignOptions opts;
  opts.keep_rows = true;
  const VerificationReport r = verify_theorem(4, opts);
  const std::string csv = report_to_csv(r);
  EXPECT_EQ(csv.rfind("graph6,in_hypothesis,recognizer,oracle,weakly_pancyclic\n", 0), 0u);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), r.graphs_seen + 1);
  const std::string text = report_to_text(r);
  EXPECT_NE(text.find("theorem"), std::string::npos);
  EXPECT_NE(text.find("graphs seen"), std::string::npos);
}
