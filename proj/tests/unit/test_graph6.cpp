#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "cyclext/generators.hpp"
#include "cyclext/graph6.hpp"
#include "cyclext/graph_input.hpp"
#include "oracles.hpp"

using namespace cyclext;

// Expected records come from tests/data/graph6_oracle.py.

TEST(Graph6, DecodesTriangle) { EXPECT_EQ(parse_graph6("Bw"), complete_graph(3)); }

TEST(Graph6, DecodesEmptyFive) { EXPECT_EQ(parse_graph6("D??"), empty_graph(5)); }

TEST(Graph6, EncodesFrozenRecords) {
  EXPECT_EQ(write_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(write_graph6(empty_graph(1)), "@");
  EXPECT_EQ(write_graph6(empty_graph(5)), "D??");
  EXPECT_EQ(write_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(write_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(write_graph6(path_graph(3)), "Bg");
  EXPECT_EQ(write_graph6(join(complete_graph(2), empty_graph(3))), "D}o");
}

TEST(Graph6, LongHeader) {
  const std::string rec = "~??~" + std::string(326, '?');
  EXPECT_EQ(write_graph6(empty_graph(63)), rec);
  EXPECT_EQ(parse_graph6(rec), empty_graph(63));
  const Graph p = path_graph(64);
  EXPECT_EQ(write_graph6(p).substr(0, 8), "~?@?hCGG");
  EXPECT_EQ(parse_graph6(write_graph6(p)), p);
}

TEST(Graph6, OrderZero) {
  EXPECT_EQ(write_graph6(Graph(0)), "?");
  EXPECT_EQ(parse_graph6("?").order(), 0u);
}

TEST(Graph6, AcceptsPrefixAndNewline) {
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), complete_graph(3));
  EXPECT_EQ(parse_graph6("Bw\r\n"), complete_graph(3));
}

namespace {

void expect_error(std::string_view rec, Graph6Error::Kind kind, std::size_t offset) {
  try {
    parse_graph6(rec);
    ADD_FAILURE() << "no error for '" << rec << "'";
  } catch (const Graph6Error& e) {
    EXPECT_EQ(e.kind(), kind) << rec << ": " << e.what();
    EXPECT_EQ(e.offset(), offset) << rec;
  }
}

}  // namespace

TEST(Graph6, DistinctErrors) {
  using K = Graph6Error::Kind;
  expect_error("", K::empty_record, 0);
  expect_error("B", K::truncated_body, 1);
  expect_error("Bww", K::trailing_garbage, 2);
  expect_error("B w", K::non_printable_byte, 1);
  expect_error("Bx", K::nonzero_padding, 1);
  expect_error("~?", K::malformed_header, 2);
  expect_error("~~??????", K::malformed_header, 1);
  expect_error("~?@@", K::order_exceeds_capacity, 0);
  expect_error(">>graph6<<B", K::truncated_body, 11);
}

TEST(Graph6, StreamReportsLineNumbers) {
  std::istringstream in("Bw\n\nD??\nB\n");
  try {
    read_graph6_stream(in);
    FAIL();
  } catch (const Graph6Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
  std::istringstream ok("Bw\r\n\nD??\n");
  EXPECT_EQ(read_graph6_stream(ok).size(), 2u);
}

TEST(Graph6, RandomRoundTrip) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = rng() % 31;
    const Graph g = oracle::random_graph(n, static_cast<double>(rng() % 100) / 100.0, rng);
    const std::string rec = write_graph6(g);
    EXPECT_EQ(parse_graph6(rec), g);
    EXPECT_EQ(write_graph6(parse_graph6(rec)), rec);
  }
}

TEST(Graph6, ExternalCorpusAgrees) {
  std::ifstream g6(std::string(CYCLEXT_TEST_DATA_DIR) + "/corpus.g6");
  std::ifstream edges(std::string(CYCLEXT_TEST_DATA_DIR) + "/corpus_edges.txt");
  ASSERT_TRUE(g6 && edges);
  std::string rec, line;
  std::size_t count = 0;
  while (std::getline(g6, rec) && std::getline(edges, line)) {
    const Graph g = parse_graph6(rec);
    EXPECT_EQ(write_graph6(g), rec);
    std::istringstream in(line);
    std::size_t n = 0;
    char colon = 0;
    in >> n >> colon;
    Graph expect(n);
    std::string tok;
    while (in >> tok) {
      const auto dash = tok.find('-');
      expect.add_edge(std::stoul(tok.substr(0, dash)), std::stoul(tok.substr(dash + 1)));
    }
    EXPECT_EQ(g, expect) << rec;
    ++count;
  }
  EXPECT_GT(count, 1000u);
}

TEST(EdgeList, ParsesHandWrittenGraph) {
  const Graph g = parse_edge_list("# a triangle\nn=3\n0 1\n1 2\n\n2 0\n");
  EXPECT_EQ(g, complete_graph(3));
}

TEST(EdgeList, Errors) {
  EXPECT_THROW(parse_edge_list("0 1\n"), EdgeListError);
  EXPECT_THROW(parse_edge_list("n=3\n0 3\n"), EdgeListError);
  EXPECT_THROW(parse_edge_list("n=3\n0 1\n1 0\n"), EdgeListError);
  EXPECT_THROW(parse_edge_list("n=3\n1 1\n"), EdgeListError);
  EXPECT_THROW(parse_edge_list("n=3\n0 x\n"), EdgeListError);
  try {
    parse_edge_list("n=3\n0 1\nbad\n");
  } catch (const EdgeListError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(GraphInput, DetectsFormat) {
  std::istringstream el("n=2\n0 1\n");
  EXPECT_EQ(read_graphs(el).front(), complete_graph(2));
  std::istringstream g6("Bw\nC~\n");
  EXPECT_EQ(read_graphs(g6).size(), 2u);
}
