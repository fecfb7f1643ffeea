#include "cyclext/graph6.hpp"

namespace cyclext {

namespace {

constexpr unsigned char kBias = 63;
constexpr unsigned char kLongHeader = 126;
constexpr std::string_view kPrefix = ">>graph6<<";

bool printable(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph6Error::Graph6Error(Kind kind, std::size_t offset, const std::string& what)
    : Error("graph6: " + what + " at byte " + std::to_string(offset)),
      kind_(kind),
      offset_(offset) {}

const char* to_string(Graph6Error::Kind kind) {
  switch (kind) {
    case Graph6Error::Kind::empty_record: return "empty_record";
    case Graph6Error::Kind::malformed_header: return "malformed_header";
    case Graph6Error::Kind::non_printable_byte: return "non_printable_byte";
    case Graph6Error::Kind::truncated_body: return "truncated_body";
    case Graph6Error::Kind::nonzero_padding: return "nonzero_padding";
    case Graph6Error::Kind::trailing_garbage: return "trailing_garbage";
    case Graph6Error::Kind::order_exceeds_capacity: return "order_exceeds_capacity";
  }
  return "unknown";
}

Graph parse_graph6(std::string_view record) {
  using Kind = Graph6Error::Kind;
  std::size_t base = 0;
  if (record.starts_with(kPrefix)) {
    record.remove_prefix(kPrefix.size());
    base = kPrefix.size();
  }
  if (record.ends_with('\n')) record.remove_suffix(1);
  if (record.ends_with('\r')) record.remove_suffix(1);
  if (record.empty()) throw Graph6Error(Kind::empty_record, base, "empty record");

  for (std::size_t i = 0; i < record.size(); ++i)
    if (!printable(static_cast<unsigned char>(record[i])))
      throw Graph6Error(Kind::non_printable_byte, base + i,
                        "byte " + std::to_string(static_cast<unsigned char>(record[i])) +
                            " outside 63..126");

  auto byte = [&](std::size_t i) {
    return static_cast<std::size_t>(static_cast<unsigned char>(record[i]) - kBias);
  };

  std::size_t n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(record[0]) != kLongHeader) {
    n = byte(0);
    pos = 1;
  } else if (record.size() >= 2 && static_cast<unsigned char>(record[1]) == kLongHeader) {
    throw Graph6Error(Kind::malformed_header, base + 1,
                      "8-byte header (order > 258047) not supported");
  } else {
    if (record.size() < 4)
      throw Graph6Error(Kind::malformed_header, base + record.size(),
                        "long-form header needs 3 size bytes");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
    if (n > kGraph6MaxOrder)
      throw Graph6Error(Kind::malformed_header, base + 1, "order out of range");
  }
  if (n > kMaxVertices)
    throw Graph6Error(Kind::order_exceeds_capacity, base,
                      "order " + std::to_string(n) + " exceeds capacity " +
                          std::to_string(kMaxVertices));

  const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (record.size() < pos + body)
    throw Graph6Error(Kind::truncated_body, base + record.size(),
                      "expected " + std::to_string(body) + " body bytes, found " +
                          std::to_string(record.size() - pos));
  if (record.size() > pos + body)
    throw Graph6Error(Kind::trailing_garbage, base + pos + body,
                      std::to_string(record.size() - pos - body) + " unexpected trailing bytes");

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      std::size_t b = byte(pos + k / 6);
      if ((b >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  if (bits % 6 != 0) {
    std::size_t last = byte(pos + body - 1);
    std::size_t pad_mask = (std::size_t{1} << (6 - bits % 6)) - 1;
    if ((last & pad_mask) != 0)
      throw Graph6Error(Kind::nonzero_padding, base + pos + body - 1, "nonzero padding bits");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder)
    throw PreconditionError("write_graph6: order exceeds graph6 limit");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kLongHeader));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error(e.kind(), e.offset(),
                        "line " + std::to_string(lineno) + ": " + to_string(e.kind()));
    }
  }
  return out;
}

}  // namespace cyclext
