#include "cyclext/graph_input.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "cyclext/graph6.hpp"

namespace cyclext {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool read_number(std::string_view& s, std::size_t& out) {
  s = strip(s);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || p == s.data()) return false;
  s.remove_prefix(static_cast<std::size_t>(p - s.data()));
  return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::size_t lineno = 0;
  bool have_n = false;
  Graph g;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = strip(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    if (!have_n) {
      if (!line.starts_with("n=")) throw EdgeListError(lineno, "expected 'n=K' header");
      line.remove_prefix(2);
      std::size_t n = 0;
      if (!read_number(line, n) || !strip(line).empty()) throw EdgeListError(lineno, "bad vertex count");
      if (n > kMaxVertices) throw EdgeListError(lineno, "vertex count exceeds capacity");
      g = Graph(n);
      have_n = true;
      continue;
    }
    std::size_t u = 0, v = 0;
    if (!read_number(line, u) || !read_number(line, v) || !strip(line).empty())
      throw EdgeListError(lineno, "expected 'u v'");
    if (u >= g.order() || v >= g.order()) throw EdgeListError(lineno, "vertex out of range");
    if (u == v) throw EdgeListError(lineno, "self-loop");
    if (g.adjacent(u, v)) throw EdgeListError(lineno, "duplicate edge");
    g.add_edge(u, v);
  }
  if (!have_n) throw EdgeListError(lineno, "missing 'n=K' header");
  return g;
}

std::vector<Graph> read_graphs(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    std::string_view line = strip(rest.substr(0, nl));
    rest.remove_prefix(nl == std::string_view::npos ? rest.size() : nl + 1);
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("n=")) return {parse_edge_list(text)};
    break;
  }
  std::istringstream again(text);
  return read_graph6_stream(again);
}

}  // namespace cyclext
