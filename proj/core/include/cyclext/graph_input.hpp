#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "cyclext/error.hpp"
#include "cyclext/graph.hpp"

namespace cyclext {

class EdgeListError : public Error {
 public:
  EdgeListError(std::size_t line, const std::string& what)
      : Error("edge list line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Edge-list text: a line "n=K" followed by "u v" lines. Blank lines and
/// lines starting with '#' are ignored. Duplicate edges are rejected.
Graph parse_edge_list(std::string_view text);

/// Reads either a single edge list (first meaningful line starts with "n=")
/// or a graph6 stream with one graph per line.
std::vector<Graph> read_graphs(std::istream& in);

}  // namespace cyclext
