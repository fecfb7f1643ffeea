#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "cyclext/error.hpp"
#include "cyclext/graph.hpp"

namespace cyclext {

/// Largest order expressible with the 4-byte graph6 header.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

class Graph6Error : public Error {
 public:
  enum class Kind {
    empty_record,
    malformed_header,
    non_printable_byte,
    truncated_body,
    nonzero_padding,
    trailing_garbage,
    order_exceeds_capacity,
  };

  Graph6Error(Kind kind, std::size_t offset, const std::string& what);

  Kind kind() const noexcept { return kind_; }
  /// Byte offset into the record where the problem was detected.
  std::size_t offset() const noexcept { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

const char* to_string(Graph6Error::Kind kind);

/// Decodes one graph6 record. An optional ">>graph6<<" prefix and a single
/// trailing newline (LF or CRLF) are accepted.
Graph parse_graph6(std::string_view record);

/// Canonical graph6 record (minimal header, zero padding, no newline).
std::string write_graph6(const Graph& g);

/// Reads a newline-delimited graph6 stream, skipping blank lines. Parse errors
/// are rethrown with the 1-based line number prepended.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace cyclext
