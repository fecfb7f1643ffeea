#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cyclext/graph.hpp"

namespace cyclext {

/// A forbidden structure. H patterns are matched as strongly induced
/// subgraphs with the given attachment set; F graphs (empty attachment) are
/// matched by isomorphism with the whole host.
struct PatternGraph {
  std::string name;
  Graph graph;
  VertexSet attachment;
  /// Degrees whose vertices make up the nonhamiltonicity cut.
  std::vector<std::size_t> cut_degrees;
  std::string provenance;

  bool whole_graph() const { return attachment.empty(); }
  VertexSet cut() const;
};

/// Parses the stanza format:
///   name: H1
///   n: 6
///   edges: 0-1 0-2 ...
///   attachment: 4 5
///   cut-degrees: 5          (optional)
///   provenance: free text
/// Stanzas are separated by blank lines; '#' starts a comment line. Throws
/// CatalogError naming the line on malformed input.
std::vector<PatternGraph> parse_catalog(std::string_view text);

/// Reads and parses a catalog file.
std::vector<PatternGraph> load_catalog_file(const std::string& path);

/// The catalog text compiled into the library.
std::string_view embedded_catalog_text();

/// Writes patterns back in the stanza format.
std::string format_catalog(const std::vector<PatternGraph>& patterns);

struct SelfCheck {
  std::string pattern;
  std::string check;
  bool passed = false;
  std::string detail;
};

/// Every structural and oracle check on every pattern, in a fixed order.
std::vector<SelfCheck> run_self_checks(const std::vector<PatternGraph>& patterns,
                                       std::uint64_t budget = 10'000'000);

/// Parses the embedded catalog and runs the self-checks. Throws CatalogError
/// naming the first failing pattern and check.
std::vector<PatternGraph> build_catalog();

/// build_catalog(), computed once per process.
const std::vector<PatternGraph>& catalog();

/// Throws CatalogError for an unknown name.
const PatternGraph& find_pattern(std::string_view name);

}  // namespace cyclext
