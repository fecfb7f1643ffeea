#include "cyclext/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "cyclext/cycle_oracle.hpp"
#include "cyclext/error.hpp"
#include "cyclext/local_props.hpp"

namespace cyclext {

namespace detail {
extern const std::string_view kEmbeddedCatalog;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw CatalogError("catalog line " + std::to_string(line) + ": " + what);
}

std::size_t to_number(std::string_view s, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) fail(line, "bad number '" + std::string(s) + "'");
  return v;
}

struct Stanza {
  std::size_t first_line = 0;
  std::map<std::string, std::pair<std::string, std::size_t>> fields;
};

PatternGraph build_pattern(const Stanza& st) {
  auto get = [&](const std::string& key, bool required) -> std::optional<std::pair<std::string, std::size_t>> {
    auto it = st.fields.find(key);
    if (it == st.fields.end()) {
      if (required) fail(st.first_line, "stanza is missing '" + key + "'");
      return std::nullopt;
    }
    return it->second;
  };
  PatternGraph p;
  p.name = get("name", true)->first;
  if (p.name.empty()) fail(st.first_line, "empty name");
  auto [n_text, n_line] = *get("n", true);
  const std::size_t n = to_number(n_text, n_line);
  if (n > kMaxVertices) fail(n_line, "order exceeds capacity");
  p.graph = Graph(n);

  auto [edge_text, edge_line] = *get("edges", true);
  for (std::string_view tok : split_ws(edge_text)) {
    const auto dash = tok.find('-');
    if (dash == std::string_view::npos) fail(edge_line, "edge '" + std::string(tok) + "' lacks '-'");
    const std::size_t u = to_number(tok.substr(0, dash), edge_line);
    const std::size_t v = to_number(tok.substr(dash + 1), edge_line);
    if (u >= n || v >= n || u == v) fail(edge_line, "bad edge '" + std::string(tok) + "'");
    if (p.graph.adjacent(u, v)) fail(edge_line, "duplicate edge '" + std::string(tok) + "'");
    p.graph.add_edge(u, v);
  }

  auto [att_text, att_line] = *get("attachment", true);
  for (std::string_view tok : split_ws(att_text)) {
    const std::size_t v = to_number(tok, att_line);
    if (v >= n) fail(att_line, "attachment vertex out of range");
    p.attachment.insert(v);
  }
  if (auto cut = get("cut-degrees", false))
    for (std::string_view tok : split_ws(cut->first)) p.cut_degrees.push_back(to_number(tok, cut->second));
  p.provenance = get("provenance", true)->first;
  return p;
}

// Values stated for each pattern. Zero means "not constrained".
struct Expected {
  std::size_t order = 0;
  std::size_t max_degree = 0;
  std::size_t edges = 0;
  std::vector<std::size_t> degrees;  // sorted, empty when unconstrained
  bool standalone_in_hypothesis = false;
  bool check_weakly_pancyclic = false;
};

const std::map<std::string, Expected>& expectations() {
  static const std::map<std::string, Expected> table{
      {"H1", {6, 5, 10, {2, 2, 3, 3, 5, 5}, true, true}},
      {"H2", {7, 6, 14, {2, 2, 4, 4, 4, 6, 6}, true, true}},
      {"H3", {7, 6, 14, {}, true, true}},
      {"H4", {8, 6, 16, {}, false, false}},
      {"H5", {8, 6, 16, {}, false, false}},
      {"F1", {7, 6, 15, {3, 3, 3, 3, 6, 6, 6}, false, true}},
      {"F2", {7, 5, 12, {}, false, true}},
      {"F3", {9, 6, 18, {}, false, true}},
      {"F4", {9, 6, 18, {}, false, true}},
  };
  return table;
}

bool in_hypothesis(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  const DegreeStats d = degree_stats(g);
  if (d.min_degree < 2 || d.max_degree > 6) return false;
  if (!is_locally_connected(g).locally_connected) return false;
  return min_clustering_coefficient(g) >= Rational(1, 2);
}

}  // namespace

VertexSet PatternGraph::cut() const {
  VertexSet u;
  for (Vertex v = 0; v < graph.order(); ++v)
    if (std::find(cut_degrees.begin(), cut_degrees.end(), graph.degree(v)) != cut_degrees.end())
      u.insert(v);
  return u;
}

std::vector<PatternGraph> parse_catalog(std::string_view text) {
  std::vector<PatternGraph> out;
  std::optional<Stanza> cur;
  std::size_t lineno = 0;
  auto flush = [&] {
    if (cur) out.push_back(build_pattern(*cur));
    cur.reset();
  };
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++lineno;
    line = trim(line);
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      flush();
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(lineno, "expected 'key: value'");
    std::string key(trim(line.substr(0, colon)));
    std::string value(trim(line.substr(colon + 1)));
    if (!cur) {
      cur.emplace();
      cur->first_line = lineno;
    }
    if (!cur->fields.emplace(key, std::make_pair(value, lineno)).second)
      fail(lineno, "repeated key '" + key + "'");
  }
  flush();
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (out[i].name == out[j].name) throw CatalogError("catalog: duplicate pattern " + out[i].name);
  return out;
}

std::vector<PatternGraph> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("catalog: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

std::string_view embedded_catalog_text() { return detail::kEmbeddedCatalog; }

std::string format_catalog(const std::vector<PatternGraph>& patterns) {
  std::ostringstream os;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const PatternGraph& p = patterns[i];
    if (i) os << '\n';
    os << "name: " << p.name << "\nn: " << p.graph.order() << "\nedges:";
    for (auto [u, v] : p.graph.edges()) os << ' ' << u << '-' << v;
    os << "\nattachment:";
    p.attachment.for_each([&](Vertex v) { os << ' ' << v; });
    if (!p.cut_degrees.empty()) {
      os << "\ncut-degrees:";
      for (std::size_t d : p.cut_degrees) os << ' ' << d;
    }
    os << "\nprovenance: " << p.provenance << '\n';
  }
  return os.str();
}

std::vector<SelfCheck> run_self_checks(const std::vector<PatternGraph>& patterns, std::uint64_t budget) {
  std::vector<SelfCheck> out;
  for (const PatternGraph& p : patterns) {
    auto add = [&](std::string check, bool passed, std::string detail = {}) {
      out.push_back({p.name, std::move(check), passed, std::move(detail)});
    };
    const Graph& g = p.graph;
    auto exp_it = expectations().find(p.name);
    if (exp_it == expectations().end()) {
      add("known_name", false, "no expectations recorded for this name");
      continue;
    }
    const Expected& e = exp_it->second;

    add("order", g.order() == e.order, "n=" + std::to_string(g.order()));
    add("edge_count", g.size() == e.edges, "m=" + std::to_string(g.size()));
    add("connected", g.order() > 0 && is_connected(g));
    if (g.order() == 0 || !is_connected(g)) continue;

    const DegreeStats d = degree_stats(g);
    add("max_degree", d.max_degree == e.max_degree, "max degree " + std::to_string(d.max_degree));
    if (!e.degrees.empty()) {
      std::vector<std::size_t> seq;
      for (Vertex v = 0; v < g.order(); ++v) seq.push_back(g.degree(v));
      std::sort(seq.begin(), seq.end());
      add("degree_sequence", seq == e.degrees);
    }
    const bool is_f = p.name.front() == 'F';
    add("attachment", is_f ? p.attachment.empty() : !p.attachment.empty(),
        is_f ? "whole graph, empty attachment" : "pattern needs a nonempty attachment set");

    const VertexSet cut = p.cut();
    add("cut_witness", !cut.empty() && cut_set_nonhamiltonicity_witness(g, cut),
        "|U|=" + std::to_string(cut.size()) + ", components=" + std::to_string(components(g, cut).size()));
    add("oracle_nonhamiltonian", !is_hamiltonian(g, budget).hamiltonian);

    if (e.standalone_in_hypothesis) {
      add("in_hypothesis", in_hypothesis(g));
      add("not_fully_cycle_extendable", !is_fully_cycle_extendable(g, {budget}).fully_cycle_extendable);
    }
    if (e.check_weakly_pancyclic) add("weakly_pancyclic", is_weakly_pancyclic(g, budget));
  }
  return out;
}

std::vector<PatternGraph> build_catalog() {
  std::vector<PatternGraph> patterns = parse_catalog(embedded_catalog_text());
  if (patterns.size() != 9)
    throw CatalogError("catalog: expected 9 patterns, found " + std::to_string(patterns.size()));
  for (const SelfCheck& c : run_self_checks(patterns))
    if (!c.passed)
      throw CatalogError("catalog self-check failed: " + c.pattern + " " + c.check +
                         (c.detail.empty() ? "" : " (" + c.detail + ")"));
  return patterns;
}

const std::vector<PatternGraph>& catalog() {
  static const std::vector<PatternGraph> built = build_catalog();
  return built;
}

const PatternGraph& find_pattern(std::string_view name) {
  for (const PatternGraph& p : catalog())
    if (p.name == name) return p;
  throw CatalogError("catalog: unknown pattern " + std::string(name));
}

}  // namespace cyclext
