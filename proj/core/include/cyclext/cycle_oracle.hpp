#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyclext/error.hpp"
#include "cyclext/graph.hpp"

namespace cyclext {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Counts units of search work and throws BudgetExceeded past the limit.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}

  void charge(std::uint64_t units = 1) {
    used_ += units;
    if (used_ > limit_) throw BudgetExceeded(limit_);
  }
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// A cycle v0 v1 ... v_{t-1} v0 in a host graph. The vertex order given at
/// construction is kept; canonical() produces the dedup form.
class Cycle {
 public:
  /// Throws PreconditionError unless seq is a valid cycle of g (t >= 3,
  /// distinct in-range vertices, consecutive vertices adjacent).
  Cycle(const Graph& g, std::vector<Vertex> seq);

  std::size_t host_order() const noexcept { return host_n_; }
  std::size_t length() const noexcept { return seq_.size(); }
  const std::vector<Vertex>& seq() const noexcept { return seq_; }
  Vertex operator[](std::size_t i) const { return seq_[i % seq_.size()]; }
  VertexSet vertex_set() const;

  /// Rotated and possibly reflected so seq is lexicographically minimal.
  Cycle canonical() const;

  bool valid_in(const Graph& g) const;

  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  Cycle() = default;
  std::size_t host_n_ = 0;
  std::vector<Vertex> seq_;
};

std::string to_string(const Cycle& c);

/// Restricts for_each_cycle.
struct CycleFilter {
  std::optional<VertexSet> within;  ///< restrict to cycles inside this set
  std::size_t min_length = 3;
  std::size_t max_length = kMaxVertices;
};

/// Visits every cycle of g exactly once: rooted at its smallest vertex, with
/// the second vertex smaller than the last. The callback returns false to
/// stop early. Each DFS node is charged to the budget.
void for_each_cycle(const Graph& g, const std::function<bool(const std::vector<Vertex>&)>& fn,
                    Budget& budget, const CycleFilter& filter = {});

/// A Hamilton cycle of <s>, or nothing. Degree-ordered backtracking.
std::optional<std::vector<Vertex>> hamiltonian_cycle_on(const Graph& g, const VertexSet& s,
                                                        Budget& budget);

struct HamiltonResult {
  bool hamiltonian = false;
  std::optional<Cycle> witness;
};

/// Throws NotApplicable when g is disconnected or n < 3.
HamiltonResult is_hamiltonian(const Graph& g, std::uint64_t budget = kDefaultBudget);

struct CycleSpectrum {
  std::optional<std::size_t> girth;
  std::optional<std::size_t> circumference;
  std::set<std::size_t> present;
};

/// Each length 3..n is decided by its own search. Acyclic graphs give an
/// empty spectrum.
CycleSpectrum cycle_spectrum(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// Throws NotApplicable when g is acyclic.
bool is_weakly_pancyclic(const Graph& g, std::uint64_t budget = kDefaultBudget);
bool is_weakly_pancyclic(const CycleSpectrum& s);

/// Throws PreconditionError when n < 3.
bool is_pancyclic(const Graph& g, std::uint64_t budget = kDefaultBudget);

struct ExtensionResult {
  bool extendable = false;
  std::optional<Cycle> witness;  ///< a cycle on V(c) plus one vertex
};

/// Searches, for each off-cycle w, for a Hamilton cycle of <V(c) + w>.
/// Throws NotApplicable for a hamiltonian cycle, PreconditionError if c is
/// not a cycle of g.
ExtensionResult is_cycle_extendable_at(const Graph& g, const Cycle& c,
                                       std::uint64_t budget = kDefaultBudget);

enum class FceMethod {
  automatic,          ///< subset_dp when n <= kSubsetDpMaxOrder
  subset_dp,          ///< dynamic programme over vertex sets
  cycle_enumeration,  ///< enumerate every cycle, extend each vertex set
};

inline constexpr std::size_t kSubsetDpMaxOrder = 22;

struct OracleOptions {
  std::uint64_t budget = kDefaultBudget;
  FceMethod method = FceMethod::automatic;
};

struct FceResult {
  enum class Failure { none, vertex_not_on_triangle, non_extendable_cycle };

  bool fully_cycle_extendable = false;
  Failure failure = Failure::none;
  std::optional<Vertex> triangle_free_vertex;
  std::optional<Cycle> counterexample;  ///< shortest non-extendable cycle
};

const char* to_string(FceResult::Failure f);

/// A cycle's extendability depends only on its vertex set, so both routes
/// look for the smallest vertex set that carries a cycle but cannot grow by
/// one. Throws NotApplicable when n < 3 or g is disconnected.
FceResult is_fully_cycle_extendable(const Graph& g, const OracleOptions& opts = {});

/// Every vertex set S with |S| < n such that <S> is hamiltonian but no
/// <S + w> is. Sorted by size, then by bitmask value.
std::vector<VertexSet> non_extendable_cycle_sets(const Graph& g, const OracleOptions& opts = {});

struct Lemma1Violation {
  int statement = 0;   ///< 1..4
  std::size_t i = 0;   ///< positions on the cycle
  std::size_t j = 0;
  Vertex common = 0;   ///< the shared off-cycle neighbour
  std::string detail;
};

std::string to_string(const Lemma1Violation& v);

/// Evaluates the four statements for every ordered pair of attachment
/// positions sharing an off-cycle neighbour. Does not check that c is
/// non-extendable, so it can be pointed at a deliberately broken input.
std::vector<Lemma1Violation> evaluate_lemma1_statements(const Graph& g, const Cycle& c);

/// Same as above; throws PreconditionError when c is extendable or hamiltonian.
std::vector<Lemma1Violation> check_lemma1(const Graph& g, const Cycle& c,
                                          std::uint64_t budget = kDefaultBudget);

/// components(g - u) > |u|, a certificate that g is not hamiltonian. For an
/// empty u this means g is disconnected. Throws PreconditionError when u is
/// not a subset of V(g).
bool cut_set_nonhamiltonicity_witness(const Graph& g, const VertexSet& u);

}  // namespace cyclext
