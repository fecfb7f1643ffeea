#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclext {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (bad vertex id, u == v, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Clustering coefficient requested for a vertex of degree 0 or 1.
class UndefinedCoefficient : public Error {
 public:
  UndefinedCoefficient(std::size_t vertex, std::size_t degree)
      : Error("clustering coefficient undefined at vertex " +
              std::to_string(vertex) + " (degree " + std::to_string(degree) +
              " < 2)"),
        vertex_(vertex),
        degree_(degree) {}

  std::size_t vertex() const noexcept { return vertex_; }
  std::size_t degree() const noexcept { return degree_; }

 private:
  std::size_t vertex_;
  std::size_t degree_;
};

/// An oracle was asked a question outside its domain (disconnected input,
/// extendability of a hamiltonian cycle, acyclic graph, ...).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search exceeded its work budget. Never converted into an
/// answer.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : Error("search budget of " + std::to_string(budget) + " exceeded"),
        budget_(budget) {}

  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

/// The recognizer met a graph the characterization says cannot exist.
class InternalContradiction : public Error {
 public:
  using Error::Error;
};

/// A forbidden-pattern catalog failed to load or failed a self-check.
class CatalogError : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclext
