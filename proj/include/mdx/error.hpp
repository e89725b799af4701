#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mdx {

/// Malformed input file. `line()` is 1-based, or 0 when the error is not tied
/// to a particular line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A request exceeds a configured size cap (LP size, symmetry search, oracle).
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The simplex hit its iteration cap or lost feasibility numerically.
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A metric violates consistency with a profile, or the metric axioms.
class InconsistentMetric : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mdx
