#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subshift {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the domain of an operation (unknown symbol, non-primitive
/// substitution, word not in the language, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A language table is too shallow for the requested window or depth.
class DepthError : public Error {
 public:
  using Error::Error;
};

/// An iteration cap was reached before a construction stabilized.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The endomorphism search ran out of its node budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t nodes, std::uint64_t budget)
      : Error("search node budget exceeded: " + std::to_string(nodes) +
              " nodes visited, budget " + std::to_string(budget)),
        nodes_(nodes) {}
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace subshift
