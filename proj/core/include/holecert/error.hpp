#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace holecert {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph, digraph, or certificate text. line() is 1-based; 0 when
// the problem is not tied to a single line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A lemma conclusion that the pipeline re-checks at runtime did not hold.
// The driver answers it by falling back to the exact solver.
class StructuralViolation : public Error {
 public:
  StructuralViolation(std::string clause, const std::string& detail)
      : Error(clause + ": " + detail), clause_(std::move(clause)) {}
  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace holecert
