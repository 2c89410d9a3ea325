#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotarith {

/// Base of every recoverable error raised by the library. The kind decides the
/// process exit code used by the command-line front end.
class Error : public std::runtime_error {
 public:
  enum class Kind { Validation, Budget };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(Kind::Validation, what) {}
};

/// Enumeration or search did not close within the configured number of cosets.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::size_t limit)
      : Error(Kind::Budget, "coset budget exceeded (max_cosets = " + std::to_string(limit) + ")"),
        limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

/// Text input error with a 1-based line/column position.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : ValidationError(msg + " at line " + std::to_string(line) + ", column " +
                        std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class IncompleteTable : public ValidationError {
 public:
  IncompleteTable() : ValidationError("coset table is not complete") {}
};

class RelatorViolation : public ValidationError {
 public:
  explicit RelatorViolation(std::size_t index)
      : ValidationError("permutation images violate relator " + std::to_string(index)),
        index_(index) {}
  std::size_t relator_index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class NonNormal : public ValidationError {
 public:
  NonNormal() : ValidationError("subgroup is not normal") {}
};

class NotPrime : public ValidationError {
 public:
  explicit NotPrime(const std::string& what) : ValidationError(what) {}
};

class DimensionMismatch : public ValidationError {
 public:
  explicit DimensionMismatch(const std::string& what) : ValidationError(what) {}
};

class IllDefinedMap : public ValidationError {
 public:
  explicit IllDefinedMap(std::size_t position)
      : ValidationError("map " + std::to_string(position) + " does not respect relations"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class EdgeCountMismatch : public ValidationError {
 public:
  explicit EdgeCountMismatch(const std::string& what) : ValidationError(what) {}
};

/// The diagram does not trace a single oriented closed curve.
class MultiComponent : public ValidationError {
 public:
  explicit MultiComponent(const std::string& what) : ValidationError(what) {}
};

class UnknownKnot : public ValidationError {
 public:
  explicit UnknownKnot(const std::string& name) : ValidationError("unknown knot '" + name + "'") {}
};

class NotWirtinger : public ValidationError {
 public:
  explicit NotWirtinger(const std::string& what) : ValidationError(what) {}
};

class NotOddPrime : public ValidationError {
 public:
  explicit NotOddPrime(const std::string& what) : ValidationError(what + " is not an odd prime") {}
};

class EqualPrimes : public ValidationError {
 public:
  EqualPrimes() : ValidationError("primes must be distinct") {}
};

class NotSquarefree : public ValidationError {
 public:
  explicit NotSquarefree(const std::string& what) : ValidationError(what + " is not squarefree") {}
};

}  // namespace knotarith
