#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gvk {

using Point = std::vector<double>;

/// Base of every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An error that can point at a sample point where something went wrong.
class WitnessError : public Error {
 public:
  WitnessError(const std::string& what, std::optional<Point> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::optional<Point>& witness() const noexcept { return witness_; }

 private:
  std::optional<Point> witness_;
};

/// Numeric evaluation left the domain (ln of a non-positive value,
/// division by zero, non-finite result).
class DomainError : public Error {
 public:
  DomainError(const std::string& what, std::string subexpr)
      : Error(what), subexpr_(std::move(subexpr)) {}
  const std::string& subexpression() const noexcept { return subexpr_; }

 private:
  std::string subexpr_;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(std::string name)
      : Error("unknown variable '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class ChartError : public Error {
 public:
  using Error::Error;
};

/// Grade or variance preconditions of an algebraic operation.
class GradeError : public Error {
 public:
  using Error::Error;
};

class AxiomViolation : public WitnessError {
 public:
  AxiomViolation(std::string which, std::optional<Point> witness)
      : WitnessError("Jacobi axiom violated: " + which, std::move(witness)),
        which_(std::move(which)) {}
  const std::string& which() const noexcept { return which_; }

 private:
  std::string which_;
};

class NotRegular : public WitnessError {
 public:
  using WitnessError::WitnessError;
};

class CodimOutOfRange : public Error {
 public:
  CodimOutOfRange(int q, int n)
      : Error("foliation codimension q=" + std::to_string(q) +
              " outside 0<q<" + std::to_string(n)),
        q_(q) {}
  int codim() const noexcept { return q_; }

 private:
  int q_;
};

class NoCompanion : public WitnessError {
 public:
  using WitnessError::WitnessError;
};

/// An identity the kernel guarantees did not hold; signals a bug, not bad input.
class InvariantFailure : public WitnessError {
 public:
  InvariantFailure(std::string identity, std::optional<Point> witness)
      : WitnessError("invariant failed: " + identity, std::move(witness)),
        identity_(std::move(identity)) {}
  const std::string& identity() const noexcept { return identity_; }

 private:
  std::string identity_;
};

class NotContact : public WitnessError {
 public:
  using WitnessError::WitnessError;
};

class SingularFlat : public Error {
 public:
  using Error::Error;
};

class NotLcs : public WitnessError {
 public:
  NotLcs(std::string condition, std::optional<Point> witness)
      : WitnessError("not an LCS structure: " + condition, std::move(witness)),
        condition_(std::move(condition)) {}
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class RescaleVanishes : public WitnessError {
 public:
  using WitnessError::WitnessError;
};

class NotCodimOne : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input its contract excludes.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message,
             std::vector<std::string> expected = {});
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

}  // namespace gvk
