#pragma once

#include <stdexcept>
#include <string>

namespace twistalg {

/// Inputs that cannot be interpreted: mismatched truncation orders, arity
/// mismatches, malformed payloads. The CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input failed (exp of a non-nilpotent
/// series, log away from 1, non-symmetric 3-tensor, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotInvertible : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An identity that must hold exactly did not. Carries the name of the
/// asserted identity so reports can point at it.
class MathViolation : public std::runtime_error {
 public:
  MathViolation(std::string identity, const std::string& detail)
      : std::runtime_error(identity + ": " + detail), identity_(std::move(identity)) {}

  const std::string& identity() const noexcept { return identity_; }

 private:
  std::string identity_;
};

class NotACocycle : public MathViolation {
 public:
  explicit NotACocycle(const std::string& detail) : MathViolation("cocycle", detail) {}
};

class NoSolution : public MathViolation {
 public:
  explicit NoSolution(const std::string& detail) : MathViolation("solve_coboundary", detail) {}
};

class NotInvariant : public MathViolation {
 public:
  explicit NotInvariant(const std::string& detail) : MathViolation("invariance", detail) {}
};

class NotAnAutomorphism : public MathViolation {
 public:
  explicit NotAnAutomorphism(const std::string& detail)
      : MathViolation("lie_automorphism", detail) {}
};

class CYBEViolation : public MathViolation {
 public:
  explicit CYBEViolation(const std::string& detail) : MathViolation("cybe", detail) {}
};

}  // namespace twistalg
