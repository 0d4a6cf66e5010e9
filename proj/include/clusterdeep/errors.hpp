#pragma once

#include <stdexcept>
#include <string>

namespace clusterdeep {

// Base of every error raised by the library. `code()` is the stable
// machine-readable identifier used in JSON error bodies.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Malformed or out-of-contract input (CLI exit code 2).
class InputError : public Error {
 public:
  explicit InputError(const std::string& message, std::string code = "InvalidInput")
      : Error(std::move(code), message) {}
};

// A configured resource cap was hit (CLI exit code 3).
class ResourceCap : public Error {
 public:
  explicit ResourceCap(const std::string& message, std::string code = "ResourceCap")
      : Error(std::move(code), message) {}
};

class NotDivisible : public Error {
 public:
  explicit NotDivisible(const std::string& message) : Error("NotDivisible", message) {}
};

class LaurentPhenomenonViolation : public Error {
 public:
  explicit LaurentPhenomenonViolation(const std::string& message)
      : Error("LaurentPhenomenonViolation", message) {}
};

class ZeroAtNegativeExponent : public InputError {
 public:
  explicit ZeroAtNegativeExponent(const std::string& message)
      : InputError(message, "ZeroAtNegativeExponent") {}
};

class NotAcyclic : public InputError {
 public:
  explicit NotAcyclic(const std::string& message) : InputError(message, "NotAcyclic") {}
};

class InconsistentPoint : public InputError {
 public:
  explicit InconsistentPoint(const std::string& message)
      : InputError(message, "InconsistentPoint") {}
};

class RelationUnsatisfiable : public InputError {
 public:
  explicit RelationUnsatisfiable(const std::string& message)
      : InputError(message, "RelationUnsatisfiable") {}
};

class WrongShape : public InputError {
 public:
  explicit WrongShape(const std::string& message) : InputError(message, "WrongShape") {}
};

class InvalidPoint : public InputError {
 public:
  explicit InvalidPoint(const std::string& message) : InputError(message, "InvalidPoint") {}
};

// Raised when a point's zero set is not independent; this can only happen
// if an invalid point got past validation.
class NonIndependentZeroSet : public Error {
 public:
  explicit NonIndependentZeroSet(const std::string& message)
      : Error("NonIndependentZeroSet", message) {}
};

}  // namespace clusterdeep
