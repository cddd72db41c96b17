#pragma once

#include <stdexcept>
#include <string>

namespace netlog {

// Base class for all library failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-domain input; the CLI maps this to exit code 2.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

// A named precondition/invariant check failed on valid-looking input.
class CheckFailed : public InputError {
 public:
  CheckFailed(const std::string& check, const std::string& detail)
      : InputError("check '" + check + "' failed: " + detail), check_(check) {}
  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

// A degree or length cap was hit; the CLI maps this to exit code 3.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class NotInvertible : public Error {
 public:
  explicit NotInvertible(const std::string& what) : Error(what) {}
};

}  // namespace netlog
