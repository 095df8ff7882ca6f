#pragma once

#include <stdexcept>
#include <string>

namespace diolab {

/// Base class for all diolab errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on the mathematical domain was violated (n = 0, q = r, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// A certified comparison could not be decided within the precision cap.
class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what) : Error(what) {}
};

/// The input shape is valid but not handled (e.g. non-square-free supports
/// in prime compression, where exponent bookkeeping would be silently wrong).
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(what) {}
};

}  // namespace diolab
