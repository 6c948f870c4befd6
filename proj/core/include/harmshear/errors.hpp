#pragma once

#include <stdexcept>
#include <string>

namespace harmshear {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive routine exhausted its depth or iteration budget.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

/// An evaluation produced NaN or Inf (including overflow).
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of the operation (e.g. |z| >= 1, log 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameter set (e.g. c a nonpositive integer).
class ParamError : public Error {
 public:
  using Error::Error;
};

/// Argument hits a pole of the function.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Index outside the admissible set.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// eta is an n-th root of unity; the resonant formula must be used.
class ResonanceError : public Error {
 public:
  using Error::Error;
};

/// Operation requires a specific parity of n.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// Dilatation is not the square of an analytic function.
class NotLiftableError : public Error {
 public:
  using Error::Error;
};

/// Case not covered by a closed form.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

namespace detail {
[[noreturn]] void throw_non_finite(const std::string& where);
}  // namespace detail

}  // namespace harmshear
