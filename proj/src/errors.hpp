#ifndef BETTI_ERRORS_HPP
#define BETTI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace betti {

// The alternating numerator is not divisible by the requested power of
// (1 - t); the diagram is not consistent with a Cohen-Macaulay module of
// that codimension.
class NotDivisibleError : public std::runtime_error {
 public:
  explicit NotDivisibleError(const std::string& what)
      : std::runtime_error(what) {}
};

// The diagram is not a nonnegative combination of pure diagrams of its
// codimension. `residual` carries a rendering of the diagram state at the
// point of failure.
class NotInConeError : public std::runtime_error {
 public:
  NotInConeError(const std::string& what, std::string residual)
      : std::runtime_error(what), residual_(std::move(residual)) {}

  const std::string& residual() const { return residual_; }

 private:
  std::string residual_;
};

// The two removal sets defining a secant degree sequence collide; the
// ambient dimension is too small for the given index vector.
class OverlapError : public std::runtime_error {
 public:
  explicit OverlapError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed serialized input (JSON/CSV diagrams, ideal grammar).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace betti

#endif
