#pragma once

#include <stdexcept>
#include <string>

namespace ashom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix or module shapes do not line up.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
};

/// delta^{n+1} * delta^n != 0; `degree()` is the first failing n.
class NotAComplex : public Error {
 public:
  NotAComplex(int degree, const std::string& what) : Error(what), degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

class NotAChainMap : public Error {
 public:
  using Error::Error;
};

class NotAHomotopy : public Error {
 public:
  using Error::Error;
};

/// A short exact sequence failed exactness; `junction()` names the failing spot.
class NotExact : public Error {
 public:
  NotExact(int junction, const std::string& what) : Error(what), junction_(junction) {}
  int junction() const noexcept { return junction_; }

 private:
  int junction_;
};

class NotExactCoefficients : public Error {
 public:
  using Error::Error;
};

class NotExactTowers : public Error {
 public:
  using Error::Error;
};

class ResolutionMismatch : public Error {
 public:
  using Error::Error;
};

/// The bounded-denominator modulus chain did not give three agreeing answers.
class SaturationFailure : public Error {
 public:
  using Error::Error;
};

class NotARefinement : public Error {
 public:
  using Error::Error;
};

class UnknownCovering : public Error {
 public:
  using Error::Error;
};

class NoStabilization : public Error {
 public:
  using Error::Error;
};

class NotEventuallyStable : public Error {
 public:
  using Error::Error;
};

/// A linear system over Z (or modulo a lattice) has no solution.
class NoSolution : public Error {
 public:
  using Error::Error;
};

}  // namespace ashom
