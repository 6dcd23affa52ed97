#pragma once

#include <stdexcept>
#include <string>

namespace cflp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Evaluation of x^(s/q) with x < 0 and q even.
class NegativeBaseEvenRoot : public Error {
public:
  using Error::Error;
};

/// A precondition on the argument domain is violated.
class DomainError : public Error {
public:
  using Error::Error;
};

/// An exponent is not an integer multiple of the fractional order.
class NonCommensurate : public Error {
public:
  using Error::Error;
};

/// A lower Pochhammer parameter vanishes before a terminating series ends.
class PochhammerPole : public Error {
public:
  using Error::Error;
};

/// An iterative method exceeded its iteration cap.
class NoConvergence : public Error {
public:
  using Error::Error;
};

class IllPosed : public Error {
public:
  using Error::Error;
};

/// An initial condition y^(j)(0), j >= 1, has no meaning for the basis.
class FractionalIC : public Error {
public:
  using Error::Error;
};

class SingularSystem : public Error {
public:
  using Error::Error;
};

}  // namespace cflp
