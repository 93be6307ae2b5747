#ifndef FINSEMI_ERRORS_HPP_
#define FINSEMI_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace finsemi {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input table is not a valid Cayley table (non-square, out-of-range entry,
// bad names list, ...).
class MalformedTableError : public Error {
 public:
  using Error::Error;
};

// Input table fails associativity; carries the first violating triple in
// lexicographic (i, j, k) order.
class NonAssociativeError : public Error {
 public:
  NonAssociativeError(unsigned i, unsigned j, unsigned k)
      : Error("table is not associative: (" + std::to_string(i) + "*"
              + std::to_string(j) + ")*" + std::to_string(k) + " != "
              + std::to_string(i) + "*(" + std::to_string(j) + "*"
              + std::to_string(k) + ")"),
        i(i),
        j(j),
        k(k) {}
  unsigned i, j, k;
};

// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same value disagreed. This always
// signals a bug in the library, never bad input.
class InternalInconsistencyError : public Error {
 public:
  using Error::Error;
};

class NotClosedError : public Error {
 public:
  using Error::Error;
};

class NotInverseError : public Error {
 public:
  using Error::Error;
};

class NotAKernelError : public Error {
 public:
  using Error::Error;
};

class NotACongruenceError : public Error {
 public:
  using Error::Error;
};

class NotAGroupError : public Error {
 public:
  using Error::Error;
};

class BoundExceededError : public Error {
 public:
  using Error::Error;
};

class DegreeTooLargeError : public Error {
 public:
  using Error::Error;
};

class UnknownConstructionError : public Error {
 public:
  using Error::Error;
};

class UnknownTheoremError : public Error {
 public:
  using Error::Error;
};

// Raised while reading a table file, before semantic validation starts.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace finsemi

#endif  // FINSEMI_ERRORS_HPP_
