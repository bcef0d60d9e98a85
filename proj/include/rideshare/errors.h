#ifndef RIDESHARE_ERRORS_H_
#define RIDESHARE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace rideshare {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A ride that leaves 1..n, or steps between non-adjacent nodes.
class MalformedRideError : public Error {
 public:
  using Error::Error;
};

// Caller violated a documented precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// An argument is outside the domain of the operation (e.g. node not in 1..n).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A solver postcondition failed. Seeing one of these is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Unrolling tuple does not satisfy the window conditions.
class TupleRejectedError : public Error {
 public:
  using Error::Error;
};

class OracleTooLargeError : public Error {
 public:
  using Error::Error;
};

// Instance or solution file does not match its schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rideshare

#endif  // RIDESHARE_ERRORS_H_
