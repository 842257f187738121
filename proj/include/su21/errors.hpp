#pragma once

#include <stdexcept>
#include <string>

namespace su21 {

// Base of everything the library throws on bad input or a failed internal check.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

// Argument lies outside the group an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// sigma could not be rounded to an integer within tolerance at any base point.
class SigmaToleranceError : public Error {
 public:
  using Error::Error;
};

class IndexOverflow : public Error {
 public:
  using Error::Error;
};

// The membership predicate handed to Reidemeister-Schreier is not a subgroup.
class OracleInconsistency : public Error {
 public:
  using Error::Error;
};

class IncompleteDictionary : public Error {
 public:
  using Error::Error;
};

// The central generator (I3,1) has infinite order in the abelianized cover.
class InfiniteOrder : public Error {
 public:
  using Error::Error;
};

class BaseCaseReached : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace su21
