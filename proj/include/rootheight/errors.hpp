#pragma once

#include <stdexcept>
#include <string>

namespace rootheight {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// Two independent evaluation routes disagreed; always signals a kernel bug.
class MethodMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

class InvalidRank : public Error {
 public:
  using Error::Error;
};

class ReconstructionMismatch : public Error {
 public:
  using Error::Error;
};

class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

class DegreeTooHigh : public Error {
 public:
  using Error::Error;
};

class NoTripleFound : public Error {
 public:
  using Error::Error;
};

}  // namespace rootheight
