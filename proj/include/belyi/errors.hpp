#pragma once

#include <stdexcept>
#include <string>

namespace belyi {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An integer argument lies outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// gcd(n, k(k+1)) != 1: the cover is not totally ramified at all three points.
class RamificationError : public Error {
 public:
  RamificationError(const std::string& what, long long gcd) : Error(what), gcd_(gcd) {}
  long long gcd() const { return gcd_; }

 private:
  long long gcd_;
};

class MultiplicityError : public Error {
 public:
  using Error::Error;
};

/// The word does not lie in the commutator subgroup.
class NotACommutatorError : public Error {
 public:
  using Error::Error;
};

class NotCoprimeError : public Error {
 public:
  using Error::Error;
};

class UnsupportedInertiaError : public Error {
 public:
  using Error::Error;
};

/// A symbol combination still carries [A^r] terms.
class UnreducedError : public Error {
 public:
  using Error::Error;
};

class NotACycleError : public Error {
 public:
  using Error::Error;
};

/// Checked integer arithmetic left the range of the scalar type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace belyi
