#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ellcarm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (curve, integer, point, job spec).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a mathematical precondition, e.g. a point off the curve.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class BadReduction : public Error {
 public:
  BadReduction(std::vector<mpz_class> primes, const std::string& what)
      : Error(what), primes_(std::move(primes)) {}

  const std::vector<mpz_class>& primes() const noexcept { return primes_; }

 private:
  std::vector<mpz_class> primes_;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

// The predicate has no meaning for this input (odd N+1-a_N for the Euler test).
class UndefinedPredicate : public Error {
 public:
  using Error::Error;
};

class NotComposite : public Error {
 public:
  NotComposite()
      : Error("N must have at least two distinct prime factors") {}
};

class FactorizationBudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ellcarm
