#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace ellcarm {

struct PrimePower {
  mpz_class prime;
  unsigned long exponent = 0;

  mpz_class value() const;
  bool operator==(const PrimePower&) const = default;
};

struct Factorization {
  std::vector<PrimePower> factors;  // primes strictly increasing

  mpz_class value() const;
  bool squarefree() const;
  std::size_t distinct() const { return factors.size(); }
  std::string to_string() const;
  bool operator==(const Factorization&) const = default;
};

struct TwoPowerSplit {
  unsigned long s = 0;
  mpz_class t;  // odd
};

struct Infinity {
  bool operator==(const Infinity&) const = default;
};

using Valuation = std::variant<unsigned long, Infinity>;

struct Residue {
  mpz_class value;
  mpz_class modulus;
};

// Jacobi symbol by the reciprocity ladder; n must be odd and positive.
int jacobi(const mpz_class& a, const mpz_class& n);
int jacobi_small(std::int64_t a, std::int64_t n);

Valuation padic_order(const mpz_class& n, const mpz_class& p);

// true iff n >= v, treating Infinity as larger than every integer
bool valuation_at_least(const Valuation& v, unsigned long bound);

bool is_probable_prime(const mpz_class& n);

constexpr unsigned kDefaultDigitBudget = 60;

Factorization factorize(const mpz_class& n, unsigned digit_budget = kDefaultDigitBudget);

// Result lies in [0, product of moduli).
Residue crt_combine(const std::vector<Residue>& residues);

TwoPowerSplit split_two_power(const mpz_class& m);

mpz_class lcm(const mpz_class& a, const mpz_class& b);

// Unique representative in [0, m).
mpz_class mod(const mpz_class& a, const mpz_class& m);

// Inverse modulo m; returns false when gcd(a, m) != 1.
bool try_invert(mpz_class& out, const mpz_class& a, const mpz_class& m);

mpz_class parse_integer(const std::string& text);

}  // namespace ellcarm

namespace ellcarm {

using WordFactorization = std::vector<std::pair<std::uint64_t, unsigned>>;

// Trial division; intended for word-sized group orders.
WordFactorization factor_word(std::uint64_t n);

// Primes in [lo, hi] by a simple sieve.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

}  // namespace ellcarm
