#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "ellcarm/arith.hpp"
#include "ellcarm/curve.hpp"
#include "ellcarm/fp.hpp"

namespace ellcarm {

struct TraceOptions {
  bool cross_check = true;
  std::uint64_t cross_check_above = 100000;
  unsigned workers = 0;  // 0: thread_count()
};

// a_p = p + 1 - #E(F_p) by a character sum over x. Throws BadReduction when p | disc.
long trace_of_frobenius(const WeierstrassCurve& E, std::uint64_t p, const TraceOptions& opt = {});

// a_p for y^2 = x^3 + A x + B mod p (p odd) using a precomputed character table.
long trace_short(std::uint64_t A, std::uint64_t B, std::uint64_t p,
                 const std::vector<std::int8_t>& chi);

// Second witness: random points are killed by p+1-a_p and, when a point's order has a unique
// multiple in the Hasse window, that multiple is p+1-a_p. Returns false on inconsistency.
bool trace_cross_check(const fp::Curve& E, long a_p, std::uint64_t seed);

// a_{p^e} from a_{p^e} = a_p a_{p^(e-1)} - 1_E(p) p a_{p^(e-2)}, a_1 = 1.
mpz_class prime_power_coefficient(long a_p, const mpz_class& p, unsigned long e, bool good);

struct TraceEntry {
  mpz_class p;
  unsigned long e = 0;
  long a_p = 0;
  mpz_class a_pe;
};

struct TraceTable {
  WeierstrassCurve curve;
  mpz_class N;
  std::vector<TraceEntry> entries;
  mpz_class a_N;

  const TraceEntry& at(const mpz_class& p) const;
};

TraceTable trace_table(const WeierstrassCurve& E, const Factorization& f,
                       const TraceOptions& opt = {});

mpz_class a_N(const WeierstrassCurve& E, const mpz_class& N, const Factorization& f);

bool is_anomalous(const WeierstrassCurve& E, std::uint64_t p);

// Anomalous primes in [p_min, p_max], skipping primes of bad reduction.
std::vector<std::uint64_t> find_anomalous(const WeierstrassCurve& E, std::uint64_t p_min,
                                          std::uint64_t p_max);

// Word-sized prime from an mpz; throws Unsupported beyond the counting range.
std::uint64_t word_prime(const mpz_class& p);

}  // namespace ellcarm
