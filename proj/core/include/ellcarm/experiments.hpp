#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ellcarm/curve.hpp"

namespace ellcarm {

struct TraceCensusRow {
  long t = 0;
  unsigned long classes = 0;  // isomorphism classes over F_p
  unsigned long curves = 0;   // pairs (A, B)
  mpq_class weighted;         // sum over classes of 2/#Aut
};

struct TraceCensus {
  std::uint64_t p = 0;
  std::map<long, TraceCensusRow> counts;  // every |t| <= 2 sqrt p, zero rows included

  unsigned long total_curves() const;
  mpq_class total_weighted() const;
};

// Exhaustive over y^2 = x^3 + Ax + B, 3 < p <= 200.
TraceCensus trace_census(std::uint64_t p);

// Weighted count of reduced forms of discriminant D, non-primitive ones included.
mpq_class hurwitz_class_number(long D);

struct DensityEstimate {
  std::uint64_t M = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t accepted = 0;
  std::uint64_t anomalous = 0;        // accepted with a_p = a_q = 1
  std::uint64_t order_checks = 0;     // anomalous samples with #E(Z/NZ) recounted
  std::uint64_t order_mismatches = 0;
  double anomalous_fraction = 0.0;    // anomalous / accepted, 0 when nothing accepted
};

// trials counts drawn (p, q, E) triples; accepted ones meet both divisibility conditions.
DensityEstimate sample_density(std::uint64_t M, std::uint64_t trials, std::uint64_t seed,
                               unsigned workers = 0);

struct LemmaScanReport {
  std::uint64_t q_max = 0;
  std::uint64_t tuples = 0;
  std::uint64_t hypothesis_hits = 0;  // (q+1-a_q) | (pq+1-a_p a_q)
  std::uint64_t both_divisible = 0;
  std::uint64_t parametrized_pairs = 0;
  std::vector<std::string> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

LemmaScanReport verify_divisibility_lemmas(std::uint64_t q_max);

struct TrichotomyCase {
  std::uint64_t p = 0, q = 0;
  long a_p = 0, a_q = 0;
  bool small_p = false;   // p <= 13
  bool anomalous = false; // a_p = a_q = 1
  bool large_p = false;   // 256 p^2 >= q
};

struct TrichotomyReport {
  std::uint64_t M = 0;
  std::uint64_t pairs = 0;
  std::vector<TrichotomyCase> products;  // every Type I N = pq found
  std::vector<std::string> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

TrichotomyReport verify_anomalous_trichotomy(const WeierstrassCurve& E, std::uint64_t M);

}  // namespace ellcarm
