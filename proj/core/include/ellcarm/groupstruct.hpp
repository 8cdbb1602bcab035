#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "ellcarm/arith.hpp"
#include "ellcarm/curve.hpp"
#include "ellcarm/ecpoint.hpp"
#include "ellcarm/fp.hpp"
#include "ellcarm/lseries.hpp"

namespace ellcarm {

// E(F_p) = Z/delta + Z/epsilon with delta | epsilon and delta | p-1.
struct GroupShape {
  std::uint64_t p = 0;
  std::uint64_t order = 0;
  std::uint64_t delta = 1;
  std::uint64_t epsilon = 1;
};

// Exponent of E(Z/p^e Z).
struct ExponentRecord {
  mpz_class p;
  unsigned long e = 1;
  mpz_class epsilon;
};

// Short model of E over F_p (p odd; long-form curves need p > 3).
fp::Curve short_model_mod(const WeierstrassCurve& E, std::uint64_t p);

// Invariant factors from the point count and certified generators of each l-part.
GroupShape group_shape(const WeierstrassCurve& E, std::uint64_t p);
GroupShape group_shape(const fp::Curve& S, long a_p);

// Enumerates every point; used as fallback and as a test oracle.
GroupShape group_shape_exhaustive(const fp::Curve& S);

std::uint64_t point_order(const fp::Point& P, const fp::Curve& S, std::uint64_t n,
                          const WordFactorization& n_factors);

ExponentRecord exponent_mod_prime_power(const WeierstrassCurve& E, const mpz_class& p,
                                        unsigned long e);

// Whether P = 2Q for some Q over F_p, from the roots of the duplication quartic.
bool is_double_mod_prime(const fp::Curve& S, const fp::Point& P);

// Whether P = 2Q in E(Z/NZ), N squarefree. With traces supplied, components of odd
// group order are accepted without root finding.
bool is_double(const ProjectivePoint& P, const WeierstrassCurve& E, const Factorization& f,
               const TraceTable* traces = nullptr);

// Number of points of order 2 in E(F_p), p odd.
int count_order_two(const WeierstrassCurve& E, std::uint64_t p);

}  // namespace ellcarm
