#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ellcarm/arith.hpp"
#include "ellcarm/curve.hpp"
#include "ellcarm/ecpoint.hpp"
#include "ellcarm/groupstruct.hpp"
#include "ellcarm/lseries.hpp"

namespace ellcarm {

// (N, E) with the factorization and traces every predicate needs.
struct Instance {
  WeierstrassCurve curve;
  mpz_class N;
  Factorization factors;
  TraceTable traces;
  mpz_class group_multiplier;  // N + 1 - a_N

  const mpz_class& a_N() const { return traces.a_N; }
};

// Throws NotComposite (fewer than two distinct primes) or BadReduction.
Instance prepare(const mpz_class& N, const WeierstrassCurve& E);
Instance prepare(const mpz_class& N, const WeierstrassCurve& E, const Factorization& f);

// Throws InvalidInput when P is not on E mod N.
void require_on_curve(const Instance& inst, const AffinePoint& P);

// Exponents of E(Z/p^e Z) for every p^e || N.
std::vector<ExponentRecord> exponents(const Instance& inst);

struct EllipticWitness {
  bool holds = false;
  mpz_class multiplier;
  ProjectivePoint multiple;
  std::map<mpz_class, bool> identity_at;
};

struct GordonWitness {
  bool holds = false;
  long d = 0;
  int jacobi_symbol = 0;
  bool n_is_1_mod_4 = false;
  EllipticWitness multiple;  // (N+1) P, only computed when the symbol is -1
};

enum class EulerBranch { double_to_identity, identity, two_torsion, failed };

struct EulerWitness {
  bool holds = false;
  bool is_double = false;
  mpz_class multiplier;  // (N+1-a_N)/2
  ProjectivePoint multiple;
  EulerBranch branch = EulerBranch::failed;
};

struct StrongWitness {
  bool holds = false;
  unsigned long s = 0;
  mpz_class t;
  bool t_branch = false;                // tP = O
  std::optional<unsigned long> r;       // (2^r t) P is an affine 2-torsion point
  ProjectivePoint reached;              // tP, or (2^r t) P when r is set
};

struct PrimeCheck {
  mpz_class p;
  unsigned long e = 1;
  long a_p = 0;
  mpz_class value;  // p+1-a_p for Type I, the exponent otherwise
  bool holds = false;
  std::string note;
};

struct KorseltWitness {
  bool holds = false;
  mpz_class target;
  std::vector<PrimeCheck> per_prime;
  std::optional<mpz_class> failing_prime;
  std::string failing_condition;
};

struct BranchCheck {
  mpz_class p;
  bool branch_i = false;   // (p+1-a_p) | (N+1-a_N)/2
  bool branch_ii = false;  // p does not divide p+1-a_p and E(F_p) has three points of order 2
  bool holds = false;
};

struct BranchWitness {
  bool holds = false;
  std::vector<BranchCheck> per_prime;
};

EllipticWitness is_elliptic_pseudoprime(const Instance& inst, const AffinePoint& P);

// Requires gcd(N, 6 disc) = 1; d names the CM field Q(sqrt(-d)) and is supplied, not computed.
GordonWitness is_gordon_elliptic_pseudoprime(const Instance& inst, const AffinePoint& P, long d);

// Throws UndefinedPredicate when N+1-a_N is odd and Unsupported for non-squarefree N.
EulerWitness is_euler_elliptic_pseudoprime(const Instance& inst, const AffinePoint& P);

StrongWitness is_strong_elliptic_pseudoprime(const Instance& inst, const AffinePoint& P);

KorseltWitness is_korselt_type1(const Instance& inst);
// Same test from precomputed traces; N must be the product of the entries.
KorseltWitness is_korselt_type1(const mpz_class& N, const std::vector<TraceEntry>& entries,
                                const mpz_class& a_N);

KorseltWitness is_korselt_type2(const Instance& inst);
KorseltWitness is_korselt_type2(const Instance& inst, const std::vector<ExponentRecord>& eps);

// exponent | (N+1-a_N)/2 for every p; throws UndefinedPredicate when N+1-a_N is odd.
KorseltWitness is_euler_elliptic_carmichael(const Instance& inst);
KorseltWitness is_euler_elliptic_carmichael(const Instance& inst,
                                            const std::vector<ExponentRecord>& eps);

// exponent | t for every p; throws UndefinedPredicate for even N.
KorseltWitness is_strong_elliptic_carmichael(const Instance& inst);
KorseltWitness is_strong_elliptic_carmichael(const Instance& inst,
                                             const std::vector<ExponentRecord>& eps);

// Per-prime (i)/(ii) disjunction for Type I numbers with N+1-a_N even.
BranchWitness korselt1_euler_equivalence(const Instance& inst);

// All p+1-a_p odd, for Type I numbers.
BranchWitness korselt1_strong_equivalence(const Instance& inst);

struct Flag {
  std::optional<bool> value;
  std::string reason;  // why the flag is n/a
};

struct ClassificationReport {
  mpz_class N;
  WeierstrassCurve curve;
  Factorization factors;
  std::optional<AffinePoint> point;
  std::optional<long> d;
  mpz_class a_N;
  mpz_class group_multiplier;
  std::vector<TraceEntry> traces;
  std::vector<ExponentRecord> exponents;

  Flag elliptic_pp, gordon_pp, euler_pp, strong_pp;
  Flag elliptic_carmichael, euler_carmichael, strong_carmichael;
  Flag korselt_type1, korselt_type2;

  std::optional<EllipticWitness> elliptic;
  std::optional<GordonWitness> gordon;
  std::optional<EulerWitness> euler;
  std::optional<StrongWitness> strong;
  std::optional<KorseltWitness> type1, type2, euler_korselt, strong_korselt;
  std::vector<std::string> notes;
};

ClassificationReport classify_report(const mpz_class& N, const WeierstrassCurve& E,
                                     const std::optional<AffinePoint>& P = std::nullopt,
                                     const std::optional<long>& d = std::nullopt);

// One JSON object, no trailing newline; big integers as decimal strings.
std::string to_json_line(const ClassificationReport& report);

const char* to_string(EulerBranch b);

}  // namespace ellcarm
