#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "ellcarm/arith.hpp"
#include "ellcarm/curve.hpp"

namespace ellcarm {

struct AffinePoint {
  mpz_class x, y;
  bool operator==(const AffinePoint&) const = default;
};

// Parses "x,y" (optionally parenthesised).
AffinePoint parse_point(const std::string& text);

// [X:Y:Z] over Z/mZ. The identity is [0:1:0].
struct ProjectivePoint {
  mpz_class X, Y, Z;
  mpz_class modulus;

  static ProjectivePoint identity(const mpz_class& m);
  static ProjectivePoint affine(const mpz_class& x, const mpz_class& y, const mpz_class& m);

  // X = Z = 0 mod m, i.e. the identity in every component.
  bool is_identity() const;
  // Z is a unit mod m.
  bool is_affine() const;
  // Only valid when is_affine(); divides by Z.
  AffinePoint to_affine() const;

  std::string to_string() const;
  bool operator==(const ProjectivePoint&) const = default;
};

struct FactorFound {
  mpz_class divisor;  // 1 < divisor < m
};

// Memo of hat-psi values at a fixed point of the short model y^2 = x^3 + Ax + B mod m.
// Hat-psi is psi/(2y) at even indices and psi at odd ones, so nothing is ever inverted.
// The memo is kept across calls, so several multiples of the same point share work.
class DivisionPolynomialContext {
 public:
  DivisionPolynomialContext(const mpz_class& A, const mpz_class& B, const mpz_class& x,
                            const mpz_class& y, const mpz_class& m);

  mpz_class psi_hat(const mpz_class& n);
  // The genuine psi_n, i.e. 2y * psi_hat(n) at even n.
  mpz_class psi(const mpz_class& n);
  // n*(x, y) on the short model; n >= 0.
  ProjectivePoint multiple(const mpz_class& n);

  std::size_t memo_size() const { return memo_.size() + small_count_; }

 private:
  const mpz_class& lookup(const mpz_class& n);
  mpz_class compute(const mpz_class& n);

  mpz_class A_, B_, x_, y_, m_;
  mpz_class y4x16_;  // 16 y^4
  std::vector<std::optional<mpz_class>> small_;
  std::size_t small_count_ = 0;
  std::map<mpz_class, mpz_class> memo_;
};

// Hat-psi at (x, y) for the short model of E mod m (long-form input is transformed first).
mpz_class psi_hat(const mpz_class& n, const mpz_class& x, const mpz_class& y,
                  const WeierstrassCurve& E, const mpz_class& m);

// n*P mod m from division polynomials. No inversion is performed, so for composite m the
// result may be the identity in some components and affine in others.
ProjectivePoint scalar_mul(const mpz_class& n, const AffinePoint& P, const WeierstrassCurve& E,
                           const mpz_class& m);

// Several multiples of one point sharing a single memo.
std::vector<ProjectivePoint> scalar_mul_many(const std::vector<mpz_class>& ns, const AffinePoint& P,
                                             const WeierstrassCurve& E, const mpz_class& m);

// Chord-tangent addition on the long-form equation.
std::variant<ProjectivePoint, FactorFound> add_points(const ProjectivePoint& P,
                                                      const ProjectivePoint& Q,
                                                      const WeierstrassCurve& E);

// prime -> (X = Z = 0 mod p^e)
std::map<mpz_class, bool> is_identity_componentwise(const ProjectivePoint& P,
                                                    const Factorization& f);

// psi_n(P) = 0 mod N, equivalently nP = O mod N.
bool psi_vanishes(const mpz_class& n, const AffinePoint& P, const WeierstrassCurve& E,
                  const mpz_class& N);

// Divides by Z when Z is a unit, else by Y when Y is a unit, else returns the input reduced.
ProjectivePoint normalize(const ProjectivePoint& P);

// Per-component canonical form glued by CRT: affine components get Z = 1, components
// reducing to O get Y = 1, identity components become [0:1:0].
ProjectivePoint normalize(const ProjectivePoint& P, const Factorization& f);

// Reduction to a divisor q of the modulus.
ProjectivePoint reduce(const ProjectivePoint& P, const mpz_class& q);

// Affine point [x:y:1] with 2y + a1 x + a3 = 0 mod m.
bool is_affine_two_torsion(const ProjectivePoint& P, const WeierstrassCurve& E);

}  // namespace ellcarm
