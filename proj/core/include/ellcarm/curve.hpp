#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ellcarm/arith.hpp"

namespace ellcarm {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over the integers.
class WeierstrassCurve {
 public:
  // Throws InvalidInput when the discriminant vanishes.
  WeierstrassCurve(mpz_class a1, mpz_class a2, mpz_class a3, mpz_class a4, mpz_class a6);

  static WeierstrassCurve short_form(mpz_class A, mpz_class B);

  const mpz_class& a1() const { return a_[0]; }
  const mpz_class& a2() const { return a_[1]; }
  const mpz_class& a3() const { return a_[2]; }
  const mpz_class& a4() const { return a_[3]; }
  const mpz_class& a6() const { return a_[4]; }

  bool is_short() const { return a_[0] == 0 && a_[1] == 0 && a_[2] == 0; }

  mpz_class b2() const;
  mpz_class b4() const;
  mpz_class b6() const;
  mpz_class b8() const;
  mpz_class c4() const;
  mpz_class c6() const;
  const mpz_class& discriminant() const { return disc_; }

  // Residue of the defining equation at (x, y) modulo m; zero iff the point is on the curve.
  mpz_class residual(const mpz_class& x, const mpz_class& y, const mpz_class& m) const;
  bool contains(const mpz_class& x, const mpz_class& y, const mpz_class& m) const {
    return residual(x, y, m) == 0;
  }

  // "[A,B]" for short form, "[a1,a2,a3,a4,a6]" otherwise.
  std::string to_string() const;

  bool operator==(const WeierstrassCurve& o) const { return a_ == o.a_; }

 private:
  std::array<mpz_class, 5> a_;
  mpz_class disc_;
};

mpz_class discriminant(const WeierstrassCurve& E);

// Parses "[a1,a2,a3,a4,a6]" or "[A,B]"; throws ParseError.
WeierstrassCurve parse_curve(std::string_view text);

bool has_good_reduction(const WeierstrassCurve& E, const mpz_class& p);

// Prime divisors of m at which E has bad reduction.
std::vector<mpz_class> bad_primes_dividing(const WeierstrassCurve& E, const mpz_class& m);

struct ReducedCurve {
  WeierstrassCurve source;
  mpz_class modulus;
  std::array<mpz_class, 5> coefficients;  // a1..a6 reduced into [0, m)
};

// Throws BadReduction naming every prime of gcd(m, disc).
ReducedCurve reduce_mod(const WeierstrassCurve& E, const mpz_class& m);

// 2y + a1 x + a3 == 0 (mod m).
bool is_two_torsion_form(const WeierstrassCurve& E, const mpz_class& x, const mpz_class& y,
                         const mpz_class& m);

// Short model y^2 = x^3 + A x + B used for division-polynomial arithmetic. For long-form
// input, A = -27 c4 and B = -54 c6 with the change of variables
//   X = 36 x + 3 b2 z,  Y = 108 (2 y + a1 x + a3 z),  Z = z.
// Needs gcd(m, 6) = 1 for long-form curves.
class ShortModel {
 public:
  ShortModel(const WeierstrassCurve& E, const mpz_class& m);

  const mpz_class& A() const { return A_; }
  const mpz_class& B() const { return B_; }
  const mpz_class& modulus() const { return m_; }
  bool identity_map() const { return identity_; }

  // projective coordinates in place
  void to_short(mpz_class& X, mpz_class& Y, mpz_class& Z) const;
  void from_short(mpz_class& X, mpz_class& Y, mpz_class& Z) const;

 private:
  mpz_class m_, A_, B_;
  mpz_class a1_, a3_, b2_;
  mpz_class inv36_, inv108_, inv2_;
  bool identity_ = true;
};

}  // namespace ellcarm
