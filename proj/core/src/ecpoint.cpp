#include "ellcarm/ecpoint.hpp"

#include <sstream>

#include "ellcarm/errors.hpp"

namespace ellcarm {

namespace {

constexpr unsigned long kSmallMemo = 256;

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool is_unit(const mpz_class& a, const mpz_class& m) { return gcd(a, m) == 1; }

}  // namespace

AffinePoint parse_point(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '(' && c != ')') s.push_back(c);
  auto comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
    throw ParseError("point must look like x,y, got '" + text + "'");
  return {parse_integer(s.substr(0, comma)), parse_integer(s.substr(comma + 1))};
}

ProjectivePoint ProjectivePoint::identity(const mpz_class& m) { return {0, 1, 0, m}; }

ProjectivePoint ProjectivePoint::affine(const mpz_class& x, const mpz_class& y,
                                        const mpz_class& m) {
  return {mod(x, m), mod(y, m), mod(mpz_class(1), m), m};
}

bool ProjectivePoint::is_identity() const {
  return mod(X, modulus) == 0 && mod(Z, modulus) == 0;
}

bool ProjectivePoint::is_affine() const { return is_unit(Z, modulus); }

AffinePoint ProjectivePoint::to_affine() const {
  mpz_class inv;
  if (!try_invert(inv, Z, modulus)) throw InvalidInput("point is not affine mod " + modulus.get_str());
  return {mod(X * inv, modulus), mod(Y * inv, modulus)};
}

std::string ProjectivePoint::to_string() const {
  std::ostringstream out;
  out << "[" << X.get_str() << ":" << Y.get_str() << ":" << Z.get_str() << "]";
  return out.str();
}

DivisionPolynomialContext::DivisionPolynomialContext(const mpz_class& A, const mpz_class& B,
                                                     const mpz_class& x, const mpz_class& y,
                                                     const mpz_class& m)
    : A_(mod(A, m)), B_(mod(B, m)), x_(mod(x, m)), y_(mod(y, m)), m_(m), small_(kSmallMemo) {
  mpz_class y2 = y_ * y_ % m_;
  y4x16_ = 16 * y2 * y2 % m_;
}

const mpz_class& DivisionPolynomialContext::lookup(const mpz_class& n) {
  if (n < kSmallMemo) {
    auto& slot = small_[n.get_ui()];
    if (!slot) {
      slot = compute(n);
      ++small_count_;
    }
    return *slot;
  }
  auto it = memo_.find(n);
  if (it != memo_.end()) return it->second;
  mpz_class v = compute(n);
  return memo_.emplace(n, std::move(v)).first->second;
}

mpz_class DivisionPolynomialContext::compute(const mpz_class& n) {
  const mpz_class& x = x_;
  const mpz_class& A = A_;
  const mpz_class& B = B_;
  if (n <= 4) {
    switch (n.get_ui()) {
      case 0:
        return 0;
      case 1:
      case 2:
        return mod(mpz_class(1), m_);
      case 3: {
        mpz_class x2 = x * x;
        return mod(3 * x2 * x2 + 6 * A * x2 + 12 * B * x - A * A, m_);
      }
      default: {
        mpz_class x2 = x * x % m_;
        mpz_class x3 = x2 * x % m_;
        mpz_class v = x3 * x3 + 5 * A * x2 * x2 + 20 * B * x3 - 5 * A * A * x2 - 4 * A * B * x -
                      8 * B * B - A * A * A;
        return mod(2 * v, m_);
      }
    }
  }
  mpz_class k = n >> 1;
  if (mpz_odd_p(n.get_mpz_t())) {
    // n = 2k + 1
    mpz_class pk = lookup(k);
    mpz_class pk1 = lookup(k + 1);
    mpz_class pk2 = lookup(k + 2);
    mpz_class pkm1 = lookup(k - 1);
    mpz_class left = pk * pk % m_ * pk % m_ * pk2 % m_;
    mpz_class right = pk1 * pk1 % m_ * pk1 % m_ * pkm1 % m_;
    if (mpz_even_p(k.get_mpz_t()))
      left = left * y4x16_;
    else
      right = right * y4x16_;
    return mod(left - right, m_);
  }
  // n = 2k, k >= 3
  mpz_class pk = lookup(k);
  mpz_class pk1 = lookup(k + 1);
  mpz_class pk2 = lookup(k + 2);
  mpz_class pkm1 = lookup(k - 1);
  mpz_class pkm2 = lookup(k - 2);
  mpz_class bracket = pk2 * pkm1 % m_ * pkm1 - pkm2 * pk1 % m_ * pk1;
  return mod(pk * mod(bracket, m_), m_);
}

mpz_class DivisionPolynomialContext::psi_hat(const mpz_class& n) {
  if (n < 0) return mod(-lookup(-n), m_);
  return lookup(n);
}

mpz_class DivisionPolynomialContext::psi(const mpz_class& n) {
  mpz_class v = psi_hat(n);
  if (mpz_even_p(n.get_mpz_t())) v = mod(2 * y_ * v, m_);
  return v;
}

ProjectivePoint DivisionPolynomialContext::multiple(const mpz_class& n) {
  if (n < 0) throw std::invalid_argument("multiple: n must be nonnegative");
  if (n == 0) return ProjectivePoint::identity(m_);
  const mpz_class h = psi_hat(n);
  const mpz_class hp1 = psi_hat(n + 1);
  const mpz_class hm1 = psi_hat(n - 1);
  const mpz_class hp2 = psi_hat(n + 2);
  const mpz_class hm2 = psi_hat(n - 2);
  const mpz_class y2 = y_ * y_ % m_;
  const mpz_class bracket = mod(hp2 * hm1 % m_ * hm1 - hm2 * hp1 % m_ * hp1, m_);
  ProjectivePoint out;
  out.modulus = m_;
  if (mpz_even_p(n.get_mpz_t())) {
    // scaled by 2 so omega needs no halving
    mpz_class phi = mod(4 * x_ * y2 % m_ * h % m_ * h - hp1 * hm1, m_);
    out.X = mod(4 * y_ * phi % m_ * h, m_);
    out.Y = bracket;
    mpz_class psi = 2 * y_ * h % m_;
    out.Z = mod(2 * psi * psi % m_ * psi, m_);
  } else {
    mpz_class phi = mod(x_ * h % m_ * h - 4 * y2 * hp1 % m_ * hm1, m_);
    out.X = phi * h % m_;
    out.Y = y_ * bracket % m_;
    out.Z = h * h % m_ * h % m_;
  }
  return out;
}

mpz_class psi_hat(const mpz_class& n, const mpz_class& x, const mpz_class& y,
                  const WeierstrassCurve& E, const mpz_class& m) {
  ShortModel model(E, m);
  mpz_class X = x, Y = y, Z = 1;
  model.to_short(X, Y, Z);
  DivisionPolynomialContext ctx(model.A(), model.B(), X, Y, m);
  return ctx.psi_hat(n);
}

std::vector<ProjectivePoint> scalar_mul_many(const std::vector<mpz_class>& ns, const AffinePoint& P,
                                             const WeierstrassCurve& E, const mpz_class& m) {
  ShortModel model(E, m);
  mpz_class X = P.x, Y = P.y, Z = 1;
  model.to_short(X, Y, Z);
  DivisionPolynomialContext ctx(model.A(), model.B(), X, Y, m);
  std::vector<ProjectivePoint> out;
  out.reserve(ns.size());
  for (const auto& n : ns) {
    ProjectivePoint R = ctx.multiple(n);
    model.from_short(R.X, R.Y, R.Z);
    out.push_back(normalize(R));
  }
  return out;
}

ProjectivePoint scalar_mul(const mpz_class& n, const AffinePoint& P, const WeierstrassCurve& E,
                           const mpz_class& m) {
  return scalar_mul_many({n}, P, E, m).front();
}

std::variant<ProjectivePoint, FactorFound> add_points(const ProjectivePoint& P_in,
                                                      const ProjectivePoint& Q_in,
                                                      const WeierstrassCurve& E) {
  const mpz_class& m = P_in.modulus;
  if (Q_in.modulus != m) throw std::invalid_argument("add_points: moduli differ");
  if (P_in.is_identity()) return normalize(Q_in);
  if (Q_in.is_identity()) return normalize(P_in);
  for (const auto* pt : {&P_in, &Q_in}) {
    mpz_class g = gcd(pt->Z, m);
    if (g != 1) {
      if (g != m) return FactorFound{g};
      throw Unsupported("add_points: non-identity point at infinity mod " + m.get_str());
    }
  }
  const AffinePoint P = P_in.to_affine();
  const AffinePoint Q = Q_in.to_affine();
  const mpz_class &a1 = E.a1(), &a2 = E.a2(), &a3 = E.a3(), &a4 = E.a4(), &a6 = E.a6();

  mpz_class num, den, nu_num;
  if (mod(P.x - Q.x, m) == 0) {
    mpz_class s = mod(P.y + Q.y + a1 * Q.x + a3, m);
    if (s == 0) return ProjectivePoint::identity(m);
    mpz_class g = gcd(s, m);
    if (g != 1) return FactorFound{g};
    if (mod(P.y - Q.y, m) != 0) throw InvalidInput("add_points: inputs are not on the curve");
    num = 3 * P.x * P.x + 2 * a2 * P.x + a4 - a1 * P.y;
    den = 2 * P.y + a1 * P.x + a3;
    nu_num = -P.x * P.x * P.x + a4 * P.x + 2 * a6 - a3 * P.y;
  } else {
    mpz_class d = mod(Q.x - P.x, m);
    mpz_class g = gcd(d, m);
    if (g != 1) return FactorFound{g};
    num = Q.y - P.y;
    den = d;
    nu_num = P.y * Q.x - Q.y * P.x;
  }
  mpz_class inv;
  if (!try_invert(inv, mod(den, m), m)) return FactorFound{gcd(mod(den, m), m)};
  mpz_class lambda = mod(num * inv, m);
  mpz_class nu = mod(nu_num * inv, m);
  mpz_class x3 = mod(lambda * lambda + a1 * lambda - a2 - P.x - Q.x, m);
  mpz_class y3 = mod(-(lambda + a1) * x3 - nu - a3, m);
  return ProjectivePoint::affine(x3, y3, m);
}

std::map<mpz_class, bool> is_identity_componentwise(const ProjectivePoint& P,
                                                    const Factorization& f) {
  std::map<mpz_class, bool> out;
  for (const auto& pe : f.factors) {
    mpz_class q = pe.value();
    out[pe.prime] = mod(P.X, q) == 0 && mod(P.Z, q) == 0;
  }
  return out;
}

bool psi_vanishes(const mpz_class& n, const AffinePoint& P, const WeierstrassCurve& E,
                  const mpz_class& N) {
  ShortModel model(E, N);
  mpz_class X = P.x, Y = P.y, Z = 1;
  model.to_short(X, Y, Z);
  DivisionPolynomialContext ctx(model.A(), model.B(), X, Y, N);
  return ctx.psi(n) == 0;
}

ProjectivePoint normalize(const ProjectivePoint& P) {
  const mpz_class& m = P.modulus;
  mpz_class inv;
  if (try_invert(inv, mod(P.Z, m), m))
    return {mod(P.X * inv, m), mod(P.Y * inv, m), mod(mpz_class(1), m), m};
  if (try_invert(inv, mod(P.Y, m), m))
    return {mod(P.X * inv, m), mod(mpz_class(1), m), mod(P.Z * inv, m), m};
  return {mod(P.X, m), mod(P.Y, m), mod(P.Z, m), m};
}

ProjectivePoint normalize(const ProjectivePoint& P, const Factorization& f) {
  std::vector<Residue> xs, ys, zs;
  for (const auto& pe : f.factors) {
    mpz_class q = pe.value();
    ProjectivePoint c = reduce(P, q);
    mpz_class inv;
    if (mpz_divisible_p(c.Z.get_mpz_t(), pe.prime.get_mpz_t())) {
      if (!try_invert(inv, c.Y, q))
        throw InvalidInput("normalize: no unit coordinate mod " + pe.prime.get_str());
      c = {mod(c.X * inv, q), 1, mod(c.Z * inv, q), q};
    } else {
      try_invert(inv, c.Z, q);
      c = {mod(c.X * inv, q), mod(c.Y * inv, q), 1, q};
    }
    xs.push_back({c.X, q});
    ys.push_back({c.Y, q});
    zs.push_back({c.Z, q});
  }
  return {crt_combine(xs).value, crt_combine(ys).value, crt_combine(zs).value, P.modulus};
}

ProjectivePoint reduce(const ProjectivePoint& P, const mpz_class& q) {
  return {mod(P.X, q), mod(P.Y, q), mod(P.Z, q), q};
}

bool is_affine_two_torsion(const ProjectivePoint& P, const WeierstrassCurve& E) {
  if (!P.is_affine()) return false;
  AffinePoint a = P.to_affine();
  return is_two_torsion_form(E, a.x, a.y, P.modulus);
}

}  // namespace ellcarm
