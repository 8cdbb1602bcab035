#include "ellcarm/curve.hpp"

#include <sstream>

#include "ellcarm/errors.hpp"

namespace ellcarm {

WeierstrassCurve::WeierstrassCurve(mpz_class a1, mpz_class a2, mpz_class a3, mpz_class a4,
                                   mpz_class a6)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
  const mpz_class B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
  disc_ = -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
  if (disc_ == 0) throw InvalidInput("singular curve " + to_string() + ": discriminant is zero");
}

WeierstrassCurve WeierstrassCurve::short_form(mpz_class A, mpz_class B) {
  return WeierstrassCurve(0, 0, 0, std::move(A), std::move(B));
}

mpz_class WeierstrassCurve::b2() const { return a1() * a1() + 4 * a2(); }
mpz_class WeierstrassCurve::b4() const { return 2 * a4() + a1() * a3(); }
mpz_class WeierstrassCurve::b6() const { return a3() * a3() + 4 * a6(); }
mpz_class WeierstrassCurve::b8() const {
  return a1() * a1() * a6() + 4 * a2() * a6() - a1() * a3() * a4() + a2() * a3() * a3() -
         a4() * a4();
}
mpz_class WeierstrassCurve::c4() const {
  const mpz_class B2 = b2();
  return B2 * B2 - 24 * b4();
}
mpz_class WeierstrassCurve::c6() const {
  const mpz_class B2 = b2();
  return -B2 * B2 * B2 + 36 * B2 * b4() - 216 * b6();
}

mpz_class WeierstrassCurve::residual(const mpz_class& x, const mpz_class& y,
                                     const mpz_class& m) const {
  mpz_class lhs = y * y + a1() * x * y + a3() * y;
  mpz_class rhs = x * x * x + a2() * x * x + a4() * x + a6();
  return mod(lhs - rhs, m);
}

std::string WeierstrassCurve::to_string() const {
  std::ostringstream out;
  if (is_short()) {
    out << "[" << a4().get_str() << "," << a6().get_str() << "]";
  } else {
    out << "[";
    for (std::size_t i = 0; i < a_.size(); ++i) out << (i ? "," : "") << a_[i].get_str();
    out << "]";
  }
  return out.str();
}

mpz_class discriminant(const WeierstrassCurve& E) { return E.discriminant(); }

WeierstrassCurve parse_curve(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("curve must look like [A,B] or [a1,a2,a3,a4,a6], got '" + std::string(text) +
                     "'");
  std::vector<mpz_class> coeffs;
  std::string body = s.substr(1, s.size() - 2);
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    coeffs.push_back(parse_integer(body.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (coeffs.size() == 2) return WeierstrassCurve::short_form(coeffs[0], coeffs[1]);
  if (coeffs.size() == 5)
    return WeierstrassCurve(coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]);
  throw ParseError("curve needs 2 or 5 coefficients, got " + std::to_string(coeffs.size()));
}

bool has_good_reduction(const WeierstrassCurve& E, const mpz_class& p) {
  return !mpz_divisible_p(E.discriminant().get_mpz_t(), p.get_mpz_t());
}

std::vector<mpz_class> bad_primes_dividing(const WeierstrassCurve& E, const mpz_class& m) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), E.discriminant().get_mpz_t());
  std::vector<mpz_class> out;
  if (g == 1) return out;
  for (const auto& f : factorize(g).factors) out.push_back(f.prime);
  return out;
}

ReducedCurve reduce_mod(const WeierstrassCurve& E, const mpz_class& m) {
  if (m < 2) throw InvalidInput("reduce_mod: modulus must be at least 2");
  auto bad = bad_primes_dividing(E, m);
  if (!bad.empty()) {
    std::string msg = "bad reduction of " + E.to_string() + " at";
    for (const auto& p : bad) msg += " " + p.get_str();
    throw BadReduction(std::move(bad), msg);
  }
  ReducedCurve out{E, m, {}};
  const mpz_class* src[] = {&E.a1(), &E.a2(), &E.a3(), &E.a4(), &E.a6()};
  for (std::size_t i = 0; i < 5; ++i) out.coefficients[i] = mod(*src[i], m);
  return out;
}

bool is_two_torsion_form(const WeierstrassCurve& E, const mpz_class& x, const mpz_class& y,
                         const mpz_class& m) {
  return mod(2 * y + E.a1() * x + E.a3(), m) == 0;
}

ShortModel::ShortModel(const WeierstrassCurve& E, const mpz_class& m) : m_(m) {
  if (E.is_short()) {
    A_ = mod(E.a4(), m);
    B_ = mod(E.a6(), m);
    return;
  }
  mpz_class g;
  mpz_gcd_ui(g.get_mpz_t(), m.get_mpz_t(), 6);
  if (g != 1)
    throw Unsupported("long-form curve needs gcd(m, 6) = 1 for the short-model transform");
  identity_ = false;
  A_ = mod(-27 * E.c4(), m);
  B_ = mod(-54 * E.c6(), m);
  a1_ = E.a1();
  a3_ = E.a3();
  b2_ = E.b2();
  try_invert(inv36_, mpz_class(36), m);
  try_invert(inv108_, mpz_class(108), m);
  try_invert(inv2_, mpz_class(2), m);
}

void ShortModel::to_short(mpz_class& X, mpz_class& Y, mpz_class& Z) const {
  if (identity_) {
    X = mod(X, m_);
    Y = mod(Y, m_);
    Z = mod(Z, m_);
    return;
  }
  mpz_class nx = mod(36 * X + 3 * b2_ * Z, m_);
  mpz_class ny = mod(108 * (2 * Y + a1_ * X + a3_ * Z), m_);
  X = nx;
  Y = ny;
  Z = mod(Z, m_);
}

void ShortModel::from_short(mpz_class& X, mpz_class& Y, mpz_class& Z) const {
  if (identity_) {
    X = mod(X, m_);
    Y = mod(Y, m_);
    Z = mod(Z, m_);
    return;
  }
  mpz_class x = mod((X - 3 * b2_ * Z) * inv36_, m_);
  mpz_class y = mod((Y * inv108_ - a1_ * x - a3_ * Z) * inv2_, m_);
  X = x;
  Y = y;
  Z = mod(Z, m_);
}

}  // namespace ellcarm
