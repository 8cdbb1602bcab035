#include "ellcarm/groupstruct.hpp"

#include <numeric>
#include <optional>

#include "ellcarm/errors.hpp"

namespace ellcarm {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t residue_of(const mpz_class& a, std::uint64_t p) {
  return mpz_fdiv_ui(a.get_mpz_t(), p);
}

// smallest k with l^k P = O; P must have l-power order
unsigned l_power_order(const fp::Curve& S, fp::Point P, std::uint64_t l) {
  unsigned k = 0;
  while (!P.infinity) {
    P = fp::mul(S, P, l);
    ++k;
  }
  return k;
}

// c with T = c Q in a cyclic group of order l^a generated by Q; nullopt if T is outside.
std::optional<std::uint64_t> discrete_log_l(const fp::Curve& S, const fp::Point& Q,
                                            const fp::Point& T, std::uint64_t l, unsigned a) {
  if (a == 0) return T.infinity ? std::optional<std::uint64_t>(0) : std::nullopt;
  const fp::Point base = fp::mul(S, Q, ipow(l, a - 1));  // order l
  std::vector<fp::Point> table(l);
  fp::Point acc;
  for (std::uint64_t d = 0; d < l; ++d) {
    table[d] = acc;
    acc = fp::add(S, acc, base);
  }
  std::uint64_t c = 0, lpow = 1;
  for (unsigned i = 0; i < a; ++i) {
    fp::Point rest = fp::add(S, T, fp::negate(S, fp::mul(S, Q, c)));
    fp::Point H = fp::mul(S, rest, ipow(l, a - 1 - i));
    std::optional<std::uint64_t> digit;
    for (std::uint64_t d = 0; d < l; ++d)
      if (table[d] == H) {
        digit = d;
        break;
      }
    if (!digit) return std::nullopt;
    c += *digit * lpow;
    lpow *= l;
  }
  if (!(fp::mul(S, Q, c) == T)) return std::nullopt;
  return c;
}

bool in_cyclic_of_order_l(const fp::Curve& S, const fp::Point& gen, const fp::Point& X,
                          std::uint64_t l) {
  fp::Point acc;
  for (std::uint64_t j = 0; j < l; ++j) {
    if (acc == X) return true;
    acc = fp::add(S, acc, gen);
  }
  return false;
}

// Exponent k of the l-part (order l^v) certified by an independent pair Q1, Q2 with
// ord Q1 = l^k, ord Q2 = l^(v-k), k >= v-k.
std::optional<unsigned> certify_l_part(const fp::Curve& S, std::uint64_t n, std::uint64_t l,
                                       unsigned v, std::uint64_t seed) {
  const std::uint64_t cof = n / ipow(l, v);
  std::uint64_t state = seed;
  fp::Point Q1;
  unsigned a = 0;
  for (int attempt = 0; attempt < 200; ++attempt) {
    fp::Point R = fp::mul(S, fp::random_point(S, state), cof);
    unsigned k = l_power_order(S, R, l);
    if (k > a) {
      a = k;
      Q1 = R;
    }
    if (a == v) return a;
    if (2 * a < v) continue;
    const unsigned b = v - a;
    fp::Point T = fp::mul(S, R, ipow(l, b));
    auto c = discrete_log_l(S, Q1, T, l, a);
    if (!c || *c % ipow(l, b) != 0) continue;
    fp::Point Q2 = fp::add(S, R, fp::negate(S, fp::mul(S, Q1, *c / ipow(l, b))));
    if (l_power_order(S, Q2, l) != b) continue;
    fp::Point socle1 = fp::mul(S, Q1, ipow(l, a - 1));
    fp::Point socle2 = fp::mul(S, Q2, ipow(l, b - 1));
    if (!in_cyclic_of_order_l(S, socle1, socle2, l)) return a;
  }
  return std::nullopt;
}

std::vector<fp::Point> all_points(const fp::Curve& S) {
  std::vector<fp::Point> pts{fp::Point{}};
  const auto chi = fp::quadratic_character_table(S.p);
  for (std::uint64_t x = 0; x < S.p; ++x) {
    std::uint64_t r = S.rhs(x);
    if (chi[r] < 0) continue;
    std::uint64_t y = *fp::sqrt(r, S.p);
    pts.push_back(fp::make_point(x, y));
    if (y != 0) pts.push_back(fp::make_point(x, S.p - y));
  }
  return pts;
}

}  // namespace

fp::Curve short_model_mod(const WeierstrassCurve& E, std::uint64_t p) {
  if (p == 2) throw Unsupported("no short model in characteristic 2");
  fp::Curve S;
  S.p = p;
  if (E.is_short()) {
    S.A = residue_of(E.a4(), p);
    S.B = residue_of(E.a6(), p);
  } else {
    if (p == 3) throw Unsupported("no short model of a long-form curve in characteristic 3");
    S.A = residue_of(-27 * E.c4(), p);
    S.B = residue_of(-54 * E.c6(), p);
  }
  return S;
}

std::uint64_t point_order(const fp::Point& P, const fp::Curve& S, std::uint64_t n,
                          const WordFactorization& n_factors) {
  std::uint64_t order = n;
  for (const auto& [l, e] : n_factors) {
    (void)e;
    while (order % l == 0 && fp::mul(S, P, order / l).infinity) order /= l;
  }
  return order;
}

GroupShape group_shape_exhaustive(const fp::Curve& S) {
  const auto pts = all_points(S);
  GroupShape g;
  g.p = S.p;
  g.order = pts.size();
  const auto fac = factor_word(g.order);
  std::uint64_t eps = 1;
  for (const auto& P : pts) eps = std::lcm(eps, point_order(P, S, g.order, fac));
  g.epsilon = eps;
  g.delta = g.order / eps;
  return g;
}

GroupShape group_shape(const fp::Curve& S, long a_p) {
  GroupShape g;
  g.p = S.p;
  g.order = S.p + 1 - a_p;
  const auto fac = factor_word(g.order);
  for (const auto& [l, v] : fac) {
    if (v == 1 || (S.p - 1) % l != 0) {
      g.epsilon *= ipow(l, v);
      continue;
    }
    std::uint64_t seed = S.p * 0x9e3779b97f4a7c15ULL ^ (S.A << 1) ^ (S.B << 17) ^ l;
    auto a = certify_l_part(S, g.order, l, v, seed);
    if (!a) {
      if (S.p <= 10000) return group_shape_exhaustive(S);
      throw Error("group_shape: could not certify the " + std::to_string(l) + "-part at p = " +
                  std::to_string(S.p));
    }
    g.epsilon *= ipow(l, *a);
    g.delta *= ipow(l, v - *a);
  }
  return g;
}

GroupShape group_shape(const WeierstrassCurve& E, std::uint64_t p) {
  long a_p = trace_of_frobenius(E, p);
  return group_shape(short_model_mod(E, p), a_p);
}

namespace {

// Lifts of the affine points of E(F_p) to Z/p^e Z on the short model y^2 = x^3 + Ax + B.
std::vector<AffinePoint> lifted_points(const fp::Curve& S, const mpz_class& A, const mpz_class& B,
                                       const mpz_class& p, unsigned long e) {
  mpz_class q;
  mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), e);
  mpz_class pe1 = q / p;
  std::vector<AffinePoint> out;
  auto f = [&](const mpz_class& x) { return mod(x * x * x + A * x + B, q); };
  for (const auto& P : all_points(S)) {
    if (P.infinity) continue;
    for (mpz_class j = 0; j < pe1; ++j) {
      if (P.y != 0) {
        mpz_class x = mod(mpz_class(static_cast<unsigned long>(P.x)) + p * j, q);
        mpz_class y = static_cast<unsigned long>(P.y);
        for (unsigned long it = 0; it < e + 1; ++it) {
          mpz_class inv;
          try_invert(inv, 2 * y, q);
          y = mod(y - (y * y - f(x)) * inv, q);
        }
        out.push_back({x, y});
      } else {
        mpz_class y = mod(p * j, q);
        mpz_class x = static_cast<unsigned long>(P.x);
        for (unsigned long it = 0; it < e + 1; ++it) {
          mpz_class inv;
          try_invert(inv, 3 * x * x + A, q);
          x = mod(x - (f(x) - y * y) * inv, q);
        }
        out.push_back({x, y});
      }
    }
  }
  return out;
}

}  // namespace

ExponentRecord exponent_mod_prime_power(const WeierstrassCurve& E, const mpz_class& p,
                                        unsigned long e) {
  if (e == 0) throw std::invalid_argument("exponent_mod_prime_power: e must be positive");
  const std::uint64_t pw = word_prime(p);
  const long a_p = trace_of_frobenius(E, pw);
  const GroupShape g = group_shape(short_model_mod(E, pw), a_p);
  ExponentRecord rec{p, e, static_cast<unsigned long>(g.epsilon)};
  if (e == 1) return rec;
  mpz_class pe1;
  mpz_pow_ui(pe1.get_mpz_t(), p.get_mpz_t(), e - 1);
  if (g.order % pw != 0) {
    rec.epsilon *= pe1;
    return rec;
  }
  if (pw > 100)
    throw Unsupported("exponent of E(Z/" + p.get_str() + "^" + std::to_string(e) +
                      ") with p dividing #E(F_p) is only enumerated for p <= 100; bounded by p^(e-1)(p+1-a_p)");
  const mpz_class q = pe1 * p;
  ShortModel model(E, q);
  const auto points = lifted_points(short_model_mod(E, pw), model.A(), model.B(), p, e);
  const mpz_class bound = pe1 * static_cast<unsigned long>(g.order);
  const auto fac = factorize(bound);
  mpz_class eps = pe1;  // kernel of reduction is cyclic of order p^(e-1) for p >= 3
  for (const auto& P : points) {
    DivisionPolynomialContext ctx(model.A(), model.B(), P.x, P.y, q);
    mpz_class order = bound;
    for (const auto& f : fac.factors)
      while (mpz_divisible_p(order.get_mpz_t(), f.prime.get_mpz_t()) && ctx.psi(order / f.prime) == 0)
        order /= f.prime;
    eps = lcm(eps, order);
  }
  rec.epsilon = eps;
  return rec;
}

bool is_double_mod_prime(const fp::Curve& S, const fp::Point& P) {
  if (P.infinity) return true;
  const std::uint64_t p = S.p;
  const std::uint64_t x0 = P.x, A = S.A, B = S.B;
  // x^4 - 4 x0 x^3 - 2A x^2 - (8B + 4A x0) x + (A^2 - 4B x0)
  fp::Poly quartic{
      fp::sub(fp::mul(A, A, p), fp::mul(4 % p, fp::mul(B, x0, p), p), p),
      fp::sub(0, fp::add(fp::mul(8 % p, B, p), fp::mul(4 % p, fp::mul(A, x0, p), p), p), p),
      fp::sub(0, fp::mul(2, A, p), p),
      fp::sub(0, fp::mul(4 % p, x0, p), p),
      1};
  for (std::uint64_t r : fp::roots(quartic, p)) {
    std::uint64_t v = S.rhs(r);
    if (v != 0 && fp::legendre(v, p) == 1) return true;
  }
  return false;
}

bool is_double(const ProjectivePoint& P, const WeierstrassCurve& E, const Factorization& f,
               const TraceTable* traces) {
  if (!f.squarefree()) throw Unsupported("is_double needs squarefree N");
  for (const auto& pe : f.factors) {
    const std::uint64_t p = word_prime(pe.prime);
    ProjectivePoint c = normalize(reduce(P, pe.prime));
    if (c.is_identity()) continue;
    if (!c.is_affine()) throw InvalidInput("point has no unit coordinate mod " + pe.prime.get_str());
    if (traces) {
      const long a_p = traces->at(pe.prime).a_p;
      if ((p + 1 - a_p) % 2 == 1) continue;
    }
    ShortModel model(E, pe.prime);
    mpz_class X = c.X, Y = c.Y, Z = c.Z;
    model.to_short(X, Y, Z);
    fp::Curve S = short_model_mod(E, p);
    if (!is_double_mod_prime(S, fp::make_point(X.get_ui(), Y.get_ui()))) return false;
  }
  return true;
}

int count_order_two(const WeierstrassCurve& E, std::uint64_t p) {
  if (p == 2) throw Unsupported("count_order_two needs odd p");
  if (!has_good_reduction(E, mpz_class(static_cast<unsigned long>(p))))
    throw BadReduction({mpz_class(static_cast<unsigned long>(p))}, "bad reduction at " + std::to_string(p));
  fp::Poly cubic;
  if (E.is_short()) {
    cubic = {residue_of(E.a6(), p), residue_of(E.a4(), p), 0, 1};
  } else {
    cubic = {residue_of(E.b6(), p), residue_of(2 * E.b4(), p), residue_of(E.b2(), p), 4 % p};
  }
  return static_cast<int>(fp::roots(cubic, p).size());
}

}  // namespace ellcarm
