#include "ellcarm/fp.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellcarm::fp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("fp::inv: zero has no inverse");
  return pow(a, p - 2, p);
}

int legendre(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  return pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<std::uint64_t> sqrt(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (legendre(a, p) != 1) return std::nullopt;
  if (p % 4 == 3) return pow(a, (p + 1) / 4, p);
  // Tonelli-Shanks
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (legendre(z, p) != -1) ++z;
  std::uint64_t m = s, c = pow(z, q, p), t = pow(a, q, p), r = pow(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mul(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mul(b, b, p);
    m = i;
    c = mul(b, b, p);
    t = mul(t, c, p);
    r = mul(r, b, p);
  }
  return r;
}

std::vector<std::int8_t> quadratic_character_table(std::uint64_t p) {
  std::vector<std::int8_t> chi(p, -1);
  chi[0] = 0;
  std::uint64_t sq = 0;
  for (std::uint64_t y = 1; y <= p / 2; ++y) {
    // (y)^2 = (y-1)^2 + 2y - 1
    sq += 2 * y - 1;
    if (sq >= p) sq %= p;
    chi[sq] = 1;
  }
  if (p == 2) chi[1] = 1;
  return chi;
}

Point negate(const Curve& E, const Point& P) {
  if (P.infinity) return P;
  return make_point(P.x, P.y == 0 ? 0 : E.p - P.y);
}

Point dbl(const Curve& E, const Point& P) {
  const std::uint64_t p = E.p;
  if (P.infinity || P.y == 0) return {};
  std::uint64_t num = add(mul(3, mul(P.x, P.x, p), p), E.A, p);
  std::uint64_t lam = mul(num, inv(add(P.y, P.y, p), p), p);
  std::uint64_t x3 = sub(mul(lam, lam, p), add(P.x, P.x, p), p);
  std::uint64_t y3 = sub(mul(lam, sub(P.x, x3, p), p), P.y, p);
  return make_point(x3, y3);
}

Point add(const Curve& E, const Point& P, const Point& Q) {
  const std::uint64_t p = E.p;
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  if (P.x == Q.x) {
    if (add(P.y, Q.y, p) == 0) return {};
    return dbl(E, P);
  }
  std::uint64_t lam = mul(sub(Q.y, P.y, p), inv(sub(Q.x, P.x, p), p), p);
  std::uint64_t x3 = sub(sub(mul(lam, lam, p), P.x, p), Q.x, p);
  std::uint64_t y3 = sub(mul(lam, sub(P.x, x3, p), p), P.y, p);
  return make_point(x3, y3);
}

Point mul(const Curve& E, const Point& P, std::uint64_t k) {
  Point r, b = P;
  while (k) {
    if (k & 1) r = add(E, r, b);
    b = dbl(E, b);
    k >>= 1;
  }
  return r;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Point random_point(const Curve& E, std::uint64_t& state) {
  for (;;) {
    std::uint64_t x = splitmix64(state) % E.p;
    auto y = sqrt(E.rhs(x), E.p);
    if (!y) continue;
    std::uint64_t yy = *y;
    if (splitmix64(state) & 1) yy = yy == 0 ? 0 : E.p - yy;
    return make_point(x, yy);
  }
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

namespace {

void make_monic(Poly& f, std::uint64_t p) {
  trim(f);
  if (f.empty() || f.back() == 1) return;
  std::uint64_t c = inv(f.back(), p);
  for (auto& v : f) v = mul(v, c, p);
}

// quotient and remainder of f by g
std::pair<Poly, Poly> divmod(const Poly& f_in, const Poly& g, std::uint64_t p) {
  Poly r = f_in;
  trim(r);
  if (g.empty()) throw std::domain_error("poly division by zero");
  if (r.size() < g.size()) return {{}, r};
  Poly q(r.size() - g.size() + 1, 0);
  const std::uint64_t lead_inv = inv(g.back(), p);
  for (std::size_t i = r.size(); i-- >= g.size();) {
    std::uint64_t c = mul(r[i], lead_inv, p);
    if (c == 0) continue;
    std::size_t shift = i - (g.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < g.size(); ++j) r[shift + j] = sub(r[shift + j], mul(c, g[j], p), p);
  }
  trim(r);
  trim(q);
  return {q, r};
}

Poly poly_pow(Poly base, std::uint64_t e, const Poly& g, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(base, g, p);
  while (e) {
    if (e & 1) r = poly_mul_mod(r, base, g, p);
    base = poly_mul_mod(base, base, g, p);
    e >>= 1;
  }
  return r;
}

void split(const Poly& h, std::uint64_t p, std::uint64_t& state, std::vector<std::uint64_t>& out) {
  if (h.size() <= 1) return;
  if (h.size() == 2) {
    // x + c
    out.push_back(sub(0, mul(h[0], inv(h[1], p), p), p));
    return;
  }
  for (;;) {
    std::uint64_t delta = splitmix64(state) % p;
    Poly t = poly_pow(Poly{delta, 1}, (p - 1) / 2, h, p);
    t = poly_sub(t, Poly{1}, p);
    Poly g = poly_gcd(h, t, p);
    if (g.size() > 1 && g.size() < h.size()) {
      split(g, p, state, out);
      auto [q, r] = divmod(h, g, p);
      make_monic(q, p);
      split(q, p, state, out);
      return;
    }
  }
}

}  // namespace

Poly poly_mod(const Poly& f, const Poly& g, std::uint64_t p) { return divmod(f, g, p).second; }

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& g, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = fp::add(r[i + j], mul(a[i], b[j], p), p);
  return poly_mod(r, g, p);
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  trim(r);
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a, p);
  return a;
}

Poly poly_pow_x(std::uint64_t e, const Poly& g, std::uint64_t p) { return poly_pow(Poly{0, 1}, e, g, p); }

std::uint64_t poly_eval(const Poly& f, std::uint64_t x, std::uint64_t p) {
  std::uint64_t r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = fp::add(mul(r, x, p), f[i], p);
  return r;
}

std::vector<std::uint64_t> roots(const Poly& f_in, std::uint64_t p) {
  Poly f = f_in;
  for (auto& c : f) c %= p;
  make_monic(f, p);
  std::vector<std::uint64_t> out;
  if (f.size() <= 1) return out;
  if (p < 64) {
    for (std::uint64_t x = 0; x < p; ++x)
      if (poly_eval(f, x, p) == 0) out.push_back(x);
    return out;
  }
  Poly xp = poly_pow_x(p, f, p);
  Poly h = poly_gcd(f, poly_sub(xp, Poly{0, 1}, p), p);
  std::uint64_t state = p * 0x2545f4914f6cdd1dULL + f.size();
  split(h, p, state, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ellcarm::fp
