#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ellcarm::fp {

// Arithmetic modulo a word-sized odd prime p < 2^63.

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
inline std::uint64_t reduce_signed(std::int64_t a, std::uint64_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
// Legendre symbol by Euler's criterion
int legendre(std::uint64_t a, std::uint64_t p);
std::optional<std::uint64_t> sqrt(std::uint64_t a, std::uint64_t p);

// chi[v] = Legendre symbol of v mod p, built by marking squares.
std::vector<std::int8_t> quadratic_character_table(std::uint64_t p);

struct Point {
  std::uint64_t x = 0, y = 0;
  bool infinity = true;
  bool operator==(const Point&) const = default;
};

inline Point make_point(std::uint64_t x, std::uint64_t y) { return {x, y, false}; }

// y^2 = x^3 + A x + B over F_p
struct Curve {
  std::uint64_t A = 0, B = 0, p = 0;

  std::uint64_t rhs(std::uint64_t x) const { return add(mul(add(mul(x, x, p), A, p), x, p), B, p); }
  bool contains(const Point& P) const { return P.infinity || mul(P.y, P.y, p) == rhs(P.x); }
};

Point negate(const Curve& E, const Point& P);
Point add(const Curve& E, const Point& P, const Point& Q);
Point dbl(const Curve& E, const Point& P);
Point mul(const Curve& E, const Point& P, std::uint64_t k);

// Deterministic random point from a 64-bit generator state.
Point random_point(const Curve& E, std::uint64_t& state);

// Polynomials over F_p, coefficients lowest degree first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& f);
Poly poly_mod(const Poly& f, const Poly& g, std::uint64_t p);
Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& g, std::uint64_t p);
Poly poly_gcd(Poly a, Poly b, std::uint64_t p);
Poly poly_sub(const Poly& a, const Poly& b, std::uint64_t p);
// x^e mod g
Poly poly_pow_x(std::uint64_t e, const Poly& g, std::uint64_t p);
std::uint64_t poly_eval(const Poly& f, std::uint64_t x, std::uint64_t p);

// Distinct roots in F_p (sorted), via gcd with x^p - x and equal-degree splitting.
std::vector<std::uint64_t> roots(const Poly& f, std::uint64_t p);

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace ellcarm::fp
