#include "ellcarm/arith.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ellcarm/errors.hpp"

namespace ellcarm {

mpz_class PrimePower::value() const {
  mpz_class v;
  mpz_pow_ui(v.get_mpz_t(), prime.get_mpz_t(), exponent);
  return v;
}

mpz_class Factorization::value() const {
  mpz_class v = 1;
  for (const auto& f : factors) v *= f.value();
  return v;
}

bool Factorization::squarefree() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const PrimePower& f) { return f.exponent == 1; });
}

std::string Factorization::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out << " * ";
    out << factors[i].prime.get_str();
    if (factors[i].exponent > 1) out << "^" << factors[i].exponent;
  }
  return out.str();
}

mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool try_invert(mpz_class& out, const mpz_class& a, const mpz_class& m) {
  if (m == 1) {
    out = 0;
    return true;
  }
  return mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) != 0;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

int jacobi(const mpz_class& a_in, const mpz_class& n_in) {
  if (n_in <= 0 || mpz_even_p(n_in.get_mpz_t()))
    throw std::invalid_argument("jacobi: n must be odd and positive");
  mpz_class a = mod(a_in, n_in);
  mpz_class n = n_in;
  int sign = 1;
  while (a != 0) {
    unsigned long twos = mpz_scan1(a.get_mpz_t(), 0);
    if (twos) {
      mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), twos);
      unsigned long n8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if ((twos & 1) && (n8 == 3 || n8 == 5)) sign = -sign;
    }
    // reciprocity: both odd now
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) sign = -sign;
    std::swap(a, n);
    a = mod(a, n);
  }
  return n == 1 ? sign : 0;
}

int jacobi_small(std::int64_t a, std::int64_t n) {
  if (n <= 0 || n % 2 == 0) throw std::invalid_argument("jacobi: n must be odd and positive");
  a %= n;
  if (a < 0) a += n;
  int sign = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t r = n % 8;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) sign = -sign;
    a %= n;
  }
  return n == 1 ? sign : 0;
}

Valuation padic_order(const mpz_class& n, const mpz_class& p) {
  if (n == 0) return Infinity{};
  if (p < 2) throw std::invalid_argument("padic_order: p must be prime");
  mpz_class rest = n;
  unsigned long e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
  return e;
}

bool valuation_at_least(const Valuation& v, unsigned long bound) {
  if (std::holds_alternative<Infinity>(v)) return true;
  return std::get<unsigned long>(v) >= bound;
}

namespace {

constexpr unsigned kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin_round(const mpz_class& n, const mpz_class& d, unsigned long s,
                        const mpz_class& base) {
  mpz_class x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const mpz_class n1 = n - 1;
  if (x == 1 || x == n1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n1) return true;
    if (x == 1) return false;
  }
  return false;
}

const mpz_class& deterministic_bound() {
  static const mpz_class bound("3317044064679887385961981");
  return bound;
}

}  // namespace

bool is_probable_prime(const mpz_class& n) {
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  mpz_class d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned p : kSmallPrimes)
    if (!miller_rabin_round(n, d, s, mpz_class(p))) return false;
  if (n < deterministic_bound()) return true;

  gmp_randclass rng(gmp_randinit_default);
  rng.seed(mpz_class(0x5eed));
  for (int i = 0; i < 24; ++i) {
    mpz_class base = rng.get_z_range(n - 3) + 2;
    if (!miller_rabin_round(n, d, s, base)) return false;
  }
  return true;
}

namespace {

// Brent's variant of Pollard rho; returns a nontrivial divisor or 0 after giving up.
mpz_class pollard_brent(const mpz_class& n, unsigned long c) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  mpz_class y = 2, x, ys, q = 1, g = 1;
  const unsigned long m = 128;
  unsigned long r = 1;
  const unsigned long limit = 1ul << 26;
  auto f = [&](const mpz_class& v) -> mpz_class { return (v * v + c) % n; };
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = f(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = q * abs(x - y) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
    if (r > limit) return 0;
  }
  if (g == n) {
    do {
      ys = f(ys);
      mpz_class diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? mpz_class(0) : g;
}

void split_into(const mpz_class& n, std::map<mpz_class, unsigned long>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  mpz_class root;
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2;; ++k) {
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
        std::map<mpz_class, unsigned long> inner;
        split_into(root, inner);
        for (const auto& [p, e] : inner) out[p] += e * k;
        return;
      }
    }
  }
  for (unsigned long c = 1; c < 64; ++c) {
    mpz_class d = pollard_brent(n, c);
    if (d != 0 && d != n) {
      split_into(d, out);
      split_into(n / d, out);
      return;
    }
  }
  throw FactorizationBudgetExceeded("factorize: rho gave up on " + n.get_str());
}

}  // namespace

Factorization factorize(const mpz_class& n_in, unsigned digit_budget) {
  if (n_in < 1) throw std::invalid_argument("factorize: n must be positive");
  if (mpz_sizeinbase(n_in.get_mpz_t(), 10) > digit_budget)
    throw FactorizationBudgetExceeded("factorize: input exceeds " + std::to_string(digit_budget) +
                                      " digits");
  std::map<mpz_class, unsigned long> found;
  mpz_class n = n_in;
  for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
    if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      found[mpz_class(p)] += 1;
    }
  }
  split_into(n, found);
  Factorization result;
  for (const auto& [p, e] : found) result.factors.push_back({p, e});
  return result;
}

Residue crt_combine(const std::vector<Residue>& residues) {
  Residue acc{0, 1};
  for (const auto& r : residues) {
    if (r.modulus < 1) throw std::invalid_argument("crt_combine: modulus must be positive");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), acc.modulus.get_mpz_t(), r.modulus.get_mpz_t());
    if (g != 1) throw std::invalid_argument("crt_combine: moduli are not pairwise coprime");
    mpz_class inv;
    try_invert(inv, acc.modulus, r.modulus);
    mpz_class k = mod((r.value - acc.value) * inv, r.modulus);
    acc.value += acc.modulus * k;
    acc.modulus *= r.modulus;
    acc.value = mod(acc.value, acc.modulus);
  }
  return acc;
}

TwoPowerSplit split_two_power(const mpz_class& m) {
  if (m < 1) throw std::invalid_argument("split_two_power: m must be positive");
  TwoPowerSplit out;
  out.s = mpz_scan1(m.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(out.t.get_mpz_t(), m.get_mpz_t(), out.s);
  return out;
}

mpz_class parse_integer(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw ParseError("empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("bad integer '" + text + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') throw ParseError("bad integer '" + text + "'");
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace ellcarm

namespace ellcarm {

WordFactorization factor_word(std::uint64_t n) {
  WordFactorization out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || hi < lo) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i <= hi; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

}  // namespace ellcarm
