#include "ellcarm/lseries.hpp"

#include <cmath>
#include <stdexcept>

#include "ellcarm/errors.hpp"
#include "ellcarm/parallel.hpp"

namespace ellcarm {

namespace {

constexpr std::uint64_t kCountingLimit = 4000000000ULL;

std::uint64_t residue_of(const mpz_class& a, std::uint64_t p) {
  return mpz_fdiv_ui(a.get_mpz_t(), p);
}

// -sum chi(c3 x^3 + c2 x^2 + c1 x + c0) over x in [begin, end), stepping by forward differences.
long cubic_character_sum(std::uint64_t c3, std::uint64_t c2, std::uint64_t c1, std::uint64_t c0,
                         std::uint64_t p, const std::vector<std::int8_t>& chi,
                         std::uint64_t begin, std::uint64_t end) {
  auto f = [&](std::uint64_t x) {
    x %= p;
    std::uint64_t v = fp::add(fp::mul(c3, x, p), c2, p);
    v = fp::add(fp::mul(v, x, p), c1, p);
    return fp::add(fp::mul(v, x, p), c0, p);
  };
  if (begin >= end) return 0;
  std::uint64_t v = f(begin);
  std::uint64_t f1 = f(begin + 1), f2 = f(begin + 2);
  std::uint64_t d1 = fp::sub(f1, v, p);
  std::uint64_t d2 = fp::sub(fp::sub(f2, f1, p), d1, p);
  const std::uint64_t d3 = fp::mul(6 % p, c3, p);
  long sum = 0;
  for (std::uint64_t x = begin; x < end; ++x) {
    sum += chi[v];
    v = fp::add(v, d1, p);
    d1 = fp::add(d1, d2, p);
    d2 = fp::add(d2, d3, p);
  }
  return -sum;
}

long trace_brute_force(const WeierstrassCurve& E, std::uint64_t p) {
  std::uint64_t a[5];
  const mpz_class* src[] = {&E.a1(), &E.a2(), &E.a3(), &E.a4(), &E.a6()};
  for (int i = 0; i < 5; ++i) a[i] = residue_of(*src[i], p);
  std::uint64_t count = 1;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y) {
      std::uint64_t lhs = (y * y + a[0] * x * y + a[2] * y) % p;
      std::uint64_t rhs = (x * x * x + a[1] * x * x + a[3] * x + a[4]) % p;
      if (lhs == rhs) ++count;
    }
  return static_cast<long>(p + 1) - static_cast<long>(count);
}

}  // namespace

std::uint64_t word_prime(const mpz_class& p) {
  if (p < 2 || p > kCountingLimit) throw Unsupported("prime " + p.get_str() + " is outside the point-counting range");
  return p.get_ui();
}

long trace_short(std::uint64_t A, std::uint64_t B, std::uint64_t p,
                 const std::vector<std::int8_t>& chi) {
  return cubic_character_sum(1, 0, A % p, B % p, p, chi, 0, p);
}

long trace_of_frobenius(const WeierstrassCurve& E, std::uint64_t p, const TraceOptions& opt) {
  if (p < 2) throw std::invalid_argument("trace_of_frobenius: p must be prime");
  if (p > kCountingLimit) throw Unsupported("prime " + std::to_string(p) + " is outside the point-counting range");
  if (!has_good_reduction(E, mpz_class(static_cast<unsigned long>(p))))
    throw BadReduction({mpz_class(static_cast<unsigned long>(p))},
                       "bad reduction of " + E.to_string() + " at " + std::to_string(p));
  if (p == 2) return trace_brute_force(E, p);

  // 4x^3 + b2 x^2 + 2 b4 x + b6, or x^3 + Ax + B for short form
  std::uint64_t c3, c2, c1, c0;
  if (E.is_short()) {
    c3 = 1;
    c2 = 0;
    c1 = residue_of(E.a4(), p);
    c0 = residue_of(E.a6(), p);
  } else {
    c3 = 4 % p;
    c2 = residue_of(E.b2(), p);
    c1 = residue_of(2 * E.b4(), p);
    c0 = residue_of(E.b6(), p);
  }
  const auto chi = fp::quadratic_character_table(p);
  unsigned workers = opt.workers ? opt.workers : thread_count();
  if (p < 200000) workers = 1;
  std::vector<long> partial(workers, 0);
  parallel_chunks(
      p,
      [&](std::uint64_t b, std::uint64_t e, unsigned w) {
        partial[w] = cubic_character_sum(c3, c2, c1, c0, p, chi, b, e);
      },
      workers);
  long a_p = 0;
  for (long v : partial) a_p += v;

  if (opt.cross_check && p > opt.cross_check_above && p > 3) {
    fp::Curve S;
    S.p = p;
    S.A = residue_of(E.is_short() ? E.a4() : -27 * E.c4(), p);
    S.B = residue_of(E.is_short() ? E.a6() : -54 * E.c6(), p);
    if (!trace_cross_check(S, a_p, p ^ 0x7f4a7c159e3779b9ULL))
      throw Error("trace cross-check failed at p = " + std::to_string(p));
  }
  return a_p;
}

bool trace_cross_check(const fp::Curve& E, long a_p, std::uint64_t seed) {
  const std::uint64_t p = E.p;
  const std::uint64_t n = p + 1 - a_p;
  const auto fac = factor_word(n);
  const double root = std::sqrt(static_cast<double>(p));
  const std::uint64_t lo = static_cast<std::uint64_t>(std::ceil(p + 1 - 2 * root));
  const std::uint64_t hi = static_cast<std::uint64_t>(std::floor(p + 1 + 2 * root));
  std::uint64_t state = seed;
  for (int attempt = 0; attempt < 20; ++attempt) {
    fp::Point P = fp::random_point(E, state);
    if (!fp::mul(E, P, n).infinity) return false;
    std::uint64_t order = n;
    for (const auto& [l, e] : fac) {
      (void)e;
      while (order % l == 0 && fp::mul(E, P, order / l).infinity) order /= l;
    }
    std::uint64_t first = (lo + order - 1) / order * order;
    if (first + order > hi) return first == n;
  }
  return true;
}

mpz_class prime_power_coefficient(long a_p, const mpz_class& p, unsigned long e, bool good) {
  if (e == 0) return 1;
  mpz_class prev2 = 1, prev = a_p;
  for (unsigned long k = 2; k <= e; ++k) {
    mpz_class next = a_p * prev - (good ? p * prev2 : mpz_class(0));
    prev2 = prev;
    prev = next;
  }
  return prev;
}

const TraceEntry& TraceTable::at(const mpz_class& p) const {
  for (const auto& entry : entries)
    if (entry.p == p) return entry;
  throw std::out_of_range("no trace entry for " + p.get_str());
}

TraceTable trace_table(const WeierstrassCurve& E, const Factorization& f, const TraceOptions& opt) {
  TraceTable t{E, f.value(), {}, 1};
  std::vector<mpz_class> bad;
  for (const auto& pe : f.factors)
    if (!has_good_reduction(E, pe.prime)) bad.push_back(pe.prime);
  if (!bad.empty()) {
    std::string msg = "bad reduction of " + E.to_string() + " at";
    for (const auto& p : bad) msg += " " + p.get_str();
    throw BadReduction(std::move(bad), msg);
  }
  for (const auto& pe : f.factors) {
    long a_p = trace_of_frobenius(E, word_prime(pe.prime), opt);
    mpz_class a_pe = prime_power_coefficient(a_p, pe.prime, pe.exponent, true);
    t.a_N *= a_pe;
    t.entries.push_back({pe.prime, pe.exponent, a_p, a_pe});
  }
  return t;
}

mpz_class a_N(const WeierstrassCurve& E, const mpz_class& N, const Factorization& f) {
  if (f.value() != N) throw std::invalid_argument("a_N: factorization does not match N");
  return trace_table(E, f).a_N;
}

bool is_anomalous(const WeierstrassCurve& E, std::uint64_t p) {
  return trace_of_frobenius(E, p) == 1;
}

std::vector<std::uint64_t> find_anomalous(const WeierstrassCurve& E, std::uint64_t p_min,
                                          std::uint64_t p_max) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_between(p_min, p_max)) {
    if (!has_good_reduction(E, mpz_class(static_cast<unsigned long>(p)))) continue;
    if (trace_of_frobenius(E, p) == 1) out.push_back(p);
  }
  return out;
}

}  // namespace ellcarm
