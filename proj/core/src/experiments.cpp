#include "ellcarm/experiments.hpp"

#include <climits>
#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ellcarm/arith.hpp"
#include "ellcarm/classify.hpp"
#include "ellcarm/errors.hpp"
#include "ellcarm/fp.hpp"
#include "ellcarm/lseries.hpp"
#include "ellcarm/parallel.hpp"

namespace ellcarm {

namespace {

long hasse_bound(std::uint64_t p) {
  long t = static_cast<long>(std::sqrt(4.0 * static_cast<double>(p)));
  while (static_cast<std::uint64_t>((t + 1) * (t + 1)) <= 4 * p) ++t;
  while (static_cast<std::uint64_t>(t * t) > 4 * p) --t;
  return t;
}

bool nonsingular(std::uint64_t A, std::uint64_t B, std::uint64_t p) {
  using namespace fp;
  std::uint64_t d = add(mul(4, mul(A, mul(A, A, p), p), p), mul(27, mul(B, B, p), p), p);
  return d != 0;
}

}  // namespace

unsigned long TraceCensus::total_curves() const {
  unsigned long n = 0;
  for (const auto& [t, row] : counts) n += row.curves;
  return n;
}

mpq_class TraceCensus::total_weighted() const {
  mpq_class s = 0;
  for (const auto& [t, row] : counts) s += row.weighted;
  return s;
}

TraceCensus trace_census(std::uint64_t p) {
  if (p <= 3 || p > 200 || !is_probable_prime(mpz_class(static_cast<unsigned long>(p))))
    throw std::invalid_argument("trace_census: p must be a prime with 3 < p <= 200");
  TraceCensus census;
  census.p = p;
  const long bound = hasse_bound(p);
  for (long t = -bound; t <= bound; ++t) census.counts[t].t = t;

  const auto chi = fp::quadratic_character_table(p);
  std::vector<char> seen(p * p, 0);
  std::vector<std::uint64_t> u4(p), u6(p);
  for (std::uint64_t u = 1; u < p; ++u) {
    const std::uint64_t u2 = fp::mul(u, u, p);
    u4[u] = fp::mul(u2, u2, p);
    u6[u] = fp::mul(u4[u], u2, p);
  }
  for (std::uint64_t A = 0; A < p; ++A)
    for (std::uint64_t B = 0; B < p; ++B) {
      if (seen[A * p + B] || !nonsingular(A, B, p)) continue;
      unsigned long orbit = 0;
      for (std::uint64_t u = 1; u < p; ++u) {
        char& mark = seen[fp::mul(u4[u], A, p) * p + fp::mul(u6[u], B, p)];
        if (!mark) {
          mark = 1;
          ++orbit;
        }
      }
      const unsigned long automorphisms = (p - 1) / orbit;
      auto& row = census.counts.at(trace_short(A, B, p, chi));
      row.classes += 1;
      row.curves += orbit;
      mpq_class weight(2, automorphisms);
      weight.canonicalize();
      row.weighted += weight;
    }
  return census;
}

mpq_class hurwitz_class_number(long D) {
  if (D >= 0 || (D % 4 != 0 && D % 4 != -3))
    throw std::invalid_argument("hurwitz_class_number: D must be negative and 0 or 1 mod 4");
  const long n = -D;
  mpq_class h = 0;
  for (long a = 1; 3 * a * a <= n; ++a)
    for (long b = -a + 1; b <= a; ++b) {
      if (((b - D) & 1) != 0) continue;
      const long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const long c = num / (4 * a);
      if (c < a || (b < 0 && a == c)) continue;
      if (a == b && b == c)
        h += mpq_class(1, 3);
      else if (b == 0 && a == c)
        h += mpq_class(1, 2);
      else
        h += 1;
    }
  h.canonicalize();
  return h;
}

namespace {

constexpr std::int32_t kUnknown = INT32_MIN;

// Traces of every y^2 = x^3 + Ax + B over one prime, filled on demand. Twists share a table:
// with A, B nonzero the curve is the twist of (k, k), k = A^3/B^2, by B/A.
class PrimeTraces {
 public:
  explicit PrimeTraces(std::uint64_t p)
      : p_(p), chi_(fp::quadratic_character_table(p)), twin_(p, kUnknown), a0_(p, kUnknown),
        b0_(p, kUnknown) {}

  long trace(std::uint64_t A, std::uint64_t B) {
    if (A == 0) return fill(a0_[B], 0, B);
    if (B == 0) return fill(b0_[A], A, 0);
    const std::uint64_t A3 = fp::mul(A, fp::mul(A, A, p_), p_);
    const std::uint64_t k = fp::mul(A3, fp::inv(fp::mul(B, B, p_), p_), p_);
    return chi_[fp::mul(A, B, p_)] * fill(twin_[k], k, k);
  }

 private:
  long fill(std::int32_t& slot, std::uint64_t A, std::uint64_t B) {
    if (slot == kUnknown) slot = static_cast<std::int32_t>(trace_short(A, B, p_, chi_));
    return slot;
  }

  std::uint64_t p_;
  std::vector<std::int8_t> chi_;
  std::vector<std::int32_t> twin_, a0_, b0_;
};

// #E(F_p) by Euler's criterion, independent of the character tables.
std::uint64_t count_points(std::uint64_t A, std::uint64_t B, std::uint64_t p) {
  const fp::Curve E{A, B, p};
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < p; ++x) n += 1 + fp::legendre(E.rhs(x), p);
  return n;
}

struct Tally {
  std::uint64_t accepted = 0, anomalous = 0, checks = 0, mismatches = 0;
};

}  // namespace

DensityEstimate sample_density(std::uint64_t M, std::uint64_t trials, std::uint64_t seed,
                               unsigned workers) {
  if (M < 7) throw std::invalid_argument("sample_density: M must be at least 7");
  if (M > 3037000499ULL) throw Unsupported("sample_density: M too large for word arithmetic");
  const auto primes = primes_between(5, M);
  const std::uint64_t np = primes.size();

  if (workers == 0) workers = thread_count();
  std::vector<Tally> tallies(workers);
  parallel_chunks(
      trials,
      [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
        std::unordered_map<std::uint64_t, std::unique_ptr<PrimeTraces>> cache;
        auto traces = [&](std::uint64_t p) -> PrimeTraces& {
          auto& slot = cache[p];
          if (!slot) slot = std::make_unique<PrimeTraces>(p);
          return *slot;
        };
        auto draw_curve = [](std::uint64_t p, std::uint64_t& state) {
          for (;;) {
            const std::uint64_t A = fp::splitmix64(state) % p, B = fp::splitmix64(state) % p;
            if (nonsingular(A, B, p)) return std::pair{A, B};
          }
        };
        Tally& tally = tallies[worker];
        for (std::uint64_t trial = begin; trial < end; ++trial) {
          std::uint64_t state = seed ^ (0xd1b54a32d192ed03ULL * (trial + 1));
          const std::uint64_t i = fp::splitmix64(state) % np;
          std::uint64_t j = fp::splitmix64(state) % (np - 1);
          if (j >= i) ++j;
          const std::uint64_t p = primes[i], q = primes[j], N = p * q;
          const auto [Ap, Bp] = draw_curve(p, state);
          const auto [Aq, Bq] = draw_curve(q, state);
          const long a_p = traces(p).trace(Ap, Bp), a_q = traces(q).trace(Aq, Bq);
          const std::int64_t target = static_cast<std::int64_t>(N) + 1 - a_p * a_q;
          const std::int64_t mp = static_cast<std::int64_t>(p) + 1 - a_p;
          const std::int64_t mq = static_cast<std::int64_t>(q) + 1 - a_q;
          if (target % mp != 0 || target % mq != 0) continue;
          ++tally.accepted;
          if (a_p != 1 || a_q != 1) continue;
          ++tally.anomalous;

          // glue the residues into one curve mod N and recount both reductions
          const mpz_class mp_(static_cast<unsigned long>(p)), mq_(static_cast<unsigned long>(q));
          const Residue A = crt_combine({{mpz_class(static_cast<unsigned long>(Ap)), mp_},
                                         {mpz_class(static_cast<unsigned long>(Aq)), mq_}});
          const Residue B = crt_combine({{mpz_class(static_cast<unsigned long>(Bp)), mp_},
                                         {mpz_class(static_cast<unsigned long>(Bq)), mq_}});
          const std::uint64_t AN = A.value.get_ui(), BN = B.value.get_ui();
          const std::uint64_t order = count_points(AN % p, BN % p, p) * count_points(AN % q, BN % q, q);
          ++tally.checks;
          if (static_cast<std::int64_t>(order) != target) ++tally.mismatches;
        }
      },
      workers);

  DensityEstimate est;
  est.M = M;
  est.trials = trials;
  est.seed = seed;
  for (const auto& t : tallies) {
    est.accepted += t.accepted;
    est.anomalous += t.anomalous;
    est.order_checks += t.checks;
    est.order_mismatches += t.mismatches;
  }
  if (est.accepted)
    est.anomalous_fraction = static_cast<double>(est.anomalous) / static_cast<double>(est.accepted);
  return est;
}

namespace {

std::string tuple_text(const char* what, std::int64_t p, std::int64_t a_p, std::int64_t q,
                       std::int64_t a_q) {
  std::ostringstream out;
  out << what << ": p=" << p << " a_p=" << a_p << " q=" << q << " a_q=" << a_q;
  return out.str();
}

struct Solution {
  std::int64_t p, a_p;
};

}  // namespace

LemmaScanReport verify_divisibility_lemmas(std::uint64_t q_max) {
  if (q_max > 500) throw Unsupported("verify_divisibility_lemmas: q_max above 500");
  LemmaScanReport report;
  report.q_max = q_max;
  const auto primes = primes_between(5, q_max);
  for (std::size_t qi = 1; qi < primes.size(); ++qi) {
    const std::int64_t q = static_cast<std::int64_t>(primes[qi]);
    const long bq = hasse_bound(primes[qi]);
    for (std::int64_t a_q = -bq; a_q <= bq; ++a_q) {
      const std::int64_t mq = q + 1 - a_q;
      std::vector<Solution> solutions;
      for (std::size_t pi = 0; pi < qi; ++pi) {
        const std::int64_t p = static_cast<std::int64_t>(primes[pi]);
        const long bp = hasse_bound(primes[pi]);
        for (std::int64_t a_p = -bp; a_p <= bp; ++a_p) {
          ++report.tuples;
          const std::int64_t mp = p + 1 - a_p;
          const std::int64_t target = p * q + 1 - a_p * a_q;
          const bool hyp = target % mq == 0;

          if (hyp) {
            ++report.hypothesis_hits;
            if (a_q == 0) report.counterexamples.push_back(tuple_text("a_q = 0 under the hypothesis", p, a_p, q, a_q));
            if (a_q == 1 && a_p != 1)
              report.counterexamples.push_back(tuple_text("a_q = 1 with a_p != 1", p, a_p, q, a_q));
          }

          const std::int64_t p_side = 1 - a_p * a_q - q + q * a_p;
          const std::int64_t q_side = 1 - a_p * a_q - p + p * a_q;
          const bool direct = hyp && target % mp == 0;
          const bool reformulated = p_side % mp == 0 && q_side % mq == 0;
          if (direct) ++report.both_divisible;
          if (direct != reformulated)
            report.counterexamples.push_back(tuple_text("divisibility formulations disagree", p, a_p, q, a_q));

          if (q_side % mq == 0) solutions.push_back({p, a_p});
        }
      }
      if (solutions.empty()) continue;
      const Solution base = solutions.front();
      const std::int64_t base_side = 1 - base.a_p * a_q - base.p + base.p * a_q;
      for (std::size_t s = 1; s < solutions.size(); ++s) {
        const auto [p, a_p] = solutions[s];
        const std::int64_t side = 1 - a_p * a_q - p + p * a_q;
        const std::int64_t diff = base_side - side;
        const std::int64_t x = a_p - base.a_p, y = p - base.p;
        bool fine = diff % mq == 0;
        std::int64_t k = diff / mq, alpha = 0;
        if (fine) {
          if (a_q != 1) {
            const std::int64_t r = x - k * mq;
            fine = r % (1 - a_q) == 0;
            alpha = r / (1 - a_q);
          } else {
            alpha = k * mq - y;
          }
        }
        fine = fine && x == k * mq + (1 - a_q) * alpha && y == k * mq - a_q * alpha;
        ++report.parametrized_pairs;
        if (!fine)
          report.counterexamples.push_back(tuple_text("no integer (k, alpha)", p, a_p, q, a_q) +
                                           " base p0=" + std::to_string(base.p) +
                                           " a_p0=" + std::to_string(base.a_p));
      }
    }
  }
  return report;
}

TrichotomyReport verify_anomalous_trichotomy(const WeierstrassCurve& E, std::uint64_t M) {
  if (M > 10000) throw Unsupported("verify_anomalous_trichotomy: M above 10^4");
  TrichotomyReport report;
  report.M = M;
  TraceOptions opt;
  opt.cross_check = false;
  std::vector<std::uint64_t> good;
  std::vector<long> traces;
  for (std::uint64_t p : primes_between(2, M)) {
    if (!has_good_reduction(E, mpz_class(static_cast<unsigned long>(p)))) continue;
    good.push_back(p);
    traces.push_back(trace_of_frobenius(E, p, opt));
  }
  for (std::size_t i = 0; i < good.size(); ++i)
    for (std::size_t j = i + 1; j < good.size(); ++j) {
      ++report.pairs;
      const std::uint64_t p = good[i], q = good[j];
      const long a_p = traces[i], a_q = traces[j];
      const mpz_class N = mpz_class(static_cast<unsigned long>(p)) * static_cast<unsigned long>(q);
      const std::vector<TraceEntry> entries{
          {mpz_class(static_cast<unsigned long>(p)), 1, a_p, mpz_class(a_p)},
          {mpz_class(static_cast<unsigned long>(q)), 1, a_q, mpz_class(a_q)}};
      if (!is_korselt_type1(N, entries, mpz_class(a_p) * a_q).holds) continue;
      TrichotomyCase c{p, q, a_p, a_q, p <= 13, a_p == 1 && a_q == 1, 256 * p * p >= q};
      if (!(c.small_p || c.anomalous || c.large_p)) {
        std::ostringstream out;
        out << "Type I N=" << N.get_str() << " p=" << p << " q=" << q << " a_p=" << a_p
            << " a_q=" << a_q << " fits no branch";
        report.counterexamples.push_back(out.str());
      }
      report.products.push_back(c);
    }
  return report;
}

}  // namespace ellcarm
