#include "ellcarm/classify.hpp"

#include "ellcarm/errors.hpp"

namespace ellcarm {

namespace {

bool divides(const mpz_class& d, const mpz_class& n) {
  return d != 0 && mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t());
}

mpz_class half_multiplier(const Instance& inst) {
  if (mpz_odd_p(inst.group_multiplier.get_mpz_t()))
    throw UndefinedPredicate("N+1-a_N = " + inst.group_multiplier.get_str() +
                             " is odd; the Euler test needs an even multiplier");
  return inst.group_multiplier / 2;
}

EllipticWitness multiple_witness(const Instance& inst, const AffinePoint& P, const mpz_class& k) {
  EllipticWitness w;
  w.multiplier = k;
  w.multiple = normalize(scalar_mul(k, P, inst.curve, inst.N), inst.factors);
  w.identity_at = is_identity_componentwise(w.multiple, inst.factors);
  w.holds = true;
  for (const auto& [p, id] : w.identity_at) w.holds = w.holds && id;
  return w;
}

// Affine in every component with 2y + a1 x + a3 = 0 mod N.
bool affine_two_torsion(const Instance& inst, const ProjectivePoint& R) {
  return is_affine_two_torsion(R, inst.curve);
}

KorseltWitness exponent_test(const Instance& inst, const std::vector<ExponentRecord>& eps,
                             const mpz_class& target, const std::string& label) {
  KorseltWitness w;
  w.target = target;
  w.holds = true;
  for (const auto& rec : eps) {
    PrimeCheck c;
    c.p = rec.p;
    c.e = rec.e;
    c.a_p = inst.traces.at(rec.p).a_p;
    c.value = rec.epsilon;
    c.holds = divides(rec.epsilon, target);
    if (!c.holds) {
      c.note = "exponent " + rec.epsilon.get_str() + " does not divide " + label;
      if (w.holds) {
        w.failing_prime = rec.p;
        w.failing_condition = c.note;
      }
      w.holds = false;
    }
    w.per_prime.push_back(std::move(c));
  }
  return w;
}

}  // namespace

Instance prepare(const mpz_class& N, const WeierstrassCurve& E) {
  if (N < 2) throw NotComposite();
  return prepare(N, E, factorize(N));
}

Instance prepare(const mpz_class& N, const WeierstrassCurve& E, const Factorization& f) {
  if (f.value() != N) throw std::invalid_argument("prepare: factorization does not match N");
  if (f.distinct() < 2) throw NotComposite();
  TraceTable t = trace_table(E, f);
  mpz_class mult = N + 1 - t.a_N;
  return Instance{E, N, f, std::move(t), mult};
}

void require_on_curve(const Instance& inst, const AffinePoint& P) {
  if (!inst.curve.contains(P.x, P.y, inst.N))
    throw InvalidInput("point (" + P.x.get_str() + "," + P.y.get_str() + ") is not on " +
                       inst.curve.to_string() + " mod " + inst.N.get_str());
}

std::vector<ExponentRecord> exponents(const Instance& inst) {
  std::vector<ExponentRecord> out;
  for (const auto& pe : inst.factors.factors)
    out.push_back(exponent_mod_prime_power(inst.curve, pe.prime, pe.exponent));
  return out;
}

EllipticWitness is_elliptic_pseudoprime(const Instance& inst, const AffinePoint& P) {
  require_on_curve(inst, P);
  return multiple_witness(inst, P, inst.group_multiplier);
}

GordonWitness is_gordon_elliptic_pseudoprime(const Instance& inst, const AffinePoint& P, long d) {
  require_on_curve(inst, P);
  mpz_class g;
  mpz_class six_disc = 6 * inst.curve.discriminant();
  mpz_gcd(g.get_mpz_t(), inst.N.get_mpz_t(), six_disc.get_mpz_t());
  if (g != 1)
    throw UndefinedPredicate("Gordon's test needs gcd(N, 6 disc) = 1, got " + g.get_str());
  GordonWitness w;
  w.d = d;
  w.jacobi_symbol = jacobi(mpz_class(-d), inst.N);
  w.n_is_1_mod_4 = mpz_fdiv_ui(inst.N.get_mpz_t(), 4) == 1;
  if (w.jacobi_symbol != -1) return w;
  w.multiple = multiple_witness(inst, P, inst.N + 1);
  w.holds = w.multiple.holds;
  return w;
}

EulerWitness is_euler_elliptic_pseudoprime(const Instance& inst, const AffinePoint& P) {
  require_on_curve(inst, P);
  EulerWitness w;
  w.multiplier = half_multiplier(inst);
  w.is_double = is_double(ProjectivePoint::affine(P.x, P.y, inst.N), inst.curve, inst.factors,
                          &inst.traces);
  w.multiple = normalize(scalar_mul(w.multiplier, P, inst.curve, inst.N), inst.factors);
  if (w.multiple.is_identity()) {
    w.branch = w.is_double ? EulerBranch::double_to_identity : EulerBranch::identity;
    w.holds = true;
  } else if (!w.is_double && affine_two_torsion(inst, w.multiple)) {
    w.branch = EulerBranch::two_torsion;
    w.holds = true;
  }
  return w;
}

StrongWitness is_strong_elliptic_pseudoprime(const Instance& inst, const AffinePoint& P) {
  require_on_curve(inst, P);
  StrongWitness w;
  TwoPowerSplit split = split_two_power(inst.group_multiplier);
  w.s = split.s;
  w.t = split.t;
  std::vector<mpz_class> ks{w.t};
  for (unsigned long r = 1; r < w.s; ++r) ks.push_back(mpz_class(w.t << r));
  auto multiples = scalar_mul_many(ks, P, inst.curve, inst.N);
  w.reached = normalize(multiples.front(), inst.factors);
  if (w.reached.is_identity()) {
    w.t_branch = true;
    w.holds = true;
    return w;
  }
  for (unsigned long r = 0; r < w.s; ++r) {
    ProjectivePoint R = r == 0 ? w.reached : normalize(multiples[r], inst.factors);
    if (affine_two_torsion(inst, R)) {
      w.r = r;
      w.reached = R;
      w.holds = true;
      return w;
    }
  }
  return w;
}

KorseltWitness is_korselt_type1(const mpz_class& N, const std::vector<TraceEntry>& entries,
                                const mpz_class& a_N) {
  KorseltWitness w;
  w.target = N + 1 - a_N;
  w.holds = entries.size() >= 2;
  if (!w.holds) w.failing_condition = "fewer than two distinct primes";
  const mpz_class a_N_minus_1 = a_N - 1;
  for (const auto& entry : entries) {
    PrimeCheck c;
    c.p = entry.p;
    c.e = entry.e;
    c.a_p = entry.a_p;
    c.value = entry.p + 1 - entry.a_p;
    const bool order_divides = divides(c.value, w.target);
    const bool ap_is_1 = mod(mpz_class(entry.a_p) - 1, entry.p) == 0;
    const unsigned long need = entry.e - (ap_is_1 ? 0 : 1);
    const bool adic = valuation_at_least(padic_order(a_N_minus_1, entry.p), need);
    c.holds = order_divides && adic;
    if (!order_divides)
      c.note = "p+1-a_p = " + c.value.get_str() + " does not divide N+1-a_N";
    else if (!adic)
      c.note = "ord_p(a_N - 1) < " + std::to_string(need);
    if (!c.holds && w.holds) {
      w.failing_prime = entry.p;
      w.failing_condition = c.note;
    }
    w.holds = w.holds && c.holds;
    w.per_prime.push_back(std::move(c));
  }
  return w;
}

KorseltWitness is_korselt_type1(const Instance& inst) {
  return is_korselt_type1(inst.N, inst.traces.entries, inst.a_N());
}

KorseltWitness is_korselt_type2(const Instance& inst, const std::vector<ExponentRecord>& eps) {
  return exponent_test(inst, eps, inst.group_multiplier, "N+1-a_N");
}

KorseltWitness is_korselt_type2(const Instance& inst) {
  return is_korselt_type2(inst, exponents(inst));
}

KorseltWitness is_euler_elliptic_carmichael(const Instance& inst,
                                            const std::vector<ExponentRecord>& eps) {
  return exponent_test(inst, eps, half_multiplier(inst), "(N+1-a_N)/2");
}

KorseltWitness is_euler_elliptic_carmichael(const Instance& inst) {
  half_multiplier(inst);
  return is_euler_elliptic_carmichael(inst, exponents(inst));
}

KorseltWitness is_strong_elliptic_carmichael(const Instance& inst,
                                             const std::vector<ExponentRecord>& eps) {
  if (mpz_even_p(inst.N.get_mpz_t()))
    throw UndefinedPredicate("the strong Korselt criterion needs odd N");
  return exponent_test(inst, eps, split_two_power(inst.group_multiplier).t, "the odd part t");
}

KorseltWitness is_strong_elliptic_carmichael(const Instance& inst) {
  if (mpz_even_p(inst.N.get_mpz_t()))
    throw UndefinedPredicate("the strong Korselt criterion needs odd N");
  return is_strong_elliptic_carmichael(inst, exponents(inst));
}

BranchWitness korselt1_euler_equivalence(const Instance& inst) {
  if (!is_korselt_type1(inst).holds) throw UndefinedPredicate("N is not a Type I Korselt number");
  const mpz_class half = half_multiplier(inst);
  BranchWitness w;
  w.holds = true;
  for (const auto& entry : inst.traces.entries) {
    BranchCheck c;
    c.p = entry.p;
    const mpz_class order = entry.p + 1 - entry.a_p;
    c.branch_i = divides(order, half);
    c.branch_ii = !divides(entry.p, order) &&
                  count_order_two(inst.curve, word_prime(entry.p)) == 3;
    c.holds = c.branch_i || c.branch_ii;
    w.holds = w.holds && c.holds;
    w.per_prime.push_back(c);
  }
  return w;
}

BranchWitness korselt1_strong_equivalence(const Instance& inst) {
  if (!is_korselt_type1(inst).holds) throw UndefinedPredicate("N is not a Type I Korselt number");
  BranchWitness w;
  w.holds = true;
  for (const auto& entry : inst.traces.entries) {
    BranchCheck c;
    c.p = entry.p;
    const mpz_class order = entry.p + 1 - entry.a_p;
    c.branch_i = mpz_odd_p(order.get_mpz_t());
    c.holds = c.branch_i;
    w.holds = w.holds && c.holds;
    w.per_prime.push_back(c);
  }
  return w;
}

namespace {

template <typename Fn>
void evaluate(Flag& flag, Fn&& fn) {
  try {
    flag.value = fn();
  } catch (const UndefinedPredicate& e) {
    flag.reason = e.what();
  } catch (const Unsupported& e) {
    flag.reason = e.what();
  }
}

}  // namespace

ClassificationReport classify_report(const mpz_class& N, const WeierstrassCurve& E,
                                     const std::optional<AffinePoint>& P,
                                     const std::optional<long>& d) {
  const Instance inst = prepare(N, E);
  if (P) require_on_curve(inst, *P);

  ClassificationReport r{N, E, inst.factors, P, d, inst.a_N(), inst.group_multiplier,
                         inst.traces.entries, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {},
                         {}, {}, {}, {}, {}, {}, {}};

  std::optional<std::vector<ExponentRecord>> eps;
  std::string eps_error;
  try {
    eps = exponents(inst);
    r.exponents = *eps;
  } catch (const Unsupported& e) {
    eps_error = e.what();
  }
  auto with_eps = [&]() -> const std::vector<ExponentRecord>& {
    if (!eps) throw Unsupported(eps_error);
    return *eps;
  };

  const bool odd = mpz_odd_p(N.get_mpz_t()) != 0;

  evaluate(r.korselt_type1, [&] {
    r.type1 = is_korselt_type1(inst);
    return r.type1->holds;
  });
  evaluate(r.korselt_type2, [&] {
    r.type2 = is_korselt_type2(inst, with_eps());
    return r.type2->holds;
  });
  evaluate(r.elliptic_carmichael, [&] {
    if (!odd || N <= 2)
      throw UndefinedPredicate("Carmichael via Type II is only characterised for odd N > 2");
    if (!r.type2) throw Unsupported(r.korselt_type2.reason);
    return r.type2->holds;
  });
  evaluate(r.euler_carmichael, [&] {
    r.euler_korselt = is_euler_elliptic_carmichael(inst, with_eps());
    return r.euler_korselt->holds;
  });
  evaluate(r.strong_carmichael, [&] {
    if (!odd) throw UndefinedPredicate("the strong Korselt criterion needs odd N");
    r.strong_korselt = is_strong_elliptic_carmichael(inst, with_eps());
    return r.strong_korselt->holds;
  });

  const char* no_point = "no point supplied";
  if (P) {
    evaluate(r.elliptic_pp, [&] {
      r.elliptic = is_elliptic_pseudoprime(inst, *P);
      return r.elliptic->holds;
    });
    evaluate(r.euler_pp, [&] {
      r.euler = is_euler_elliptic_pseudoprime(inst, *P);
      return r.euler->holds;
    });
    evaluate(r.strong_pp, [&] {
      r.strong = is_strong_elliptic_pseudoprime(inst, *P);
      return r.strong->holds;
    });
    if (d) {
      evaluate(r.gordon_pp, [&] {
        r.gordon = is_gordon_elliptic_pseudoprime(inst, *P, *d);
        return r.gordon->holds;
      });
      if (r.gordon && !r.gordon->n_is_1_mod_4)
        r.notes.push_back("N = 3 mod 4: outside Gordon's original N = 1 mod 4 setting");
    } else {
      r.gordon_pp.reason = "no CM discriminant d supplied";
    }
  } else {
    r.elliptic_pp.reason = r.euler_pp.reason = r.strong_pp.reason = r.gordon_pp.reason = no_point;
  }
  return r;
}

const char* to_string(EulerBranch b) {
  switch (b) {
    case EulerBranch::double_to_identity:
      return "double_to_identity";
    case EulerBranch::identity:
      return "identity";
    case EulerBranch::two_torsion:
      return "two_torsion";
    case EulerBranch::failed:
      break;
  }
  return "failed";
}

}  // namespace ellcarm
