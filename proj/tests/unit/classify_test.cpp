#include <gtest/gtest.h>

#include <json.hpp>

#include "ellcarm/classify.hpp"
#include "ellcarm/errors.hpp"

using namespace ellcarm;

namespace {

const mpz_class kMuller("676258600736819377469073681570025709");

}  // namespace

TEST(Prepare, RejectsPrimeAndPrimePower) {
  try {
    prepare(13, parse_curve("[7,3]"));
    FAIL() << "expected NotComposite";
  } catch (const NotComposite& e) {
    EXPECT_NE(std::string(e.what()).find("at least two distinct prime factors"), std::string::npos);
  }
  EXPECT_THROW(prepare(169, parse_curve("[7,3]")), NotComposite);
  EXPECT_THROW(prepare(35, parse_curve("[-5,0]")), BadReduction);
}

TEST(Prepare, OffCurvePoint) {
  const Instance inst = prepare(kMuller, parse_curve("[-3500,-98000]"));
  EXPECT_THROW(is_elliptic_pseudoprime(inst, {84, 884}), InvalidInput);
}

TEST(Muller, Verdicts) {
  const Instance inst = prepare(kMuller, parse_curve("[-3500,-98000]"));
  EXPECT_EQ(inst.a_N(), 0);
  EXPECT_EQ(inst.traces.at(47737).a_p, -214);
  const AffinePoint P{84, 448};
  EXPECT_TRUE(is_elliptic_pseudoprime(inst, P).holds);

  const EulerWitness euler = is_euler_elliptic_pseudoprime(inst, P);
  EXPECT_FALSE(euler.holds);
  EXPECT_TRUE(euler.is_double);
  EXPECT_EQ(euler.multiple.to_affine(),
            (AffinePoint{mpz_class("513078336047534294929224848649215641"), 0}));

  const StrongWitness strong = is_strong_elliptic_pseudoprime(inst, P);
  EXPECT_TRUE(strong.holds);
  EXPECT_FALSE(strong.t_branch);
  ASSERT_TRUE(strong.r.has_value());
  EXPECT_EQ(*strong.r, 0u);
  EXPECT_EQ(strong.s, 1u);
}

TEST(Example7739, EulerNotStrong) {
  const Instance inst = prepare(7739, parse_curve("[-1056,13552]"));
  const AffinePoint P{33, 121};
  EXPECT_TRUE(is_elliptic_pseudoprime(inst, P).holds);
  const EulerWitness euler = is_euler_elliptic_pseudoprime(inst, P);
  EXPECT_TRUE(euler.holds);
  EXPECT_FALSE(euler.is_double);
  const StrongWitness strong = is_strong_elliptic_pseudoprime(inst, P);
  EXPECT_FALSE(strong.holds);
  EXPECT_EQ(strong.t, 1935);
  EXPECT_EQ(strong.s, 2u);
}

TEST(NonPseudoprime, FailsAtFourPrimes) {
  const Instance inst = prepare(mpz_class("9090870127122419"), parse_curve("[-5,0]"));
  const EllipticWitness w = is_elliptic_pseudoprime(inst, {5, 10});
  EXPECT_FALSE(w.holds);
  EXPECT_TRUE(w.identity_at.at(61));
  for (long p : {997, 1289, 3851, 30113}) EXPECT_FALSE(w.identity_at.at(p));
}

TEST(Gordon, Gate) {
  // [-1056,13552] has CM by Q(sqrt(-11))
  const Instance inst = prepare(7739, parse_curve("[-1056,13552]"));
  const GordonWitness g = is_gordon_elliptic_pseudoprime(inst, {33, 121}, 11);
  EXPECT_EQ(g.jacobi_symbol, jacobi(-11, 7739));
  EXPECT_EQ(g.n_is_1_mod_4, false);
  if (g.jacobi_symbol != -1) EXPECT_FALSE(g.holds);
  const Instance bad = prepare(21, parse_curve("[14,6]"));
  EXPECT_THROW(is_gordon_elliptic_pseudoprime(bad, {1, 0}, 3), UndefinedPredicate);
}

TEST(Korselt, Example6119) {
  const Instance inst = prepare(6119, parse_curve("[0,80]"));
  const auto eps = exponents(inst);
  ASSERT_EQ(eps.size(), 2u);
  EXPECT_EQ(eps[0].epsilon, 30);
  EXPECT_EQ(eps[1].epsilon, 15);
  EXPECT_TRUE(is_euler_elliptic_carmichael(inst).holds);
  EXPECT_TRUE(is_korselt_type2(inst).holds);
}

TEST(Korselt, Example27563) {
  const Instance inst = prepare(27563, parse_curve("[7,3]"));
  EXPECT_EQ(inst.a_N(), -30);
  EXPECT_TRUE(is_korselt_type1(inst).holds);
  const KorseltWitness euler = is_euler_elliptic_carmichael(inst);
  EXPECT_FALSE(euler.holds);
  EXPECT_EQ(euler.target, 13797);
  ASSERT_TRUE(euler.failing_prime.has_value());
  EXPECT_EQ(*euler.failing_prime, 43);
  EXPECT_FALSE(is_strong_elliptic_carmichael(inst).holds);
  EXPECT_EQ(exponents(inst)[1].epsilon, 657);

  EXPECT_FALSE(korselt1_euler_equivalence(inst).holds);
  EXPECT_FALSE(korselt1_strong_equivalence(inst).holds);
}

TEST(Korselt, Example21) {
  const Instance inst = prepare(21, parse_curve("[14,6]"));
  EXPECT_FALSE(is_korselt_type1(inst).holds);
  EXPECT_TRUE(is_korselt_type2(inst).holds);
  EXPECT_FALSE(is_euler_elliptic_carmichael(inst).holds);
  EXPECT_THROW(korselt1_euler_equivalence(inst), UndefinedPredicate);
}

TEST(Korselt, TypeOneFromEntries) {
  // anomalous primes always give a Type I product
  const std::vector<TraceEntry> entries{{5, 1, 1, 1}, {7, 1, 1, 1}};
  EXPECT_TRUE(is_korselt_type1(35, entries, 1).holds);
  const std::vector<TraceEntry> one{{5, 1, 1, 1}};
  EXPECT_FALSE(is_korselt_type1(5, one, 1).holds);
}

TEST(Euler, OddMultiplierIsUndefined) {
  const Instance inst = prepare(27563, parse_curve("[7,3]"));
  EXPECT_EQ(inst.group_multiplier % 2, 0);
  const Instance odd = prepare(15, parse_curve("[1,1]"));
  if (odd.group_multiplier % 2 != 0) {
    EXPECT_THROW(is_euler_elliptic_carmichael(odd), UndefinedPredicate);
  }
}

TEST(Report, MullerJson) {
  const ClassificationReport r =
      classify_report(kMuller, parse_curve("[-3500,-98000]"), AffinePoint{84, 448});
  const auto j = nlohmann::json::parse(to_json_line(r));
  EXPECT_EQ(j["N"], "676258600736819377469073681570025709");
  EXPECT_EQ(j["elliptic_pp"], true);
  EXPECT_EQ(j["strong_pp"], true);
  EXPECT_EQ(j["euler_pp"], false);
  EXPECT_EQ(j["a_N"], "0");
  EXPECT_EQ(j["witnesses"]["strong"]["r"], 0);
  EXPECT_EQ(j["witnesses"]["euler"]["multiple"]["x"], "513078336047534294929224848649215641");
  EXPECT_EQ(j["gordon_pp"]["value"], "n/a");
  EXPECT_EQ(to_json_line(r).find('\n'), std::string::npos);
}

TEST(Report, InvariantsOnKnownInstances) {
  for (const auto& [N, curve] : std::vector<std::pair<long, const char*>>{
           {6119, "[0,80]"}, {27563, "[7,3]"}, {21, "[14,6]"}, {7739, "[-1056,13552]"}}) {
    const ClassificationReport r = classify_report(N, parse_curve(curve));
    if (r.korselt_type1.value.value_or(false) && N % 2)
      EXPECT_TRUE(r.elliptic_carmichael.value.value_or(false));
    if (r.elliptic_carmichael.value && r.korselt_type2.value)
      EXPECT_EQ(*r.elliptic_carmichael.value, *r.korselt_type2.value);
    if (r.strong_carmichael.value.value_or(false) && r.group_multiplier % 2 == 0)
      EXPECT_TRUE(r.euler_carmichael.value.value_or(false));
  }
}

TEST(Report, CliExamples) {
  const ClassificationReport r7739 =
      classify_report(7739, parse_curve("[-1056,13552]"), AffinePoint{33, 121});
  EXPECT_EQ(r7739.euler_pp.value, std::optional<bool>(true));
  EXPECT_EQ(r7739.strong_pp.value, std::optional<bool>(false));
  EXPECT_EQ(classify_report(21, parse_curve("[14,6]")).euler_carmichael.value,
            std::optional<bool>(false));
  EXPECT_EQ(classify_report(27563, parse_curve("[7,3]")).korselt_type1.value,
            std::optional<bool>(true));
}
