#include <gtest/gtest.h>

#include "ellcarm/errors.hpp"
#include "ellcarm/lseries.hpp"

using namespace ellcarm;

namespace {

long naive_trace(long A, long B, long p) {
  long count = 1;
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y)
      if (((y * y - x * x * x - A * x - B) % p + p) % p == 0) ++count;
  return p + 1 - count;
}

}  // namespace

TEST(Trace, FrozenValues) {
  EXPECT_EQ(trace_of_frobenius(parse_curve("[7,3]"), 43), 2);
  EXPECT_EQ(trace_of_frobenius(parse_curve("[7,3]"), 641), -15);
  EXPECT_EQ(trace_of_frobenius(parse_curve("[14,6]"), 3), 0);
  EXPECT_EQ(trace_of_frobenius(parse_curve("[14,6]"), 7), 4);
  EXPECT_EQ(trace_of_frobenius(parse_curve("[-1056,13552]"), 71), -3);
  EXPECT_EQ(trace_of_frobenius(parse_curve("[-1056,13552]"), 109), 0);
  EXPECT_EQ(trace_of_frobenius(parse_curve("[-3500,-98000]"), 47737), -214);
  EXPECT_EQ(trace_of_frobenius(parse_curve("[-3500,-98000]"), 275183), 0);
}

TEST(Trace, AgreesWithNaiveCount) {
  for (long p : {3, 5, 7, 11, 13, 29, 31})
    for (long A = 0; A < 6; ++A)
      for (long B = 0; B < 6; ++B) {
        const long d = 4 * A * A * A + 27 * B * B;
        if (d == 0) continue;
        const WeierstrassCurve E = WeierstrassCurve::short_form(A, B);
        if (!has_good_reduction(E, p)) {
          EXPECT_THROW(trace_of_frobenius(E, p), BadReduction);
          continue;
        }
        EXPECT_EQ(trace_of_frobenius(E, p), naive_trace(A, B, p)) << A << "," << B << " mod " << p;
      }
}

TEST(Trace, LongFormAndCharacteristicTwo) {
  // y^2 + y = x^3 - x^2 (conductor 11): a_2 = -2, a_3 = -1, a_5 = 1, a_7 = -2, a_13 = 4
  const WeierstrassCurve E = parse_curve("[0,-1,1,0,0]");
  EXPECT_EQ(trace_of_frobenius(E, 2), -2);
  EXPECT_EQ(trace_of_frobenius(E, 3), -1);
  EXPECT_EQ(trace_of_frobenius(E, 5), 1);
  EXPECT_EQ(trace_of_frobenius(E, 7), -2);
  EXPECT_EQ(trace_of_frobenius(E, 13), 4);
  EXPECT_THROW(trace_of_frobenius(E, 11), BadReduction);
}

TEST(Trace, CrossCheckAboveThreshold) {
  const WeierstrassCurve E = parse_curve("[-3500,-98000]");
  TraceOptions opt;
  opt.cross_check_above = 1000;
  EXPECT_EQ(trace_of_frobenius(E, 47737, opt), -214);
  const fp::Curve S{mpz_class(mod(mpz_class(-3500), 47737)).get_ui(),
                    mpz_class(mod(mpz_class(-98000), 47737)).get_ui(), 47737};
  EXPECT_TRUE(trace_cross_check(S, -214, 1));
  EXPECT_FALSE(trace_cross_check(S, -212, 1));
}

TEST(PrimePowerCoefficient, Recurrence) {
  // a_{p^2} = a_p^2 - p for good p
  EXPECT_EQ(prime_power_coefficient(2, 43, 2, true), 4 - 43);
  EXPECT_EQ(prime_power_coefficient(2, 43, 3, true), 2 * (4 - 43) - 43 * 2);
  EXPECT_EQ(prime_power_coefficient(2, 43, 1, true), 2);
  EXPECT_EQ(prime_power_coefficient(2, 43, 0, true), 1);
}

TEST(TraceTable, MultiplicativeAN) {
  const TraceTable t = trace_table(parse_curve("[7,3]"), factorize(27563));
  EXPECT_EQ(t.a_N, -30);
  EXPECT_EQ(t.at(43).a_p, 2);
  EXPECT_EQ(a_N(parse_curve("[0,80]"), 6119, factorize(6119)), 0);
  EXPECT_THROW(trace_table(parse_curve("[-5,0]"), factorize(35)), BadReduction);
}

TEST(Anomalous, SevenThree) {
  const WeierstrassCurve E = parse_curve("[7,3]");
  EXPECT_EQ(find_anomalous(E, 5, 2000), (std::vector<std::uint64_t>{13}));
  EXPECT_TRUE(is_anomalous(E, 13));
  EXPECT_FALSE(is_anomalous(E, 43));
}
