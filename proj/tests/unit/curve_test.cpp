#include <gtest/gtest.h>

#include "ellcarm/curve.hpp"
#include "ellcarm/errors.hpp"

using namespace ellcarm;

TEST(Curve, ParsesShortAndLongForms) {
  const WeierstrassCurve E = parse_curve("[-1056, 13552]");
  EXPECT_TRUE(E.is_short());
  EXPECT_EQ(E.a4(), -1056);
  EXPECT_EQ(E.to_string(), "[-1056,13552]");
  const WeierstrassCurve L = parse_curve("[1,0,1,-1,0]");
  EXPECT_FALSE(L.is_short());
  EXPECT_EQ(L.to_string(), "[1,0,1,-1,0]");
}

TEST(Curve, ParseErrors) {
  EXPECT_THROW(parse_curve("-1056,13552"), ParseError);
  EXPECT_THROW(parse_curve("[1,2,3]"), ParseError);
  EXPECT_THROW(parse_curve("[1,x]"), ParseError);
  EXPECT_THROW(parse_curve("[]"), ParseError);
}

TEST(Curve, SingularRejected) {
  EXPECT_THROW(parse_curve("[0,0]"), InvalidInput);
  EXPECT_THROW(parse_curve("[-3,2]"), InvalidInput);
}

TEST(Curve, Discriminant) {
  // -16 (4 A^3 + 27 B^2)
  EXPECT_EQ(parse_curve("[-1056,13552]").discriminant(), mpz_class("-3974344704"));
  EXPECT_EQ(parse_curve("[-5,0]").discriminant(), 8000);
  EXPECT_EQ(parse_curve("[0,1,1,0,0]").discriminant(), -43);
}

TEST(Curve, Membership) {
  const WeierstrassCurve E = parse_curve("[-3500,-98000]");
  const mpz_class N("676258600736819377469073681570025709");
  EXPECT_TRUE(E.contains(84, 448, N));
  EXPECT_FALSE(E.contains(84, 884, N));
  EXPECT_TRUE(parse_curve("[-1056,13552]").contains(33, 121, 7739));
  EXPECT_FALSE(parse_curve("[-1056,13352]").contains(33, 121, 7739));
}

TEST(Curve, BadReductionNamesEveryPrime) {
  const WeierstrassCurve E = parse_curve("[-5,0]");  // disc 8000 = 2^6 5^3
  EXPECT_TRUE(has_good_reduction(E, 7));
  EXPECT_FALSE(has_good_reduction(E, 5));
  try {
    reduce_mod(E, 70);
    FAIL() << "expected BadReduction";
  } catch (const BadReduction& e) {
    ASSERT_EQ(e.primes().size(), 2u);
    EXPECT_EQ(e.primes()[0], 2);
    EXPECT_EQ(e.primes()[1], 5);
  }
  const ReducedCurve r = reduce_mod(E, 21);
  EXPECT_EQ(r.coefficients[3], 16);
}

TEST(Curve, TwoTorsionForm) {
  const WeierstrassCurve E = parse_curve("[1,0,1,-1,0]");
  EXPECT_TRUE(is_two_torsion_form(E, 1, 6, 7));
  EXPECT_FALSE(is_two_torsion_form(E, 1, 3, 7));
  EXPECT_TRUE(is_two_torsion_form(parse_curve("[-5,0]"), 5, 0, 11));
}

TEST(ShortModel, LongFormTransformPreservesMembership) {
  const WeierstrassCurve E = parse_curve("[1,-1,1,-3,3]");
  const mpz_class m = 1009;
  ShortModel model(E, m);
  EXPECT_FALSE(model.identity_map());
  int seen = 0;
  for (long x = 0; x < 1009 && seen < 20; ++x)
    for (long y = 0; y < 1009; ++y) {
      if (!E.contains(x, y, m)) continue;
      mpz_class X = x, Y = y, Z = 1;
      model.to_short(X, Y, Z);
      const mpz_class rhs = X * X * X + model.A() * X * Z * Z + model.B() * Z * Z * Z;
      ASSERT_EQ(mod(Y * Y * Z - rhs, m), 0) << x << "," << y;
      model.from_short(X, Y, Z);
      mpz_class inv;
      ASSERT_TRUE(try_invert(inv, Z, m));
      EXPECT_EQ(mod(X * inv, m), x);
      EXPECT_EQ(mod(Y * inv, m), y);
      ++seen;
      break;
    }
  EXPECT_EQ(seen, 20);
  EXPECT_THROW(ShortModel(E, 15), Unsupported);
}
