#include <gtest/gtest.h>

#include "ellcarm/ecpoint.hpp"
#include "ellcarm/errors.hpp"
#include "ellcarm/fp.hpp"

using namespace ellcarm;

namespace {

const mpz_class kMuller("676258600736819377469073681570025709");

ProjectivePoint expect_point(const std::variant<ProjectivePoint, FactorFound>& r) {
  EXPECT_TRUE(std::holds_alternative<ProjectivePoint>(r));
  return std::get<ProjectivePoint>(r);
}

}  // namespace

TEST(PointParse, Forms) {
  EXPECT_EQ(parse_point("84,448"), (AffinePoint{84, 448}));
  EXPECT_EQ(parse_point("(33, 121)"), (AffinePoint{33, 121}));
  EXPECT_THROW(parse_point("1,2,3"), ParseError);
  EXPECT_THROW(parse_point("12"), ParseError);
}

TEST(DivisionPolynomial, MatchesReferenceRecurrence) {
  // y^2 = x^3 + 2x + 3 mod 97 at (0, 10); values from the textbook recurrence with psi_2 = 2y
  const std::vector<long> hat{0, 1, 1, 93, 34, 13, 13, 21, 65, 27, 8, 74, 69, 1, 86, 41};
  const std::vector<long> full{0, 1, 20, 93, 1, 13, 66, 21, 39, 27, 63, 74, 22, 1, 71, 41};
  DivisionPolynomialContext ctx(2, 3, 0, 10, 97);
  for (long n = 0; n < 16; ++n) {
    EXPECT_EQ(ctx.psi_hat(n), hat[n]) << n;
    EXPECT_EQ(ctx.psi(n), full[n]) << n;
    EXPECT_EQ(mod(ctx.psi_hat(-n) + ctx.psi_hat(n), 97), 0);
  }
  EXPECT_EQ(psi_hat(7, 0, 10, parse_curve("[2,3]"), 97), 21);
}

TEST(DivisionPolynomial, LargeIndexUsesSparseMemo) {
  DivisionPolynomialContext ctx(2, 3, 0, 10, 97);
  ctx.psi_hat(mpz_class("1000000000000"));
  EXPECT_LT(ctx.memo_size(), 600u);
}

TEST(ScalarMul, AgreesWithAffineArithmetic) {
  const std::uint64_t p = 1009;
  const fp::Curve S{2, 3, p};
  const WeierstrassCurve E = parse_curve("[2,3]");
  std::uint64_t state = 7;
  for (int trial = 0; trial < 5; ++trial) {
    const fp::Point P = fp::random_point(S, state);
    fp::Point acc;
    for (unsigned n = 0; n <= 60; ++n) {
      const ProjectivePoint R = scalar_mul(n, {P.x, P.y}, E, p);
      if (acc.infinity) {
        EXPECT_TRUE(R.is_identity()) << n;
      } else {
        ASSERT_TRUE(R.is_affine()) << n;
        EXPECT_EQ(R.to_affine(), (AffinePoint{acc.x, acc.y})) << n;
      }
      EXPECT_EQ(psi_vanishes(n, {P.x, P.y}, E, p), acc.infinity) << n;
      acc = fp::add(S, acc, P);
    }
  }
}

TEST(ScalarMul, LongFormCurve) {
  const WeierstrassCurve E = parse_curve("[1,-1,1,-3,3]");
  const mpz_class p = 1013;
  AffinePoint P;
  for (long x = 2;; ++x) {
    bool found = false;
    for (long y = 0; y < 1013; ++y)
      if (E.contains(x, y, p)) {
        P = {x, y};
        found = true;
        break;
      }
    if (found) break;
  }
  ProjectivePoint acc = ProjectivePoint::affine(P.x, P.y, p);
  const ProjectivePoint base = acc;
  for (unsigned n = 2; n <= 30; ++n) {
    acc = expect_point(add_points(acc, base, E));
    const ProjectivePoint R = scalar_mul(n, P, E, p);
    EXPECT_EQ(R.is_identity(), acc.is_identity()) << n;
    if (!acc.is_identity()) EXPECT_EQ(R.to_affine(), acc.to_affine()) << n;
  }
}

TEST(AddPoints, ReportsFactorOnNonInvertibleSlope) {
  const WeierstrassCurve E = parse_curve("[-1056,13552]");
  const mpz_class N = 7739;
  const AffinePoint P{33, 121};
  const ProjectivePoint Q = scalar_mul(75, P, E, N);  // identity mod 71, affine mod 109
  ASSERT_FALSE(Q.is_identity());
  const auto r = add_points(ProjectivePoint::affine(P.x, P.y, N), Q, E);
  if (std::holds_alternative<FactorFound>(r)) {
    const mpz_class d = std::get<FactorFound>(r).divisor;
    EXPECT_TRUE(d == 71 || d == 109);
  } else {
    const ProjectivePoint R = std::get<ProjectivePoint>(r);
    EXPECT_EQ(normalize(R, factorize(N)), normalize(scalar_mul(76, P, E, N), factorize(N)));
  }
}

TEST(Muller, HalfMultipleIsTwoTorsion) {
  const WeierstrassCurve E = parse_curve("[-3500,-98000]");
  const AffinePoint P{84, 448};
  const ProjectivePoint full = scalar_mul(kMuller + 1, P, E, kMuller);
  EXPECT_TRUE(full.is_identity());
  const ProjectivePoint half = scalar_mul((kMuller + 1) / 2, P, E, kMuller);
  ASSERT_TRUE(half.is_affine());
  EXPECT_EQ(half.to_affine(), (AffinePoint{mpz_class("513078336047534294929224848649215641"), 0}));
  EXPECT_TRUE(is_affine_two_torsion(half, E));
}

TEST(Muller, StatedQDoublesToP) {
  const WeierstrassCurve E = parse_curve("[-3500,-98000]");
  const mpz_class qx("427631894156657698513741722706642740");
  const mpz_class qy("349223536492541846798816891095072158");
  ASSERT_TRUE(E.contains(qx, qy, kMuller));
  const ProjectivePoint Q = ProjectivePoint::affine(qx, qy, kMuller);
  const ProjectivePoint twoQ = expect_point(add_points(Q, Q, E));
  EXPECT_EQ(twoQ.to_affine(), (AffinePoint{84, 448}));
  EXPECT_EQ(scalar_mul(2, {qx, qy}, E, kMuller).to_affine(), (AffinePoint{84, 448}));
}

TEST(Example7739, ComponentwiseValues) {
  const WeierstrassCurve E = parse_curve("[-1056,13552]");
  const ProjectivePoint R = scalar_mul(1935, {33, 121}, E, 7739);
  const ProjectivePoint r71 = normalize(reduce(R, 71));
  const ProjectivePoint r109 = normalize(reduce(R, 109));
  EXPECT_TRUE(r71.is_identity());
  ASSERT_TRUE(r109.is_affine());
  EXPECT_EQ(r109.to_affine(), (AffinePoint{102, 0}));
  const auto id = is_identity_componentwise(R, factorize(7739));
  EXPECT_TRUE(id.at(71));
  EXPECT_FALSE(id.at(109));
  EXPECT_FALSE(R.is_identity());
  EXPECT_FALSE(is_affine_two_torsion(normalize(R, factorize(7739)), E));
}

TEST(TableEntries, EighthMultipleOf32759) {
  const WeierstrassCurve E = parse_curve("[-3500,-98000]");
  const ProjectivePoint R = scalar_mul(mpz_class(32760 / 8), {84, 448}, E, 32759);
  ASSERT_TRUE(R.is_affine());
  EXPECT_EQ(R.to_affine(), (AffinePoint{30041, 29274}));
  EXPECT_EQ(29274 % 17, 0);
  EXPECT_EQ(29274 % 41, 0);
  EXPECT_NE(29274 % 47, 0);
}

TEST(TableEntries, NonPseudoprimeFailsAtFourPrimes) {
  const mpz_class N("9090870127122419");
  const WeierstrassCurve E = parse_curve("[-5,0]");
  const Factorization f = factorize(N);
  const ProjectivePoint R = scalar_mul(N + 1, {5, 10}, E, N);
  const auto id = is_identity_componentwise(R, f);
  EXPECT_TRUE(id.at(61));
  for (long p : {997, 1289, 3851, 30113}) EXPECT_FALSE(id.at(p)) << p;
}

TEST(Normalize, IdentityAndMixed) {
  EXPECT_TRUE(normalize(ProjectivePoint{0, 5, 0, 7739}).is_identity());
  const ProjectivePoint mixed = normalize(scalar_mul(1935, {33, 121}, parse_curve("[-1056,13552]"), 7739),
                                          factorize(7739));
  EXPECT_FALSE(mixed.is_identity());
  EXPECT_FALSE(mixed.is_affine());
  EXPECT_EQ(mod(mixed.Z, 71), 0);
  EXPECT_EQ(mod(mixed.Z, 109), 1);
}
