#include <algorithm>

#include <gtest/gtest.h>

#include "ellcarm/errors.hpp"
#include "ellcarm/groupstruct.hpp"

using namespace ellcarm;

TEST(GroupShape, FrozenExponents) {
  EXPECT_EQ(group_shape(parse_curve("[0,80]"), 29).epsilon, 30u);
  EXPECT_EQ(group_shape(parse_curve("[0,80]"), 211).epsilon, 15u);
  EXPECT_EQ(group_shape(parse_curve("[14,6]"), 3).epsilon, 2u);
  EXPECT_EQ(group_shape(parse_curve("[14,6]"), 7).epsilon, 2u);
  EXPECT_EQ(group_shape(parse_curve("[7,3]"), 43).epsilon, 42u);
  const GroupShape g = group_shape(parse_curve("[7,3]"), 641);
  EXPECT_EQ(g.order, 657u);
  EXPECT_EQ(g.epsilon, 657u);
  EXPECT_EQ(g.delta, 1u);
}

TEST(GroupShape, NonCyclicDelta) {
  // [14,6] mod 7: four points, all of order dividing 2
  const GroupShape g = group_shape(parse_curve("[14,6]"), 7);
  EXPECT_EQ(g.order, 4u);
  EXPECT_EQ(g.delta, 2u);
}

TEST(GroupShape, MatchesExhaustiveOnSmallPrimes) {
  for (std::uint64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 101, 211})
    for (std::uint64_t A = 0; A < 7; ++A)
      for (std::uint64_t B = 0; B < 7; ++B) {
        if (A == 0 && B == 0) continue;
        const WeierstrassCurve E = WeierstrassCurve::short_form(A, B);
        if (!has_good_reduction(E, p)) continue;
        const GroupShape fast = group_shape(E, p);
        const GroupShape slow = group_shape_exhaustive(short_model_mod(E, p));
        ASSERT_EQ(fast.order, slow.order);
        ASSERT_EQ(fast.epsilon, slow.epsilon) << A << "," << B << " mod " << p;
        ASSERT_EQ(fast.delta * fast.epsilon, fast.order);
      }
}

TEST(GroupShape, LargePrimeFullTwoTorsion) {
  // y^2 = x^3 - x has full 2-torsion everywhere
  const GroupShape g = group_shape(parse_curve("[-1,0]"), 1000003);
  EXPECT_EQ(g.delta % 2, 0u);
  EXPECT_EQ(g.delta * g.epsilon, g.order);
}

TEST(PrimePowerExponent, CoprimeCase) {
  const ExponentRecord r = exponent_mod_prime_power(parse_curve("[7,3]"), 43, 2);
  EXPECT_EQ(r.epsilon, 43 * 42);
  EXPECT_EQ(exponent_mod_prime_power(parse_curve("[7,3]"), 43, 1).epsilon, 42);
}

TEST(PrimePowerExponent, MatchesEnumerationOracle) {
  // values from full enumeration of E(Z/p^e Z) with complete projective addition
  struct Case {
    long A, B, p;
    unsigned long e;
    long eps;
  };
  const Case cases[] = {{7, 3, 13, 2, 169}, {3, 2, 5, 2, 5},    {3, 2, 5, 3, 25},
                        {3, 3, 5, 2, 25},   {3, 3, 5, 3, 125},  {0, 5, 7, 2, 7},
                        {3, 5, 7, 2, 49},   {1, 5, 11, 2, 11},  {3, 9, 11, 2, 121}};
  for (const auto& c : cases)
    EXPECT_EQ(exponent_mod_prime_power(WeierstrassCurve::short_form(c.A, c.B), c.p, c.e).epsilon,
              c.eps)
        << "[" << c.A << "," << c.B << "] mod " << c.p << "^" << c.e;
}

TEST(PrimePowerExponent, LargeWildPrimeUnsupported) {
  EXPECT_NO_THROW(exponent_mod_prime_power(parse_curve("[7,3]"), 13, 2));
  bool tried = false;
  for (long A = 1; A < 40 && !tried; ++A) {
    const WeierstrassCurve E = WeierstrassCurve::short_form(A, 1);
    const auto primes = find_anomalous(E, 101, 400);
    if (primes.empty()) continue;
    EXPECT_THROW(exponent_mod_prime_power(E, primes.front(), 2), Unsupported);
    tried = true;
  }
  EXPECT_TRUE(tried);
}

TEST(Doubles, HalvingMatchesImage) {
  for (std::uint64_t p : {7, 13, 31, 97, 101}) {
    const fp::Curve S{2, 5, p};
    if ((4 * 8 + 27 * 25) % p == 0) continue;
    std::vector<fp::Point> pts;
    pts.push_back({});
    for (std::uint64_t x = 0; x < p; ++x)
      for (std::uint64_t y = 0; y < p; ++y)
        if (S.contains(fp::make_point(x, y))) pts.push_back(fp::make_point(x, y));
    std::vector<fp::Point> doubles;
    for (const auto& Q : pts) doubles.push_back(fp::dbl(S, Q));
    for (const auto& P : pts) {
      const bool image = std::find(doubles.begin(), doubles.end(), P) != doubles.end();
      EXPECT_EQ(is_double_mod_prime(S, P), image) << p << " (" << P.x << "," << P.y << ")";
    }
  }
}

TEST(Doubles, MullerPointIsADouble) {
  const mpz_class N("676258600736819377469073681570025709");
  const WeierstrassCurve E = parse_curve("[-3500,-98000]");
  EXPECT_TRUE(is_double(ProjectivePoint::affine(84, 448, N), E, factorize(N)));
  EXPECT_FALSE(is_double(ProjectivePoint::affine(33, 121, 7739), parse_curve("[-1056,13552]"),
                         factorize(7739)));
  EXPECT_THROW(is_double(ProjectivePoint::affine(1, 1, 63), parse_curve("[1,-1]"), factorize(63)),
               Unsupported);
}

TEST(TwoTorsion, Counts) {
  EXPECT_EQ(count_order_two(parse_curve("[-1,0]"), 7), 3);
  EXPECT_EQ(count_order_two(parse_curve("[7,3]"), 43), 1);
  EXPECT_EQ(count_order_two(parse_curve("[7,3]"), 641), 0);
  EXPECT_THROW(count_order_two(parse_curve("[-5,0]"), 5), BadReduction);
}

TEST(PointOrder, DividesGroupOrder) {
  const fp::Curve S{7, 3, 641};
  std::uint64_t state = 3;
  const auto fac = factor_word(657);
  for (int i = 0; i < 20; ++i) {
    const fp::Point P = fp::random_point(S, state);
    const std::uint64_t n = point_order(P, S, 657, fac);
    EXPECT_TRUE(fp::mul(S, P, n).infinity);
    EXPECT_EQ(657 % n, 0u);
  }
}
