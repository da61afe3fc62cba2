#include <gtest/gtest.h>

#include "defbose/error.hpp"
#include "defbose/series.hpp"
#include "support.hpp"

using namespace defbose;
using testing_support::RandomRationals;

namespace {

using RSeries = PowerSeries<Rational>;
using SSeries = PowerSeries<SurdRational>;
const scalar_traits<SurdRational>::context kExact{};

RSeries rs(std::vector<Rational> c) { return RSeries('z', std::move(c)); }

}  // namespace

TEST(Series, MulAndCompose) {
  EXPECT_EQ(mul(rs({1, 1, 0}), rs({1, -1, 0})), rs({1, 0, -1}));
  EXPECT_EQ(compose(rs({0, 1, 1}), rs({0, 1, 0})), rs({0, 1, 1}));
  EXPECT_EQ(compose(rs({0, 0, 1, 0}), rs({0, 2, 0, 0})), rs({0, 0, 4, 0}));
  // Truncation to the shorter operand.
  EXPECT_EQ(mul(rs({1, 1, 1, 1}), rs({1, 1})).order(), 1);
  EXPECT_THROW(compose(rs({0, 1}), rs({1, 1})), Error);
}

TEST(Series, RevertCatalan) {
  EXPECT_EQ(revert(rs({0, 1, 0, 0})), rs({0, 1, 0, 0}));
  EXPECT_EQ(revert(rs({0, 1, -1, 0, 0})), rs({0, 1, 1, 2, 5}));
  // Catalan numbers to order 12.
  std::vector<Rational> f(13, Rational(0));
  f[1] = 1;
  f[2] = -1;
  const RSeries g = revert(rs(f));
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786};
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(g[n], Rational(catalan[n - 1])) << n;
}

TEST(Series, RevertUndeformedDensity) {
  // z + z^2/2^{3/2} + z^3/3^{3/2}
  SSeries f('z', {SurdRational(), SurdRational(1), half_power(2, 3), half_power(3, 3)});
  const SSeries g = revert(f);
  EXPECT_EQ(g[2], -half_power(2, 3));
  EXPECT_EQ(compose(f, g), SSeries('z', {SurdRational(), SurdRational(1), SurdRational(), SurdRational()}));
}

TEST(Series, RevertErrors) {
  try {
    revert(rs({1, 1, 0}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonzeroConstantTerm);
  }
  try {
    revert(rs({0, 0, 1}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroLinearCoefficient);
  }
}

TEST(Series, RevertNonUnitLinearTerm) {
  RandomRationals rng(31);
  for (int i = 0; i < 20; ++i) {
    std::vector<Rational> c(9);
    c[0] = 0;
    do c[1] = rng.next(); while (c[1].is_zero());
    for (int n = 2; n <= 8; ++n) c[n] = rng.next();
    const RSeries f = rs(c);
    const RSeries g = revert(f);
    RSeries id = rs(std::vector<Rational>(9, Rational(0)));
    id[1] = 1;
    EXPECT_EQ(compose(f, g), id);
    EXPECT_EQ(compose(g, f), id);
  }
}

TEST(Series, ClassicalReversionFormulas) {
  // For f = z + a2 z^2 + ..., the inverse has
  // A2 = -a2, A3 = 2a2^2 - a3, A4 = -5a2^3 + 5a2a3 - a4,
  // A5 = 14a2^4 - 21a2^2 a3 + 6a2a4 + 3a3^2 - a5.
  RandomRationals rng(32);
  for (int i = 0; i < 30; ++i) {
    const Rational a2 = rng.next(), a3 = rng.next(), a4 = rng.next(), a5 = rng.next();
    const RSeries g = revert(rs({0, 1, a2, a3, a4, a5}));
    EXPECT_EQ(g[2], -a2);
    EXPECT_EQ(g[3], Rational(2) * a2 * a2 - a3);
    EXPECT_EQ(g[4], Rational(-5) * a2.pow(3) + Rational(5) * a2 * a3 - a4);
    EXPECT_EQ(g[5], Rational(14) * a2.pow(4) - Rational(21) * a2 * a2 * a3 + Rational(6) * a2 * a4 +
                        Rational(3) * a3 * a3 - a5);
  }
}

TEST(Series, JacksonAndEuler) {
  const StructureFunction q = QBasic{Rational(3)};
  SSeries z3('z', {SurdRational(), SurdRational(), SurdRational(), SurdRational(1)});
  EXPECT_EQ(jackson_apply(q, z3, kExact)[3], SurdRational(13));
  EXPECT_TRUE(jackson_apply(StructureFunction(QuadraticMu{Rational(1, 2)}), z3, kExact)[3].is_zero());

  SSeries f('z', {SurdRational(), SurdRational(Rational(2)), half_power(2, 1), half_power(3, 5), SurdRational(7)});
  const SSeries n_f = jackson_apply(StructureFunction::undeformed(), f, kExact);
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(n_f[n], f[n] * Rational(n));
  EXPECT_EQ(euler_inverse(n_f), f);
  EXPECT_EQ(euler_inverse(SSeries('z', {SurdRational(), SurdRational(1)})), SSeries('z', {SurdRational(), SurdRational(1)}));
  EXPECT_THROW(euler_inverse(SSeries('z', {SurdRational(1)})), Error);
}
