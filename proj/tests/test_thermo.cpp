#include <gtest/gtest.h>

#include "defbose/error.hpp"
#include "defbose/thermo.hpp"
#include "support.hpp"

using namespace defbose;
using testing_support::Real;
using testing_support::RandomRationals;

namespace {

const scalar_traits<SurdRational>::context kExact{};
const scalar_traits<Decimal>::context kDec50{50};

Real value_of(const Decimal& d) { return testing_support::from_text(d.to_scientific(55)); }

}  // namespace

TEST(Thermo, LogPartitionSeries) {
  const auto s = log_partition_series<SurdRational>(5, kExact);
  EXPECT_EQ(s[0], SurdRational());
  EXPECT_EQ(s[1], SurdRational(1));
  EXPECT_EQ(s[2], SurdRational::sqrt_of(2, Rational(1, 8)));
  EXPECT_EQ(s[4], SurdRational(Rational(1, 32)));
}

TEST(Thermo, ParticleAndPressureSeries) {
  RandomRationals rng(41);
  for (int i = 0; i < 10; ++i) {
    const Rational mu = rng.next(), q = rng.next();
    const auto rho = particle_series<SurdRational>(QuadraticMu{mu}, 5, kExact);
    EXPECT_EQ(rho[2], SurdRational::sqrt_of(2, Rational(1, 4)) * (Rational(1) - mu));
    const auto rho_q = particle_series<SurdRational>(MuThenQ{Rational(0), q}, 5, kExact);
    EXPECT_EQ(rho_q[3], half_power(3, 5) * (Rational(1) + q + q * q));
    const auto p = pressure_series<SurdRational>(QuadraticMu{mu}, 5, kExact);
    EXPECT_EQ(p[2], half_power(2, 7) * (Rational(2) - Rational(2) * mu));
    EXPECT_EQ(p[5], half_power(5, 7) * (Rational(5) - Rational(20) * mu));
  }
  const auto plain = particle_series<SurdRational>(StructureFunction::undeformed(), 6, kExact);
  const auto plain_p = pressure_series<SurdRational>(StructureFunction::undeformed(), 6, kExact);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(plain[n], half_power(n, 3));
    EXPECT_EQ(plain_p[n], half_power(n, 5));
  }
  EXPECT_EQ(fugacity_of_density<SurdRational>(QuadraticMu{Rational(1, 3)}, 4, kExact)[1], SurdRational(1));
}

TEST(Thermo, UndeformedVirialTable) {
  const auto v = virial_coefficients<SurdRational>(StructureFunction::undeformed(), 5, kExact);
  EXPECT_EQ(v[1], SurdRational(1));
  EXPECT_EQ(v[2], SurdRational::sqrt_of(2, Rational(-1, 8)));
  EXPECT_EQ(v[3], SurdRational(Rational(1, 8)) - SurdRational::sqrt_of(3, Rational(2, 27)));
  EXPECT_EQ(v[2].to_decimal(6), "-0.176777");
  EXPECT_EQ(v[3].to_decimal(6), "-0.003300");
  EXPECT_EQ(v[4].to_scientific(8), "-1.1128933e-04");
  EXPECT_EQ(v[5].to_scientific(5), "-3.5405e-06");
  // V4 as the sum of its three textbook pieces.
  const SurdRational v4 = SurdRational(Rational(-3 * 4)) * half_power(4, 7) +
                          SurdRational(6) * half_power(2, 5) * half_power(3, 3) -
                          SurdRational(40) * half_power(2, 17);
  EXPECT_EQ(v[4], v4);
}

TEST(Thermo, VirialAgainstIndependentOracle) {
  RandomRationals rng(42);
  for (int i = 0; i < 15; ++i) {
    const Rational mu = rng.next(4, 6), q = rng.in_range(0, 30, 10);
    for (const StructureFunction& sf : {StructureFunction(QuadraticMu{mu}), StructureFunction(MuThenQ{mu, q}),
                                        StructureFunction(QBasic{q})}) {
      const auto exact = virial_coefficients<SurdRational>(sf, 8, kExact);
      const auto oracle = testing_support::oracle_virial(sf, 8);
      for (int k = 1; k <= 8; ++k) {
        EXPECT_LT(testing_support::relative_gap(testing_support::surd_value(exact[k]), oracle[k - 1]), Real("1e-60"))
            << sf.to_string() << " k=" << k;
      }
    }
  }
  // Real powers of q on the decimal backend.
  for (const StructureFunction& sf : {StructureFunction(QThenMu{Rational(3, 2), Rational(1, 4)}),
                                      StructureFunction(TInterp{Rational(1, 3), Rational(-1, 5), Rational(7, 4)})}) {
    const auto dec = virial_coefficients<Decimal>(sf, 8, kDec50);
    const auto oracle = testing_support::oracle_virial(sf, 8);
    for (int k = 1; k <= 8; ++k) {
      EXPECT_LT(testing_support::relative_gap(value_of(dec[k]), oracle[k - 1]), Real("1e-45")) << sf.to_string();
    }
  }
}

TEST(Thermo, ClosedFormsMatchEngine) {
  RandomRationals rng(43);
  for (int i = 0; i < 20; ++i) {
    const StructureFunction sf = MuThenQ{rng.next(), rng.next()};
    const auto table = virial_coefficients<SurdRational>(sf, 5, kExact);
    for (int k = 2; k <= 5; ++k) {
      EXPECT_EQ(closed_form_virial<SurdRational>(sf, k, ClosedFormMode::Corrected, kExact), table[k]) << k;
    }
    const auto x = fugacity_of_density<SurdRational>(sf, 5, kExact);
    for (int k = 1; k <= 5; ++k) {
      EXPECT_EQ(fugacity_closed_form<SurdRational>(sf, k, ClosedFormMode::Corrected, kExact), x[k]) << k;
    }
  }
  EXPECT_EQ(closed_form_virial<SurdRational>(QuadraticMu{Rational(1, 2)}, 3, ClosedFormMode::Corrected, kExact),
            SurdRational(Rational(1, 32)));
  EXPECT_THROW(closed_form_virial<SurdRational>(QuadraticMu{Rational(0)}, 6, ClosedFormMode::Corrected, kExact), Error);
}

TEST(Thermo, PrintedFormsDifferOnlyWhereCatalogued) {
  const StructureFunction plain = StructureFunction::undeformed();
  const auto printed_v5 = closed_form_virial<SurdRational>(plain, 5, ClosedFormMode::Printed, kExact);
  EXPECT_EQ(printed_v5.to_scientific(4), "-2.963e-01");
  RandomRationals rng(44);
  for (int i = 0; i < 10; ++i) {
    const StructureFunction sf = MuThenQ{rng.next(), rng.next()};
    for (int k = 2; k <= 4; ++k) {
      EXPECT_EQ(closed_form_virial<SurdRational>(sf, k, ClosedFormMode::Printed, kExact),
                closed_form_virial<SurdRational>(sf, k, ClosedFormMode::Corrected, kExact));
    }
    for (int k : {1, 2, 4, 5}) {
      EXPECT_EQ(fugacity_closed_form<SurdRational>(sf, k, ClosedFormMode::Printed, kExact),
                fugacity_closed_form<SurdRational>(sf, k, ClosedFormMode::Corrected, kExact));
    }
  }
}

TEST(Thermo, SecondVirialDeviation) {
  RandomRationals rng(45);
  for (int i = 0; i < 20; ++i) {
    const Rational mu = rng.next(), q = rng.next();
    EXPECT_EQ(second_virial_deviation<SurdRational>(MuThenQ{Rational(0), q}, kExact), half_power(2, 7) * (Rational(1) - q));
    EXPECT_EQ(second_virial_deviation<SurdRational>(MuThenQ{mu, Rational(1)}, kExact), half_power(2, 5) * mu);
  }
  EXPECT_TRUE(second_virial_deviation<SurdRational>(MuThenQ{Rational(0), Rational(1)}, kExact).is_zero());
}

TEST(Thermo, LimitConsistency) {
  RandomRationals rng(46);
  for (int i = 0; i < 10; ++i) {
    const Rational mu = rng.next(), q = rng.next();
    EXPECT_EQ(virial_coefficients<SurdRational>(MuThenQ{mu, Rational(1)}, 6, kExact).entries,
              virial_coefficients<SurdRational>(QuadraticMu{mu}, 6, kExact).entries);
    EXPECT_EQ(virial_coefficients<SurdRational>(MuThenQ{Rational(0), q}, 6, kExact).entries,
              virial_coefficients<SurdRational>(QBasic{q}, 6, kExact).entries);
  }
}

TEST(Thermo, BackendsAgree) {
  const StructureFunction sf = MuThenQ{Rational(1, 4), Rational(3, 2)};
  const auto exact = virial_coefficients(GasModel(sf, 8, Backend::exact()));
  const auto dec = virial_coefficients(GasModel(sf, 8, Backend::decimal(50)));
  for (int k = 1; k <= 8; ++k) {
    EXPECT_EQ(exact[k].to_scientific(40), dec[k].to_scientific(40)) << k;
  }
}

TEST(Thermo, RuntimeBackendRules) {
  auto kind_of = [](const GasModel& m) {
    try {
      virial_coefficients(m);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;  // sentinel: no error
  };
  EXPECT_EQ(kind_of(GasModel(QThenMu{Rational(3, 2), Rational(1, 4)}, 4, Backend::exact())),
            ErrorKind::BackendUnsupported);
  EXPECT_EQ(kind_of(GasModel(QBasicEps{3}, 4, Backend::decimal(30))), ErrorKind::BackendUnsupported);
  EXPECT_THROW(GasModel(QuadraticMu{Rational(0)}, 1, Backend::exact()), Error);

  // The eps expansion carries the q-deformed table as a truncated polynomial.
  const auto eps_table = virial_coefficients(GasModel(QBasicEps{2}, 3, Backend::exact()));
  const TruncPoly v2 = eps_table[2].get<TruncPoly>();
  EXPECT_EQ(v2.coefficient(Exponents{0, 0}), SurdRational::sqrt_of(2, Rational(-1, 8)));
  EXPECT_EQ(v2.coefficient(Exponents{1, 0}), SurdRational::sqrt_of(2, Rational(-1, 16)));
  EXPECT_EQ(Backend::parse("decimal:30").digits, 30);
  EXPECT_EQ(Backend::parse("exact").kind, BackendKind::Surd);
  EXPECT_THROW(Backend::parse("float"), Error);
}

TEST(Thermo, Metadata) {
  const ModelMetadata m = model_metadata(QuadraticMu{Rational(1, 2)}, 5);
  EXPECT_EQ(m.mu_reciprocal_integer, 2);
  EXPECT_EQ(m.first_nonpositive_phi, 3);
}
