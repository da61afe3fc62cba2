#ifndef DEFBOSE_THERMO_HPP
#define DEFBOSE_THERMO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "defbose/error.hpp"
#include "defbose/exact/scalar.hpp"
#include "defbose/series.hpp"
#include "defbose/structfn.hpp"

namespace defbose {

// Deformed Bose gas in reduced units: every series is per V/lambda^3, and
// the virial expansion is  P v/(k_B T) = sum_k V_k x^{k-1}  with x = lambda^3/v.

struct Backend {
  BackendKind kind = BackendKind::Surd;
  int digits = kDefaultDecimalDigits;

  // "exact", "decimal" or "decimal:<digits>".
  static Backend parse(std::string_view text);
  static Backend exact() { return {}; }
  static Backend decimal(int digits = kDefaultDecimalDigits) { return {BackendKind::Decimal, digits}; }
  std::string to_string() const;
};

struct GasModel {
  GasModel(StructureFunction sf, int order, Backend backend = {});

  StructureFunction sf;
  int order;  // K >= 2
  Backend backend;
};

enum class Provenance { Engine, ClosedFormCorrected, Printed };
std::string_view to_string(Provenance p) noexcept;

// Corrected: the coefficients reversion actually produces. Printed: the
// published fifth coefficient, whose third term reads -2 phi(3)^3 / 3^5.
enum class ClosedFormMode { Corrected, Printed };

template <class S>
struct VirialEntry {
  int k;
  S value;
  Provenance provenance;

  friend bool operator==(const VirialEntry&, const VirialEntry&) = default;
};

template <class S>
struct VirialTable {
  std::vector<VirialEntry<S>> entries;  // k = 1..K in order

  int order() const noexcept { return static_cast<int>(entries.size()); }
  const S& operator[](int k) const { return entries.at(static_cast<std::size_t>(k) - 1).value; }
};

// Admissibility flags attached to every model output.
struct ModelMetadata {
  std::optional<long> mu_reciprocal_integer;  // m when mu = 1/m
  std::optional<int> first_nonpositive_phi;   // smallest n >= 2 with phi(n) <= 0, up to K
};

ModelMetadata model_metadata(const StructureFunction& sf, int order);

// ln Z / (V / lambda^3) = sum_{n>=1} z^n / n^{5/2}
template <class S>
PowerSeries<S> log_partition_series(int order, const typename scalar_traits<S>::context& ctx) {
  using traits = scalar_traits<S>;
  if (order < 1) throw Error(ErrorKind::DomainError, "series order must be >= 1");
  auto s = PowerSeries<S>::zero('z', order, traits::from_rational(Rational(0), ctx));
  for (int n = 1; n <= order; ++n) s[n] = traits::half_power(static_cast<std::uint64_t>(n), 5, ctx);
  return s;
}

// lambda^3 / v = sum phi(n) z^n / n^{5/2}
template <class S>
PowerSeries<S> particle_series(const StructureFunction& sf, int order, const typename scalar_traits<S>::context& ctx) {
  return jackson_apply(sf, log_partition_series<S>(order, ctx), ctx);
}

// P lambda^3 / (k_B T) = sum phi(n) z^n / n^{7/2}
template <class S>
PowerSeries<S> pressure_series(const StructureFunction& sf, int order, const typename scalar_traits<S>::context& ctx) {
  return euler_inverse(particle_series<S>(sf, order, ctx));
}

// z as a series in x = lambda^3 / v.
template <class S>
PowerSeries<S> fugacity_of_density(const StructureFunction& sf, int order,
                                   const typename scalar_traits<S>::context& ctx) {
  return revert(particle_series<S>(sf, order, ctx)).with_variable('x');
}

// V_1..V_K from composing the pressure series with z(x): P lambda^3/(k_B T)
// = sum_k V_k x^k, so V_k is the x^k coefficient.
template <class S>
VirialTable<S> virial_coefficients(const StructureFunction& sf, int order,
                                   const typename scalar_traits<S>::context& ctx) {
  if (order < 1) throw Error(ErrorKind::DomainError, "virial order must be >= 1");
  const PowerSeries<S> particles = particle_series<S>(sf, order, ctx);
  const PowerSeries<S> pressure = euler_inverse(particles);
  const PowerSeries<S> fugacity = revert(particles).with_variable('x');
  const PowerSeries<S> px = compose(pressure, fugacity);
  VirialTable<S> table;
  for (int k = 1; k <= order; ++k) table.entries.push_back({k, px[k], Provenance::Engine});
  return table;
}

// V_2..V_5 as explicit polynomials in phi(2)..phi(5).
template <class S>
S closed_form_virial(const StructureFunction& sf, int k, ClosedFormMode mode,
                     const typename scalar_traits<S>::context& ctx) {
  using traits = scalar_traits<S>;
  if (k < 2 || k > 5) throw Error(ErrorKind::UnsupportedOrder, "closed forms exist for k = 2..5 only");
  auto phi = [&](long n) { return eval<S>(sf, n, ctx); };
  auto hp = [&](std::uint64_t n, unsigned e) { return traits::half_power(n, e, ctx); };
  auto rat = [&](long p, long q) { return traits::from_rational(Rational(p, q), ctx); };

  const S p2 = phi(2);
  const S p3 = phi(3);
  switch (k) {
    case 2:
      return -(p2 * hp(2, 7));
    case 3:
      return p2 * p2 * rat(1, 32) - p3 * hp(3, 7) * Rational(2);
    case 4: {
      const S p4 = phi(4);
      return -(p4 * hp(4, 7) * Rational(3)) + p2 * p3 * hp(2, 5) * hp(3, 3) - p2 * p2 * p2 * hp(2, 17) * Rational(5);
    }
    default: {
      const S p4 = phi(4);
      const S p5 = phi(5);
      const S third = mode == ClosedFormMode::Corrected ? p3 * p3 * rat(2, 243) : -(p3 * p3 * p3 * rat(2, 243));
      return -(p5 * hp(5, 7) * Rational(4)) + p2 * p4 * hp(2, 11) + third - p2 * p2 * p3 * hp(3, 3) * Rational(1, 8) +
             p2 * p2 * p2 * p2 * rat(7, 1024);
    }
  }
}

// Coefficients of z(x) for k = 1..5 as explicit polynomials in phi(2)..phi(5)
// (phi(1) = 1). Printed mode uses phi(2)^3 / 2^4 in the x^3 term where
// reversion gives phi(2)^2 / 2^4.
template <class S>
S fugacity_closed_form(const StructureFunction& sf, int k, ClosedFormMode mode,
                       const typename scalar_traits<S>::context& ctx) {
  using traits = scalar_traits<S>;
  if (k < 1 || k > 5) throw Error(ErrorKind::UnsupportedOrder, "closed forms exist for k = 1..5 only");
  auto phi = [&](long n) { return eval<S>(sf, n, ctx); };
  auto hp = [&](std::uint64_t n, unsigned e) { return traits::half_power(n, e, ctx); };
  auto rat = [&](long p, long q) { return traits::from_rational(Rational(p, q), ctx); };
  if (k == 1) return rat(1, 1);
  const S p2 = phi(2);
  if (k == 2) return -(p2 * hp(2, 5));
  const S p3 = phi(3);
  if (k == 3) {
    const S lead = mode == ClosedFormMode::Corrected ? p2 * p2 : p2 * p2 * p2;
    return lead * rat(1, 16) - p3 * hp(3, 5);
  }
  const S p4 = phi(4);
  if (k == 4) {
    return -(p4 * hp(4, 5)) + p2 * p3 * hp(2, 5) * hp(3, 5) * Rational(5) - p2 * p2 * p2 * hp(2, 15) * Rational(5);
  }
  const S p5 = phi(5);
  return -(p5 * hp(5, 5)) + p2 * p4 * hp(2, 13) * Rational(3) + p3 * p3 * rat(1, 81) -
         p2 * p2 * p3 * hp(3, 3) * Rational(7, 32) + p2 * p2 * p2 * p2 * rat(7, 512);
}

// V_2(sf) - V_2(undeformed), from the engine.
template <class S>
S second_virial_deviation(const StructureFunction& sf, const typename scalar_traits<S>::context& ctx) {
  const auto deformed = virial_coefficients<S>(sf, 2, ctx);
  const auto plain = virial_coefficients<S>(StructureFunction::undeformed(), 2, ctx);
  return deformed[2] - plain[2];
}

// Runtime-dispatched entry points for a GasModel; values are tagged Scalars.
// Throws BackendUnsupported up front when the exact backend cannot represent
// phi(n) for some n <= K.
scalar_traits<Scalar>::context context_for(const GasModel& model);
VirialTable<Scalar> virial_coefficients(const GasModel& model);
PowerSeries<Scalar> particle_series(const GasModel& model);
PowerSeries<Scalar> pressure_series(const GasModel& model);
PowerSeries<Scalar> fugacity_of_density(const GasModel& model);

}  // namespace defbose

#endif  // DEFBOSE_THERMO_HPP
