// Shared helpers for the test binaries: seeded random rationals and an
// independent high-precision oracle built on Boost.Multiprecision.
#pragma once

#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "defbose/exact/rational.hpp"
#include "defbose/exact/surd.hpp"
#include "defbose/structfn.hpp"

namespace testing_support {

using defbose::Rational;
using Real = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<80>>;

class RandomRationals {
 public:
  explicit RandomRationals(unsigned seed) : gen_(seed) {}

  // p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational next(long max_num = 20, long max_den = 12) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(gen_), den(gen_));
  }

  // Strictly inside (lo, hi) on a grid of the given denominator.
  Rational in_range(long lo_num, long hi_num, long den) {
    std::uniform_int_distribution<long> num(lo_num + 1, hi_num - 1);
    return Rational(num(gen_), den);
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

 private:
  std::mt19937 gen_;
};

inline Real to_real(const Rational& r) { return Real(r.num().get_str()) / Real(r.den().get_str()); }

// Parses a rendered decimal string; used to read the engine's output.
inline Real from_text(const std::string& s) { return Real(s); }

inline Real surd_value(const defbose::SurdRational& s) {
  Real acc = 0;
  for (const auto& [r, c] : s.terms()) acc += to_real(c) * boost::multiprecision::sqrt(Real(r));
  return acc;
}

// Relative gap with an absolute floor, so zeros compare sensibly.
inline Real relative_gap(const Real& a, const Real& b) {
  const Real scale = std::max(abs(a), abs(b));
  if (scale < Real("1e-60")) return abs(a - b);
  return abs(a - b) / scale;
}

// Structure functions written out from their definitions, without the
// library's descriptor code.
inline Real q_basic(const Real& q, const Real& x) {
  if (q == 1) return x;
  return (1 - boost::multiprecision::pow(q, x)) / (1 - q);
}

inline Real quad(const Real& mu, const Real& x) { return (1 + mu) * x - mu * x * x; }

inline Real oracle_phi(const defbose::StructureFunction& sf, long n) {
  using namespace defbose;
  const Real x(n);
  return std::visit(
      [&](const auto& v) -> Real {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, QBasic>) {
          return q_basic(to_real(v.q), x);
        } else if constexpr (std::is_same_v<V, QuadraticMu>) {
          return quad(to_real(v.mu), x);
        } else if constexpr (std::is_same_v<V, MuThenQ>) {
          return quad(to_real(v.mu), q_basic(to_real(v.q), x));
        } else if constexpr (std::is_same_v<V, QThenMu>) {
          return q_basic(to_real(v.q), quad(to_real(v.mu), x));
        } else if constexpr (std::is_same_v<V, TInterp>) {
          const Real t = to_real(v.t);
          return t * quad(to_real(v.mu), q_basic(to_real(v.q), x)) +
                 (1 - t) * q_basic(to_real(v.q), quad(to_real(v.mu), x));
        } else {
          throw std::logic_error("oracle has no eps expansion");
        }
      },
      sf.variant());
}

// Virial coefficients V_1..V_K. Density series rho(z) = sum phi(n) z^n / n^{5/2};
// the fugacity z(x) is found by fixed-point iteration z = x - sum_{n>=2} a_n z^n
// (each pass fixes one more order) and P(x) = sum phi(n) z^n / n^{7/2}.
inline std::vector<Real> oracle_virial(const defbose::StructureFunction& sf, int K) {
  using Series = std::vector<Real>;
  auto mul = [K](const Series& a, const Series& b) {
    Series out(K + 1, Real(0));
    for (int i = 0; i <= K; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= K; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  };
  std::vector<Real> a(K + 1, Real(0)), b(K + 1, Real(0));
  for (int n = 1; n <= K; ++n) {
    const Real nn(n);
    const Real root = boost::multiprecision::sqrt(nn);
    const Real phi = oracle_phi(sf, n);
    a[n] = phi / (nn * nn * root);
    b[n] = phi / (nn * nn * nn * root);
  }
  Series z(K + 1, Real(0));
  z[1] = 1 / a[1];
  for (int pass = 0; pass < K; ++pass) {
    Series next(K + 1, Real(0));
    next[1] = 1;
    Series zn = z;
    for (int n = 2; n <= K; ++n) {
      zn = mul(zn, z);
      for (int i = 0; i <= K; ++i) next[i] -= a[n] * zn[i];
    }
    for (int i = 0; i <= K; ++i) next[i] /= a[1];
    z = next;
  }
  Series p(K + 1, Real(0));
  Series zn(K + 1, Real(0));
  zn[0] = 1;
  for (int n = 1; n <= K; ++n) {
    zn = mul(zn, z);
    for (int i = 0; i <= K; ++i) p[i] += b[n] * zn[i];
  }
  return std::vector<Real>(p.begin() + 1, p.end());
}

}  // namespace testing_support
