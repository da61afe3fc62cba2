#ifndef DEFBOSE_SERIES_HPP
#define DEFBOSE_SERIES_HPP

#include <algorithm>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "defbose/error.hpp"
#include "defbose/exact/scalar.hpp"
#include "defbose/structfn.hpp"

namespace defbose {

// Truncated formal power series c_0 + c_1 v + ... + c_K v^K in one formal
// variable v (z for fugacity, x for reduced density). All K+1 coefficients
// are stored, zeros included.
template <class S>
class PowerSeries {
 public:
  PowerSeries(char var, std::vector<S> coeffs) : var_(var), c_(std::move(coeffs)) {
    if (c_.empty()) throw Error(ErrorKind::DomainError, "a power series needs at least one coefficient");
  }

  // zero_value fixes the backend (digit budget, variables) of the zeros.
  static PowerSeries zero(char var, int order, const S& zero_value) {
    return PowerSeries(var, std::vector<S>(static_cast<std::size_t>(order) + 1, zero_value));
  }

  char variable() const noexcept { return var_; }
  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const S& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  S& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }
  std::span<const S> coefficients() const noexcept { return c_; }

  PowerSeries truncated(int order) const {
    const int k = std::min(order, this->order());
    return PowerSeries(var_, std::vector<S>(c_.begin(), c_.begin() + k + 1));
  }

  PowerSeries with_variable(char var) const { return PowerSeries(var, c_); }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const PowerSeries& s) {
    for (int n = 0; n <= s.order(); ++n) {
      os << s.var_ << '^' << n << ": " << s.c_[n].to_string() << '\n';
    }
    return os;
  }

 private:
  char var_;
  std::vector<S> c_;
};

namespace detail {

template <class S>
S zero_like(const S& x) {
  return x - x;
}

}  // namespace detail

template <class S>
PowerSeries<S> operator+(const PowerSeries<S>& a, const PowerSeries<S>& b) {
  const int k = std::min(a.order(), b.order());
  PowerSeries<S> out = a.truncated(k);
  for (int n = 0; n <= k; ++n) out[n] += b[n];
  return out;
}

template <class S>
PowerSeries<S> operator-(const PowerSeries<S>& a, const PowerSeries<S>& b) {
  const int k = std::min(a.order(), b.order());
  PowerSeries<S> out = a.truncated(k);
  for (int n = 0; n <= k; ++n) out[n] -= b[n];
  return out;
}

template <class S>
PowerSeries<S> operator*(PowerSeries<S> a, const Rational& c) {
  for (int n = 0; n <= a.order(); ++n) a[n] *= c;
  return a;
}

// Cauchy product truncated at min(K_a, K_b).
template <class S>
PowerSeries<S> mul(const PowerSeries<S>& a, const PowerSeries<S>& b) {
  const int k = std::min(a.order(), b.order());
  auto out = PowerSeries<S>::zero(a.variable(), k, detail::zero_like(a[0]));
  for (int i = 0; i <= k; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= k; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// outer(inner(v)); the result is in inner's variable. inner must have no
// constant term.
template <class S>
PowerSeries<S> compose(const PowerSeries<S>& outer, const PowerSeries<S>& inner) {
  if (!inner[0].is_zero()) throw Error(ErrorKind::NonzeroConstantTerm, "compose needs an inner series without constant term");
  const int k = std::min(outer.order(), inner.order());
  const PowerSeries<S> in = inner.truncated(k);
  // Horner: ((o_K in + o_{K-1}) in + ...) + o_0
  auto acc = PowerSeries<S>::zero(in.variable(), k, detail::zero_like(in[0]));
  acc[0] = outer[k];
  for (int n = k - 1; n >= 0; --n) {
    acc = mul(acc, in);
    acc[0] += outer[n];
  }
  return acc;
}

// Compositional inverse g with f(g(v)) = v to order K, solved order by order.
// f needs c_0 = 0 and a linear coefficient that is a unit of the scalar ring.
//
// With P_j = g^j, the coefficient of v^k in f(g) is sum_j f_j [v^k] P_j. For
// j >= 2, [v^k] P_j involves only g_1..g_{k-1}, so g_k follows from setting
// that coefficient to zero.
template <class S>
PowerSeries<S> revert(const PowerSeries<S>& f) {
  using traits = scalar_traits<S>;
  if (!f[0].is_zero()) throw Error(ErrorKind::NonzeroConstantTerm, "revert needs c_0 = 0");
  const int k_max = f.order();
  if (k_max < 1) return f;
  if (f[1].is_zero()) throw Error(ErrorKind::ZeroLinearCoefficient, "revert needs c_1 != 0");

  const S zero = detail::zero_like(f[1]);
  const S one = traits::divide(f[1], f[1]);
  // powers[j][n] = [v^n] g^j for 1 <= j <= n <= K
  std::vector<std::vector<S>> powers(static_cast<std::size_t>(k_max) + 1,
                                     std::vector<S>(static_cast<std::size_t>(k_max) + 1, zero));
  powers[1][1] = traits::divide(one, f[1]);
  for (int j = 2; j <= k_max; ++j) powers[j][j] = powers[j - 1][j - 1] * powers[1][1];

  for (int n = 2; n <= k_max; ++n) {
    S rhs = zero;
    for (int j = 2; j <= n; ++j) {
      if (j < n) {
        S acc = zero;
        // [v^n] g^j = sum_{i=1}^{n-j+1} g_i [v^{n-i}] g^{j-1}
        for (int i = 1; i <= n - j + 1; ++i) {
          if (powers[1][i].is_zero() || powers[j - 1][n - i].is_zero()) continue;
          acc += powers[1][i] * powers[j - 1][n - i];
        }
        powers[j][n] = std::move(acc);
      }
      if (!f[j].is_zero() && !powers[j][n].is_zero()) rhs += f[j] * powers[j][n];
    }
    powers[1][n] = traits::divide(-rhs, f[1]);
  }

  std::vector<S> g(static_cast<std::size_t>(k_max) + 1, zero);
  for (int n = 1; n <= k_max; ++n) g[n] = powers[1][n];
  return PowerSeries<S>(f.variable(), std::move(g));
}

// The z-multiplied generalized Jackson derivative: c_n -> phi(n) c_n.
template <class S>
PowerSeries<S> jackson_apply(const StructureFunction& sf, const PowerSeries<S>& f,
                             const typename scalar_traits<S>::context& ctx) {
  PowerSeries<S> out = f;
  for (int n = 0; n <= f.order(); ++n) {
    if (f[n].is_zero()) continue;
    out[n] = eval<S>(sf, n, ctx) * f[n];
  }
  return out;
}

// Inverse of the Euler operator v d/dv on series without constant term.
template <class S>
PowerSeries<S> euler_inverse(const PowerSeries<S>& f) {
  if (!f[0].is_zero()) throw Error(ErrorKind::NonzeroConstantTerm, "euler_inverse needs c_0 = 0");
  PowerSeries<S> out = f;
  for (int n = 1; n <= f.order(); ++n) out[n] /= Rational(n);
  return out;
}

}  // namespace defbose

#endif  // DEFBOSE_SERIES_HPP
