#ifndef DEFBOSE_STRUCTFN_HPP
#define DEFBOSE_STRUCTFN_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>

#include "defbose/error.hpp"
#include "defbose/exact/rational.hpp"
#include "defbose/exact/scalar.hpp"
#include "defbose/exact/truncpoly.hpp"

namespace defbose {

// [n]_q = (1 - q^n)/(1 - q) = 1 + q + ... + q^{n-1}
struct QBasic {
  Rational q;

  friend bool operator==(const QBasic&, const QBasic&) = default;
};

// [n]_mu = (1 + mu) n - mu n^2
struct QuadraticMu {
  Rational mu;

  friend bool operator==(const QuadraticMu&, const QuadraticMu&) = default;
};

// (1 + mu)[n]_q - mu ([n]_q)^2, the quadratic deformation applied to the q-number.
struct MuThenQ {
  Rational mu;
  Rational q;

  friend bool operator==(const MuThenQ&, const MuThenQ&) = default;
};

// (1 - q^{[n]_mu})/(1 - q), the q-number of the quadratic deformation.
struct QThenMu {
  Rational q;
  Rational mu;

  friend bool operator==(const QThenMu&, const QThenMu&) = default;
};

// t * MuThenQ(mu, q) + (1 - t) * QThenMu(q, mu)
struct TInterp {
  Rational t;
  Rational mu;
  Rational q;

  friend bool operator==(const TInterp&, const TInterp&) = default;
};

// [n]_q with q = 1 + eps kept as a truncated polynomial in eps.
struct QBasicEps {
  int order;

  friend bool operator==(const QBasicEps&, const QBasicEps&) = default;
};

class StructureFunction {
 public:
  using Variant = std::variant<QBasic, QuadraticMu, MuThenQ, QThenMu, TInterp, QBasicEps>;

  StructureFunction(Variant v);  // NOLINT(google-explicit-constructor)
  template <class V>
    requires(!std::is_same_v<std::decay_t<V>, Variant> && std::is_constructible_v<Variant, V>)
  StructureFunction(V v) : StructureFunction(Variant(std::move(v))) {}  // NOLINT(google-explicit-constructor)

  // Descriptor grammar: "q:3/2", "mu:1/4", "mu-q:1/4,3/2", "q-mu:3/2,1/4",
  // "t:1/2;mu:1/4;q:3/2", "q-eps:order=6".
  static StructureFunction parse(std::string_view descriptor);
  static StructureFunction undeformed() { return QuadraticMu{Rational(0)}; }

  const Variant& variant() const noexcept { return v_; }
  friend bool operator==(const StructureFunction&, const StructureFunction&) = default;
  std::string to_string() const;

  // The mu parameter, when the variant has one.
  std::optional<Rational> mu() const;
  // m when mu = 1/m for an integer m >= 1.
  std::optional<long> mu_reciprocal_integer() const;

  // True when phi(n) for n <= max_n leaves the surd ring (a q power with a
  // non-integer exponent).
  bool needs_real_powers(int max_n) const;
  bool is_eps_expansion() const noexcept { return std::holds_alternative<QBasicEps>(v_); }

 private:
  Variant v_;
};

// phi(n) as an exact rational, or nullopt when phi(n) is not rational
// (QThenMu with non-integer exponent) or is formal in eps.
std::optional<Rational> eval_rational(const StructureFunction& sf, long n);

// Rational-exponent geometric sum (1 - q^e)/(1 - q) for integer e, including
// negative e and the q = 1 value e.
Rational q_number(const Rational& q, long e);

// [n]_q with q = 1 + eps, to the given eps order:
// sum_{i=0}^{min(order, n-1)} C(n, i+1) eps^i.
TruncPoly eval_eps(long n, int order);

// [N]_q in powers of N and eps: maps (power of N, power of eps) -> coefficient.
// Built from the falling-factorial form via signed Stirling numbers of the
// first kind; entries with N-power above order_n or eps-power above order_eps
// are dropped.
std::map<std::pair<int, int>, Rational> monomial_expansion(int order_eps, int order_n);

// Signed Stirling number of the first kind s(m, k).
Integer stirling_first(int m, int k);

template <class S>
S eval(const StructureFunction& sf, long n, const typename scalar_traits<S>::context& ctx) {
  using traits = scalar_traits<S>;
  if (n < 0) throw Error(ErrorKind::DomainError, "structure function needs n >= 0");
  if (auto r = eval_rational(sf, n)) return traits::from_rational(*r, ctx);

  return std::visit(
      [&](const auto& v) -> S {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, QBasicEps>) {
          TruncPoly p = eval_eps(n, v.order);
          if constexpr (std::is_same_v<S, TruncPoly>) {
            return p;
          } else if constexpr (std::is_same_v<S, Scalar>) {
            if (ctx.backend == BackendKind::TruncPoly) return Scalar(std::move(p));
          }
          throw Error(ErrorKind::BackendUnsupported, "the eps expansion needs the truncated-polynomial backend");
        } else if constexpr (std::is_same_v<V, QThenMu> || std::is_same_v<V, TInterp>) {
          const Rational exponent = (Rational(1) + v.mu) * Rational(n) - v.mu * Rational(n * n);
          // q != 1 here: q = 1 keeps eval_rational exact.
          S value = (traits::from_rational(Rational(1), ctx) - traits::rational_power(v.q, exponent, ctx)) /
                    (Rational(1) - v.q);
          if constexpr (std::is_same_v<V, TInterp>) {
            const Rational outer = (Rational(1) + v.mu) * q_number(v.q, n) - v.mu * q_number(v.q, n).pow(2);
            value = traits::from_rational(v.t * outer, ctx) + value * (Rational(1) - v.t);
          }
          return value;
        } else {
          throw Error(ErrorKind::DomainError, "unreachable structure-function branch");
        }
      },
      sf.variant());
}

}  // namespace defbose

#endif  // DEFBOSE_STRUCTFN_HPP
