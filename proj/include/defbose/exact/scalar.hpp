#ifndef DEFBOSE_EXACT_SCALAR_HPP
#define DEFBOSE_EXACT_SCALAR_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "defbose/error.hpp"
#include "defbose/exact/decimal.hpp"
#include "defbose/exact/rational.hpp"
#include "defbose/exact/surd.hpp"
#include "defbose/exact/truncpoly.hpp"

namespace defbose {

enum class BackendKind { Rational, Surd, TruncPoly, Decimal };

std::string_view to_string(BackendKind kind) noexcept;

// Per-scalar-type hooks used by the generic series and thermodynamics code.
//
//   context                        construction parameters (digit budget, variables)
//   from_rational(q, ctx)          embed a rational constant
//   half_power(n, k, ctx)          n^{-k/2}, k odd
//   rational_power(b, e, ctx)      b^e for rational b, e
//   as_rational(s)                 the value if it is a plain rational
//   divide(a, b)                   a / b where b is a unit of the ring
template <class S>
struct scalar_traits;

namespace detail {

inline long integral_exponent(const Rational& e, std::string_view backend) {
  if (!e.is_integer() || !mpz_fits_slong_p(e.num().get_mpz_t())) {
    throw Error(ErrorKind::BackendUnsupported,
                "rational power with exponent " + e.to_string() + " on the " + std::string(backend) + " backend");
  }
  return e.num().get_si();
}

}  // namespace detail

template <>
struct scalar_traits<Rational> {
  struct context {};
  static constexpr BackendKind kind = BackendKind::Rational;

  static Rational from_rational(const Rational& q, const context&) { return q; }
  static Rational half_power(std::uint64_t n, unsigned k, const context&) {
    const SurdRational s = defbose::half_power(n, k);
    if (!s.is_rational()) throw Error(ErrorKind::BackendUnsupported, "irrational half power on the rational backend");
    return s.rational_part();
  }
  static Rational rational_power(const Rational& b, const Rational& e, const context&) {
    return b.pow(detail::integral_exponent(e, "rational"));
  }
  static std::optional<Rational> as_rational(const Rational& s) { return s; }
  static Rational divide(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct scalar_traits<SurdRational> {
  struct context {};
  static constexpr BackendKind kind = BackendKind::Surd;

  static SurdRational from_rational(const Rational& q, const context&) { return SurdRational(q); }
  static SurdRational half_power(std::uint64_t n, unsigned k, const context&) { return defbose::half_power(n, k); }
  static SurdRational rational_power(const Rational& b, const Rational& e, const context&) {
    return SurdRational(b.pow(detail::integral_exponent(e, "exact")));
  }
  static std::optional<Rational> as_rational(const SurdRational& s) {
    if (!s.is_rational()) return std::nullopt;
    return s.rational_part();
  }
  static SurdRational divide(const SurdRational& a, const SurdRational& b) {
    auto r = as_rational(b);
    if (!r) throw Error(ErrorKind::BackendUnsupported, "division by an irrational surd");
    return a / *r;
  }
};

template <>
struct scalar_traits<TruncPoly> {
  struct context {
    std::vector<std::string> variables{"eps"};
    Exponents bounds{};
  };
  static constexpr BackendKind kind = BackendKind::TruncPoly;

  static TruncPoly from_rational(const Rational& q, const context& ctx) {
    return TruncPoly::constant(SurdRational(q), ctx.variables, ctx.bounds);
  }
  static TruncPoly half_power(std::uint64_t n, unsigned k, const context& ctx) {
    return TruncPoly::constant(defbose::half_power(n, k), ctx.variables, ctx.bounds);
  }
  static TruncPoly rational_power(const Rational& b, const Rational& e, const context& ctx) {
    return from_rational(b.pow(detail::integral_exponent(e, "truncated-polynomial")), ctx);
  }
  static std::optional<Rational> as_rational(const TruncPoly& s) {
    if (!s.is_constant()) return std::nullopt;
    return scalar_traits<SurdRational>::as_rational(s.coefficient(Exponents{}));
  }
  static TruncPoly divide(const TruncPoly& a, const TruncPoly& b) {
    auto r = as_rational(b);
    if (!r) throw Error(ErrorKind::BackendUnsupported, "division by a non-constant truncated polynomial");
    return a / *r;
  }
};

template <>
struct scalar_traits<Decimal> {
  struct context {
    int digits = kDefaultDecimalDigits;
  };
  static constexpr BackendKind kind = BackendKind::Decimal;

  static Decimal from_rational(const Rational& q, const context& ctx) { return Decimal(q, ctx.digits); }
  static Decimal half_power(std::uint64_t n, unsigned k, const context& ctx) {
    // sqrt(n) / n^{(k+1)/2}
    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(n), (k + 1) / 2);
    return Decimal::sqrt_of(n, ctx.digits) / Rational(denom);
  }
  static Decimal rational_power(const Rational& b, const Rational& e, const context& ctx) {
    return Decimal::rational_power(b, e, ctx.digits);
  }
  static std::optional<Rational> as_rational(const Decimal&) { return std::nullopt; }
  static Decimal divide(const Decimal& a, const Decimal& b) { return a / b; }
};

// Backend-tagged scalar. All arithmetic requires both operands to use the
// same backend; there is no implicit coercion.
class Scalar {
 public:
  using Value = std::variant<Rational, SurdRational, TruncPoly, Decimal>;

  Scalar() = default;
  Scalar(Rational v) : v_(std::move(v)) {}      // NOLINT(google-explicit-constructor)
  Scalar(SurdRational v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(TruncPoly v) : v_(std::move(v)) {}     // NOLINT(google-explicit-constructor)
  Scalar(Decimal v) : v_(std::move(v)) {}       // NOLINT(google-explicit-constructor)

  BackendKind backend() const noexcept { return static_cast<BackendKind>(v_.index()); }
  const Value& value() const noexcept { return v_; }

  template <class T>
  const T& get() const {
    if (const T* p = std::get_if<T>(&v_)) return *p;
    throw Error(ErrorKind::MixedBackend, "scalar holds the " + std::string(defbose::to_string(backend())) + " backend");
  }

  bool is_zero() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(const Rational& c);
  Scalar& operator/=(const Rational& c);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator*(Scalar a, const Rational& c) { return a *= c; }
  friend Scalar operator/(Scalar a, const Rational& c) { return a /= c; }
  friend Scalar operator-(const Scalar& a);

  // Same backend and equal value; Decimal compares stored binary values.
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Exact rendering grammar for exact backends, scientific at the digit
  // budget for the decimal backend.
  std::string to_string() const;
  // Fixed-point, `digits` fractional digits, correctly rounded. Throws
  // UnboundVariable for a truncated polynomial that still has variables.
  std::string to_decimal(int digits) const;
  std::string to_scientific(int sig_digits) const;

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  Value v_;
};

template <>
struct scalar_traits<Scalar> {
  struct context {
    BackendKind backend = BackendKind::Surd;
    int digits = kDefaultDecimalDigits;
    std::vector<std::string> variables{"eps"};
    Exponents bounds{};
  };
  static constexpr BackendKind kind = BackendKind::Surd;

  static Scalar from_rational(const Rational& q, const context& ctx);
  static Scalar half_power(std::uint64_t n, unsigned k, const context& ctx);
  static Scalar rational_power(const Rational& b, const Rational& e, const context& ctx);
  static std::optional<Rational> as_rational(const Scalar& s);
  static Scalar divide(const Scalar& a, const Scalar& b);
};

}  // namespace defbose

#endif  // DEFBOSE_EXACT_SCALAR_HPP
