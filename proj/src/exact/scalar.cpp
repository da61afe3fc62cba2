#include "defbose/exact/scalar.hpp"

namespace defbose {

std::string_view to_string(BackendKind kind) noexcept {
  switch (kind) {
    case BackendKind::Rational: return "rational";
    case BackendKind::Surd: return "exact";
    case BackendKind::TruncPoly: return "truncated-polynomial";
    case BackendKind::Decimal: return "decimal";
  }
  return "unknown";
}

namespace {

[[noreturn]] void mixed(const Scalar& a, const Scalar& b) {
  throw Error(ErrorKind::MixedBackend, std::string(to_string(a.backend())) + " with " +
                                           std::string(to_string(b.backend())));
}

template <class Op>
Scalar::Value combine(const Scalar& a, const Scalar& b, Op op) {
  if (a.backend() != b.backend()) mixed(a, b);
  return std::visit(
      [&](const auto& x) -> Scalar::Value {
        using T = std::decay_t<decltype(x)>;
        return op(x, std::get<T>(b.value()));
      },
      a.value());
}

}  // namespace

bool Scalar::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  v_ = combine(*this, o, [](const auto& x, const auto& y) { return x + y; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  v_ = combine(*this, o, [](const auto& x, const auto& y) { return x - y; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  v_ = combine(*this, o, [](const auto& x, const auto& y) { return x * y; });
  return *this;
}

Scalar& Scalar::operator*=(const Rational& c) {
  std::visit([&](auto& x) { x *= c; }, v_);
  return *this;
}

Scalar& Scalar::operator/=(const Rational& c) {
  std::visit([&](auto& x) { x /= c; }, v_);
  return *this;
}

Scalar operator-(const Scalar& a) {
  return std::visit([](const auto& x) { return Scalar(-x); }, a.v_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.backend() != b.backend()) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return x == std::get<T>(b.v_);
      },
      a.v_);
}

std::string Scalar::to_string() const {
  return std::visit([](const auto& x) { return x.to_string(); }, v_);
}

namespace {

const SurdRational& bound_value(const TruncPoly& p) {
  if (!p.variables().empty()) {
    throw Error(ErrorKind::UnboundVariable, "substitute values for the deviation variables first");
  }
  static const SurdRational zero;
  auto it = p.terms().find(Exponents{});
  return it == p.terms().end() ? zero : it->second;
}

}  // namespace

std::string Scalar::to_decimal(int digits) const {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return detail::format_fixed(x, digits);
        } else if constexpr (std::is_same_v<T, TruncPoly>) {
          return bound_value(x).to_decimal(digits);
        } else {
          return x.to_decimal(digits);
        }
      },
      v_);
}

std::string Scalar::to_scientific(int sig_digits) const {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return detail::format_scientific(x, sig_digits);
        } else if constexpr (std::is_same_v<T, TruncPoly>) {
          return bound_value(x).to_scientific(sig_digits);
        } else {
          return x.to_scientific(sig_digits);
        }
      },
      v_);
}

Scalar scalar_traits<Scalar>::from_rational(const Rational& q, const context& ctx) {
  switch (ctx.backend) {
    case BackendKind::Rational: return q;
    case BackendKind::Surd: return SurdRational(q);
    case BackendKind::TruncPoly: return scalar_traits<TruncPoly>::from_rational(q, {ctx.variables, ctx.bounds});
    case BackendKind::Decimal: return Decimal(q, ctx.digits);
  }
  return q;
}

Scalar scalar_traits<Scalar>::half_power(std::uint64_t n, unsigned k, const context& ctx) {
  switch (ctx.backend) {
    case BackendKind::Rational: return scalar_traits<Rational>::half_power(n, k, {});
    case BackendKind::Surd: return defbose::half_power(n, k);
    case BackendKind::TruncPoly: return scalar_traits<TruncPoly>::half_power(n, k, {ctx.variables, ctx.bounds});
    case BackendKind::Decimal: return scalar_traits<Decimal>::half_power(n, k, {ctx.digits});
  }
  return {};
}

Scalar scalar_traits<Scalar>::rational_power(const Rational& b, const Rational& e, const context& ctx) {
  switch (ctx.backend) {
    case BackendKind::Rational: return scalar_traits<Rational>::rational_power(b, e, {});
    case BackendKind::Surd: return scalar_traits<SurdRational>::rational_power(b, e, {});
    case BackendKind::TruncPoly:
      return scalar_traits<TruncPoly>::rational_power(b, e, {ctx.variables, ctx.bounds});
    case BackendKind::Decimal: return scalar_traits<Decimal>::rational_power(b, e, {ctx.digits});
  }
  return {};
}

std::optional<Rational> scalar_traits<Scalar>::as_rational(const Scalar& s) {
  return std::visit(
      [](const auto& x) -> std::optional<Rational> {
        using T = std::decay_t<decltype(x)>;
        return scalar_traits<T>::as_rational(x);
      },
      s.value());
}

Scalar scalar_traits<Scalar>::divide(const Scalar& a, const Scalar& b) {
  if (a.backend() != b.backend()) {
    throw Error(ErrorKind::MixedBackend, std::string(to_string(a.backend())) + " with " +
                                             std::string(to_string(b.backend())));
  }
  return std::visit(
      [&](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        return scalar_traits<T>::divide(x, std::get<T>(b.value()));
      },
      a.value());
}

}  // namespace defbose
