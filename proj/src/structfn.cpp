#include "defbose/structfn.hpp"

#include <vector>

namespace defbose {

StructureFunction::StructureFunction(Variant v) : v_(std::move(v)) {
  if (const auto* e = std::get_if<QBasicEps>(&v_); e != nullptr && e->order < 0) {
    throw Error(ErrorKind::DomainError, "eps order must be >= 0");
  }
}

namespace {

[[noreturn]] void bad_descriptor(std::string_view d, const std::string& why) {
  throw Error(ErrorKind::ParseError, "structure function '" + std::string(d) + "': " + why);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

std::pair<Rational, Rational> two_rationals(std::string_view descriptor, std::string_view body) {
  const auto parts = split(body, ',');
  if (parts.size() != 2) bad_descriptor(descriptor, "expected two comma-separated rationals");
  return {Rational::parse(parts[0]), Rational::parse(parts[1])};
}

}  // namespace

StructureFunction StructureFunction::parse(std::string_view d) {
  if (d.find(';') != std::string_view::npos) {
    std::optional<Rational> t, mu, q;
    for (std::string_view item : split(d, ';')) {
      const auto colon = item.find(':');
      if (colon == std::string_view::npos) bad_descriptor(d, "expected key:value");
      const std::string_view key = item.substr(0, colon);
      const Rational value = Rational::parse(item.substr(colon + 1));
      std::optional<Rational>* slot = key == "t" ? &t : key == "mu" ? &mu : key == "q" ? &q : nullptr;
      if (slot == nullptr) bad_descriptor(d, "unknown key '" + std::string(key) + "'");
      if (slot->has_value()) bad_descriptor(d, "duplicate key '" + std::string(key) + "'");
      *slot = value;
    }
    if (!t || !mu || !q) bad_descriptor(d, "the t-family needs t, mu and q");
    return TInterp{*t, *mu, *q};
  }
  const auto colon = d.find(':');
  if (colon == std::string_view::npos) bad_descriptor(d, "expected kind:parameters");
  const std::string_view kind = d.substr(0, colon);
  const std::string_view body = d.substr(colon + 1);
  if (kind == "q") return QBasic{Rational::parse(body)};
  if (kind == "mu") return QuadraticMu{Rational::parse(body)};
  if (kind == "mu-q") {
    auto [mu, q] = two_rationals(d, body);
    return MuThenQ{mu, q};
  }
  if (kind == "q-mu") {
    auto [q, mu] = two_rationals(d, body);
    return QThenMu{q, mu};
  }
  if (kind == "q-eps") {
    constexpr std::string_view prefix = "order=";
    if (body.substr(0, prefix.size()) != prefix) bad_descriptor(d, "expected order=<int>");
    const Rational order = Rational::parse(body.substr(prefix.size()));
    if (!order.is_integer() || order.sign() < 0 || order > Rational(64)) {
      bad_descriptor(d, "order must be an integer in 0..64");
    }
    return QBasicEps{static_cast<int>(order.num().get_si())};
  }
  bad_descriptor(d, "unknown kind '" + std::string(kind) + "'");
}

std::string StructureFunction::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, QBasic>) {
          return "q:" + v.q.to_string();
        } else if constexpr (std::is_same_v<V, QuadraticMu>) {
          return "mu:" + v.mu.to_string();
        } else if constexpr (std::is_same_v<V, MuThenQ>) {
          return "mu-q:" + v.mu.to_string() + "," + v.q.to_string();
        } else if constexpr (std::is_same_v<V, QThenMu>) {
          return "q-mu:" + v.q.to_string() + "," + v.mu.to_string();
        } else if constexpr (std::is_same_v<V, TInterp>) {
          return "t:" + v.t.to_string() + ";mu:" + v.mu.to_string() + ";q:" + v.q.to_string();
        } else {
          return "q-eps:order=" + std::to_string(v.order);
        }
      },
      v_);
}

std::optional<Rational> StructureFunction::mu() const {
  return std::visit(
      [](const auto& v) -> std::optional<Rational> {
        if constexpr (requires { v.mu; }) {
          return v.mu;
        } else {
          return std::nullopt;
        }
      },
      v_);
}

std::optional<long> StructureFunction::mu_reciprocal_integer() const {
  const auto m = mu();
  if (!m || m->sign() <= 0 || m->num() != 1 || !mpz_fits_slong_p(m->den().get_mpz_t())) return std::nullopt;
  return m->den().get_si();
}

namespace {

Rational quadratic(const Rational& mu, const Rational& x) { return (Rational(1) + mu) * x - mu * x * x; }

}  // namespace

bool StructureFunction::needs_real_powers(int max_n) const {
  for (long n = 0; n <= max_n; ++n) {
    if (!eval_rational(*this, n) && !is_eps_expansion()) return true;
  }
  return false;
}

Rational q_number(const Rational& q, long e) {
  if (e < 0) {
    // (1 - q^e)/(1 - q) = -(q^e + ... + q^{-1})
    const Rational inv = q.reciprocal();
    Rational acc;
    for (long i = 0; i < -e; ++i) acc = acc * inv + Rational(1);
    return -(acc * inv);
  }
  Rational acc;
  for (long i = 0; i < e; ++i) acc = acc * q + Rational(1);
  return acc;
}

std::optional<Rational> eval_rational(const StructureFunction& sf, long n) {
  const Rational nr(n);
  return std::visit(
      [&](const auto& v) -> std::optional<Rational> {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, QBasic>) {
          return q_number(v.q, n);
        } else if constexpr (std::is_same_v<V, QuadraticMu>) {
          return quadratic(v.mu, nr);
        } else if constexpr (std::is_same_v<V, MuThenQ>) {
          return quadratic(v.mu, q_number(v.q, n));
        } else if constexpr (std::is_same_v<V, QThenMu> || std::is_same_v<V, TInterp>) {
          const Rational exponent = quadratic(v.mu, nr);
          std::optional<Rational> inner;
          if (v.q.is_one()) {
            inner = exponent;
          } else if (exponent.is_integer() && mpz_fits_slong_p(exponent.num().get_mpz_t())) {
            inner = q_number(v.q, exponent.num().get_si());
          }
          if constexpr (std::is_same_v<V, QThenMu>) {
            return inner;
          } else {
            const Rational outer = quadratic(v.mu, q_number(v.q, n));
            if (v.t.is_one()) return outer;
            if (!inner) return std::nullopt;
            return v.t * outer + (Rational(1) - v.t) * *inner;
          }
        } else {
          return std::nullopt;
        }
      },
      sf.variant());
}

TruncPoly eval_eps(long n, int order) {
  if (order < 0) throw Error(ErrorKind::DomainError, "eps order must be >= 0");
  TruncPoly p = TruncPoly::constant(SurdRational(), {"eps"}, Exponents{order, 0});
  for (long i = 0; i <= order && i <= n - 1; ++i) {
    p.set(Exponents{static_cast<int>(i), 0}, SurdRational(Rational(binomial(n, i + 1))));
  }
  return p;
}

Integer stirling_first(int m, int k) {
  if (m < 0 || k < 0) return 0;
  // row[k] holds s(j, k) for the current j
  std::vector<Integer> row(m + 1, 0);
  row[0] = 1;
  for (int j = 0; j < m; ++j) {
    for (int kk = j + 1; kk >= 1; --kk) row[kk] = row[kk - 1] - Integer(j) * row[kk];
    row[0] = 0;
  }
  return k <= m ? row[k] : Integer(0);
}

std::map<std::pair<int, int>, Rational> monomial_expansion(int order_eps, int order_n) {
  if (order_eps < 0 || order_n < 0) throw Error(ErrorKind::DomainError, "orders must be >= 0");
  std::map<std::pair<int, int>, Rational> table;
  for (int i = 0; i <= order_eps; ++i) {
    const Rational scale(Integer(1), factorial(i + 1));
    for (int k = 1; k <= i + 1 && k <= order_n; ++k) {
      const Integer s = stirling_first(i + 1, k);
      if (s != 0) table.emplace(std::pair{k, i}, scale * Rational(s));
    }
  }
  return table;
}

}  // namespace defbose
