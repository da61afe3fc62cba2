#include "defbose/exact/decimal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "defbose/error.hpp"

namespace defbose {

mpfr_prec_t bits_for_digits(int digits) {
  if (digits < 1) throw Error(ErrorKind::DomainError, "digit budget must be >= 1");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 32;
}

Decimal::Decimal(int digits) : digits_(digits) {
  mpfr_init2(v_, bits_for_digits(digits));
  mpfr_set_zero(v_, 1);
}

Decimal::Decimal(const Rational& value, int digits) : Decimal(digits) {
  mpfr_set_q(v_, value.mpq().get_mpq_t(), MPFR_RNDN);
}

Decimal::Decimal(long value, int digits) : Decimal(digits) { mpfr_set_si(v_, value, MPFR_RNDN); }

Decimal::Decimal(const Decimal& o) : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Decimal::Decimal(Decimal&& o) noexcept : Decimal(o.digits_) { mpfr_swap(v_, o.v_); }

Decimal& Decimal::operator=(const Decimal& o) {
  if (this != &o) {
    reset_precision(o.digits_);
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Decimal& Decimal::operator=(Decimal&& o) noexcept {
  mpfr_swap(v_, o.v_);
  std::swap(digits_, o.digits_);
  return *this;
}

Decimal::~Decimal() { mpfr_clear(v_); }

void Decimal::reset_precision(int digits) {
  if (digits == digits_) return;
  digits_ = digits;
  mpfr_set_prec(v_, bits_for_digits(digits));
}

Decimal Decimal::sqrt_of(std::uint64_t n, int digits) {
  Decimal r(digits);
  mpfr_sqrt_ui(r.v_, static_cast<unsigned long>(n), MPFR_RNDN);
  return r;
}

Decimal Decimal::rational_power(const Rational& base, const Rational& exponent, int digits) {
  if (exponent.is_integer() && mpz_fits_slong_p(exponent.num().get_mpz_t())) {
    const long e = exponent.num().get_si();
    if (base.is_zero() && e < 0) throw Error(ErrorKind::DivisionByZero, "zero to a negative power");
    return Decimal(base.pow(e), digits);
  }
  if (base.sign() < 0) throw Error(ErrorKind::DomainError, "negative base to a non-integer power");
  if (base.is_zero()) {
    if (exponent.sign() < 0) throw Error(ErrorKind::DivisionByZero, "zero to a negative power");
    return Decimal(digits);
  }
  Decimal b(base, digits + 10);
  Decimal e(exponent, digits + 10);
  Decimal r(digits);
  mpfr_pow(r.v_, b.v_, e.v_, MPFR_RNDN);
  return r;
}

Decimal Decimal::abs() const {
  Decimal r(*this);
  mpfr_abs(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Decimal& Decimal::operator+=(const Decimal& o) {
  if (o.digits_ > digits_) mpfr_prec_round(v_, bits_for_digits(digits_ = o.digits_), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Decimal& Decimal::operator-=(const Decimal& o) {
  if (o.digits_ > digits_) mpfr_prec_round(v_, bits_for_digits(digits_ = o.digits_), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Decimal& Decimal::operator*=(const Decimal& o) {
  if (o.digits_ > digits_) mpfr_prec_round(v_, bits_for_digits(digits_ = o.digits_), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Decimal& Decimal::operator/=(const Decimal& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "decimal division by zero");
  if (o.digits_ > digits_) mpfr_prec_round(v_, bits_for_digits(digits_ = o.digits_), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Decimal& Decimal::operator*=(const Rational& c) {
  mpfr_mul_q(v_, v_, c.mpq().get_mpq_t(), MPFR_RNDN);
  return *this;
}

Decimal& Decimal::operator/=(const Rational& c) {
  if (c.is_zero()) throw Error(ErrorKind::DivisionByZero, "decimal division by zero rational");
  mpfr_div_q(v_, v_, c.mpq().get_mpq_t(), MPFR_RNDN);
  return *this;
}

Decimal operator-(Decimal a) {
  mpfr_neg(a.v_, a.v_, MPFR_RNDN);
  return a;
}

std::string Decimal::to_decimal(int frac_digits) const { return detail::format_fixed(v_, frac_digits); }

std::string Decimal::to_scientific(int sig_digits) const { return detail::format_scientific(v_, sig_digits); }

namespace detail {

namespace {

std::string mpfr_format(const char* fmt, int prec, mpfr_srcptr v) {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, fmt, prec, v) < 0) throw Error(ErrorKind::DomainError, "mpfr formatting failed");
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

// "-0.000" and "-0.00e+00" become unsigned.
std::string strip_negative_zero(std::string s) {
  if (s.empty() || s.front() != '-') return s;
  const auto mant_end = s.find('e');
  const bool all_zero = std::all_of(s.begin() + 1, mant_end == std::string::npos ? s.end() : s.begin() + mant_end,
                                    [](char c) { return c == '0' || c == '.'; });
  if (all_zero) s.erase(0, 1);
  return s;
}

std::string exponent_suffix(long e) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
  return buf;
}

// round(|v| * 10^shift), halves away from zero.
Integer round_scaled(const mpq_class& a, long shift) {
  Integer p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  mpq_class scaled = shift >= 0 ? mpq_class(a * p10) : mpq_class(a / p10);
  scaled.canonicalize();
  Integer twice_num = 2 * scaled.get_num() + scaled.get_den();
  Integer den2 = 2 * scaled.get_den();
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), twice_num.get_mpz_t(), den2.get_mpz_t());
  return q;
}

}  // namespace

std::string format_fixed(mpfr_srcptr v, int frac_digits) {
  return strip_negative_zero(mpfr_format("%.*RNf", frac_digits, v));
}

std::string format_scientific(mpfr_srcptr v, int sig_digits) {
  if (sig_digits < 1) throw Error(ErrorKind::DomainError, "need at least one significant digit");
  return strip_negative_zero(mpfr_format("%.*RNe", sig_digits - 1, v));
}

std::string format_fixed(const Rational& v, int frac_digits) {
  if (frac_digits < 0) throw Error(ErrorKind::DomainError, "negative digit count");
  const mpq_class a = ::abs(v.mpq());
  const Integer m = round_scaled(a, frac_digits);
  std::string digits = m.get_str();
  if (static_cast<int>(digits.size()) <= frac_digits) digits.insert(0, frac_digits + 1 - digits.size(), '0');
  std::string out;
  if (v.sign() < 0 && m != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - frac_digits);
  if (frac_digits > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - frac_digits);
  }
  return out;
}

std::string format_scientific(const Rational& v, int sig_digits) {
  if (sig_digits < 1) throw Error(ErrorKind::DomainError, "need at least one significant digit");
  if (v.is_zero()) {
    std::string out = "0";
    if (sig_digits > 1) out += "." + std::string(sig_digits - 1, '0');
    return out + "e+00";
  }
  const mpq_class a = ::abs(v.mpq());
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  auto pow10 = [](long k) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return k >= 0 ? mpq_class(p) : mpq_class(1, p);
  };
  while (a < pow10(e)) --e;
  while (a >= pow10(e + 1)) ++e;
  Integer m = round_scaled(a, sig_digits - 1 - e);
  Integer limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 10, static_cast<unsigned long>(sig_digits));
  if (m >= limit) {
    m /= 10;
    ++e;
  }
  const std::string digits = m.get_str();
  std::string out = v.sign() < 0 ? "-" : "";
  out += digits.substr(0, 1);
  if (sig_digits > 1) out += "." + digits.substr(1);
  return out + exponent_suffix(e);
}

}  // namespace detail

}  // namespace defbose
