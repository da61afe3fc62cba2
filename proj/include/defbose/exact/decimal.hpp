#ifndef DEFBOSE_EXACT_DECIMAL_HPP
#define DEFBOSE_EXACT_DECIMAL_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include <mpfr.h>

#include "defbose/exact/rational.hpp"

namespace defbose {

inline constexpr int kDefaultDecimalDigits = 50;

// Arbitrary-precision binary float with a decimal digit budget.
//
// The working precision is the digit budget plus guard bits. Results of a
// binary operation carry the larger budget of the two operands.
class Decimal {
 public:
  explicit Decimal(int digits = kDefaultDecimalDigits);
  Decimal(const Rational& value, int digits);
  Decimal(long value, int digits);
  Decimal(const Decimal& o);
  Decimal(Decimal&& o) noexcept;
  Decimal& operator=(const Decimal& o);
  Decimal& operator=(Decimal&& o) noexcept;
  ~Decimal();

  int digits() const noexcept { return digits_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

  static Decimal sqrt_of(std::uint64_t n, int digits);
  // base^exponent for base > 0 (or exponent integral).
  static Decimal rational_power(const Rational& base, const Rational& exponent, int digits);

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  Decimal abs() const;

  Decimal& operator+=(const Decimal& o);
  Decimal& operator-=(const Decimal& o);
  Decimal& operator*=(const Decimal& o);
  Decimal& operator/=(const Decimal& o);
  Decimal& operator*=(const Rational& c);
  Decimal& operator/=(const Rational& c);

  friend Decimal operator+(Decimal a, const Decimal& b) { return a += b; }
  friend Decimal operator-(Decimal a, const Decimal& b) { return a -= b; }
  friend Decimal operator*(Decimal a, const Decimal& b) { return a *= b; }
  friend Decimal operator/(Decimal a, const Decimal& b) { return a /= b; }
  friend Decimal operator*(Decimal a, const Rational& c) { return a *= c; }
  friend Decimal operator/(Decimal a, const Rational& c) { return a /= c; }
  friend Decimal operator-(Decimal a);

  // Exact comparison of the stored binary values.
  friend bool operator==(const Decimal& a, const Decimal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const Decimal& a, const Decimal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  std::string to_decimal(int frac_digits) const;
  std::string to_scientific(int sig_digits) const;
  // Scientific rendering at the full digit budget.
  std::string to_string() const { return to_scientific(digits_); }

  friend std::ostream& operator<<(std::ostream& os, const Decimal& d) { return os << d.to_string(); }

 private:
  void reset_precision(int digits);

  mpfr_t v_;
  int digits_;
};

mpfr_prec_t bits_for_digits(int digits);

namespace detail {

// printf-style renderings of an mpfr value, with "-0.000" normalized to "0.000".
std::string format_fixed(mpfr_srcptr v, int frac_digits);
std::string format_scientific(mpfr_srcptr v, int sig_digits);

// Exact renderings of a rational (ties rounded half away from zero), matching
// the layout of the two functions above.
std::string format_fixed(const Rational& v, int frac_digits);
std::string format_scientific(const Rational& v, int sig_digits);

}  // namespace detail

}  // namespace defbose

#endif  // DEFBOSE_EXACT_DECIMAL_HPP
