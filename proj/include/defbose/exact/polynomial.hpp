#ifndef DEFBOSE_EXACT_POLYNOMIAL_HPP
#define DEFBOSE_EXACT_POLYNOMIAL_HPP

#include <ostream>
#include <string>
#include <vector>

#include "defbose/exact/rational.hpp"

namespace defbose {

// Dense univariate polynomial with rational coefficients; no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& c);                  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial monomial(int degree, const Rational& c = Rational(1));
  // x (x-1) ... (x-m+1)
  static Polynomial falling_factorial(int m);
  // x (x-1) ... (x-m+1) / m!, i.e. binomial(x, m) as a polynomial in x.
  static Polynomial binomial(int m);

  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  Rational coefficient(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : Rational(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }

  Rational operator()(const Rational& x) const;
  // p(x + shift)
  Polynomial shifted(const Rational& shift) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Rational& c);
  Polynomial& operator/=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator/(Polynomial a, const Rational& c) { return a /= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Descending powers, e.g. "1/2*N^2 + N + 1/2".
  std::string to_string(const std::string& var = "N") const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace defbose

#endif  // DEFBOSE_EXACT_POLYNOMIAL_HPP
