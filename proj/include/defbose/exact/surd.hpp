#ifndef DEFBOSE_EXACT_SURD_HPP
#define DEFBOSE_EXACT_SURD_HPP

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "defbose/exact/radical.hpp"
#include "defbose/exact/rational.hpp"

namespace defbose {

// A finite sum  sum_r c_r * sqrt(r)  with rational c_r and square-free r.
//
// Terms are kept sorted by radicand with no zero coefficients; radicand 1
// holds the rational part, and the empty sum is zero. The set is closed under
// addition, multiplication and division by a nonzero rational, which is all
// the thermodynamic series need.
class SurdRational {
 public:
  using Term = std::pair<Radicand, Rational>;

  SurdRational() = default;
  SurdRational(int n) : SurdRational(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  SurdRational(long n) : SurdRational(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  SurdRational(const Rational& c);                     // NOLINT(google-explicit-constructor)

  // c * sqrt(n) for any n >= 1; the radicand is normalized.
  static SurdRational sqrt_of(std::uint64_t n, const Rational& c = Rational(1));

  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1); }
  Rational rational_part() const;
  // Coefficient of sqrt(r); zero if absent.
  Rational coefficient(Radicand r) const;

  SurdRational& operator+=(const SurdRational& o);
  SurdRational& operator-=(const SurdRational& o);
  SurdRational& operator*=(const SurdRational& o);
  SurdRational& operator*=(const Rational& c);
  SurdRational& operator/=(const Rational& c);

  friend SurdRational operator+(SurdRational a, const SurdRational& b) { return a += b; }
  friend SurdRational operator-(SurdRational a, const SurdRational& b) { return a -= b; }
  friend SurdRational operator*(const SurdRational& a, const SurdRational& b);
  friend SurdRational operator*(SurdRational a, const Rational& c) { return a *= c; }
  friend SurdRational operator*(const Rational& c, SurdRational a) { return a *= c; }
  friend SurdRational operator/(SurdRational a, const Rational& c) { return a /= c; }
  friend SurdRational operator-(SurdRational a);

  friend bool operator==(const SurdRational& a, const SurdRational& b) = default;

  SurdRational pow(unsigned e) const;

  // Sign of the real value (exact; decided by interval refinement).
  int sign() const;

  // Rendering grammar: terms by ascending radicand, "c" or "c*sqrt(r)",
  // c as p/q, joined with " + " / " - ". Zero renders as "0".
  std::string to_string() const;

  // Correctly rounded fixed-point rendering with `digits` fractional digits.
  std::string to_decimal(int digits) const;
  // Correctly rounded scientific rendering with `sig_digits` significant digits.
  std::string to_scientific(int sig_digits) const;

  friend std::ostream& operator<<(std::ostream& os, const SurdRational& s) { return os << s.to_string(); }

 private:
  explicit SurdRational(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}

  std::vector<Term> terms_;
};

// n^{-k/2} for odd k, exactly: sqrt(n) / n^{(k+1)/2}.
SurdRational half_power(std::uint64_t n, unsigned k);

}  // namespace defbose

#endif  // DEFBOSE_EXACT_SURD_HPP
