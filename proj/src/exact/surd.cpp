#include "defbose/exact/surd.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "defbose/error.hpp"
#include "defbose/exact/decimal.hpp"

namespace defbose {

SurdRational::SurdRational(const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(1, c);
}

SurdRational SurdRational::sqrt_of(std::uint64_t n, const Rational& c) {
  if (n == 0 || c.is_zero()) return {};
  const RadicalForm f = radical_normalize(n);
  return SurdRational(std::vector<Term>{{f.radicand, c * Rational(static_cast<long>(f.square_root))}});
}

Rational SurdRational::rational_part() const { return coefficient(1); }

Rational SurdRational::coefficient(Radicand r) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), r, [](const Term& t, Radicand x) { return t.first < x; });
  return (it != terms_.end() && it->first == r) ? it->second : Rational();
}

namespace {

template <class Combine>
std::vector<SurdRational::Term> merge(std::span<const SurdRational::Term> a, std::span<const SurdRational::Term> b,
                                      Combine combine) {
  std::vector<SurdRational::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, combine(Rational(), b[j].second));
      ++j;
    } else {
      Rational c = combine(a[i].second, b[j].second);
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

Radicand checked_mul(Radicand a, Radicand b) {
  Radicand r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::DomainError, "radicand overflow");
  return r;
}

}  // namespace

SurdRational& SurdRational::operator+=(const SurdRational& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, [](const Rational& x, const Rational& y) { return x + y; });
  return *this;
}

SurdRational& SurdRational::operator-=(const SurdRational& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, [](const Rational& x, const Rational& y) { return x - y; });
  return *this;
}

SurdRational operator*(const SurdRational& a, const SurdRational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].first == 1) return b * a.terms_[0].second;
  if (b.terms_.size() == 1 && b.terms_[0].first == 1) return a * b.terms_[0].second;
  // sqrt(x) * sqrt(y) = g * sqrt((x/g)(y/g)) with g = gcd(x, y); the product
  // of two coprime square-free numbers is square-free.
  std::map<Radicand, Rational> acc;
  for (const auto& [ra, ca] : a.terms_) {
    for (const auto& [rb, cb] : b.terms_) {
      const Radicand g = std::gcd(ra, rb);
      const Radicand r = checked_mul(ra / g, rb / g);
      Rational c = ca * cb;
      if (g != 1) c *= Rational(static_cast<long>(g));
      auto [it, inserted] = acc.try_emplace(r, std::move(c));
      if (!inserted) it->second += c;
    }
  }
  std::vector<SurdRational::Term> out;
  out.reserve(acc.size());
  for (auto& [r, c] : acc) {
    if (!c.is_zero()) out.emplace_back(r, std::move(c));
  }
  return SurdRational(std::move(out));
}

SurdRational& SurdRational::operator*=(const SurdRational& o) { return *this = *this * o; }

SurdRational& SurdRational::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

SurdRational& SurdRational::operator/=(const Rational& c) {
  if (c.is_zero()) throw Error(ErrorKind::DivisionByZero, "surd divided by zero");
  for (auto& t : terms_) t.second /= c;
  return *this;
}

SurdRational operator-(SurdRational a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

SurdRational SurdRational::pow(unsigned e) const {
  SurdRational result(1);
  SurdRational base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::string SurdRational::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [r, c] : terms_) {
    if (first) {
      out += c.to_string();
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      out += c.abs().to_string();
    }
    if (r != 1) out += "*sqrt(" + std::to_string(r) + ")";
    first = false;
  }
  return out;
}

namespace {

// RAII holder for an mpfr_t used in interval refinement.
struct MpfrVar {
  explicit MpfrVar(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~MpfrVar() { mpfr_clear(v); }
  MpfrVar(const MpfrVar&) = delete;
  MpfrVar& operator=(const MpfrVar&) = delete;
  mpfr_t v;
};

// Encloses the value in [lo, hi] using directed rounding at `prec` bits.
void enclose(std::span<const SurdRational::Term> terms, mpfr_prec_t prec, MpfrVar& lo, MpfrVar& hi) {
  mpfr_set_zero(lo.v, 1);
  mpfr_set_zero(hi.v, 1);
  MpfrVar root_lo(prec), root_hi(prec), t_lo(prec), t_hi(prec);
  for (const auto& [r, c] : terms) {
    mpfr_sqrt_ui(root_lo.v, static_cast<unsigned long>(r), MPFR_RNDD);
    mpfr_sqrt_ui(root_hi.v, static_cast<unsigned long>(r), MPFR_RNDU);
    const mpz_srcptr num = c.mpq().get_num_mpz_t();
    const mpz_srcptr den = c.mpq().get_den_mpz_t();
    if (c.sign() > 0) {
      mpfr_mul_z(t_lo.v, root_lo.v, num, MPFR_RNDD);
      mpfr_mul_z(t_hi.v, root_hi.v, num, MPFR_RNDU);
    } else {
      mpfr_mul_z(t_lo.v, root_hi.v, num, MPFR_RNDD);
      mpfr_mul_z(t_hi.v, root_lo.v, num, MPFR_RNDU);
    }
    mpfr_div_z(t_lo.v, t_lo.v, den, MPFR_RNDD);
    mpfr_div_z(t_hi.v, t_hi.v, den, MPFR_RNDU);
    mpfr_add(lo.v, lo.v, t_lo.v, MPFR_RNDD);
    mpfr_add(hi.v, hi.v, t_hi.v, MPFR_RNDU);
  }
}

// Ziv loop: refine the enclosure until both ends render identically. A value
// with an irrational part never sits on a rounding tie, so this terminates.
template <class Render>
std::string render_irrational(std::span<const SurdRational::Term> terms, Render render) {
  for (mpfr_prec_t prec = 128;; prec *= 2) {
    MpfrVar lo(prec), hi(prec);
    enclose(terms, prec, lo, hi);
    std::string a = render(lo.v);
    if (a == render(hi.v)) return a;
  }
}

}  // namespace

int SurdRational::sign() const {
  if (is_rational()) return rational_part().sign();
  for (mpfr_prec_t prec = 128;; prec *= 2) {
    MpfrVar lo(prec), hi(prec);
    enclose(terms_, prec, lo, hi);
    if (mpfr_sgn(lo.v) > 0) return 1;
    if (mpfr_sgn(hi.v) < 0) return -1;
  }
}

std::string SurdRational::to_decimal(int digits) const {
  if (digits < 1) throw Error(ErrorKind::DomainError, "digits must be >= 1");
  if (is_rational()) return detail::format_fixed(rational_part(), digits);
  return render_irrational(terms_, [digits](mpfr_srcptr v) { return detail::format_fixed(v, digits); });
}

std::string SurdRational::to_scientific(int sig_digits) const {
  if (sig_digits < 1) throw Error(ErrorKind::DomainError, "digits must be >= 1");
  if (is_rational()) return detail::format_scientific(rational_part(), sig_digits);
  return render_irrational(terms_, [sig_digits](mpfr_srcptr v) { return detail::format_scientific(v, sig_digits); });
}

SurdRational half_power(std::uint64_t n, unsigned k) {
  if (n == 0) throw Error(ErrorKind::DomainError, "half_power requires n >= 1");
  if (k % 2 == 0) throw Error(ErrorKind::DomainError, "half_power requires odd k");
  // n^{-k/2} = sqrt(n) / n^{(k+1)/2}
  Integer denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(n), (k + 1) / 2);
  return SurdRational::sqrt_of(n, Rational(Integer(1), denom));
}

}  // namespace defbose
