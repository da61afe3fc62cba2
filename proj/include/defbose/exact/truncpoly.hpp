#ifndef DEFBOSE_EXACT_TRUNCPOLY_HPP
#define DEFBOSE_EXACT_TRUNCPOLY_HPP

#include <algorithm>
#include <array>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "defbose/error.hpp"
#include "defbose/exact/rational.hpp"
#include "defbose/exact/surd.hpp"

namespace defbose {

inline constexpr std::size_t kMaxTruncVars = 2;

using Exponents = std::array<int, kMaxTruncVars>;

// Truncated polynomial in at most two named formal deviations (e.g. eps, mu),
// with per-variable order bounds.
//
// A value with no variables is a plain constant and adopts the variables and
// bounds of whatever it is combined with. Two non-constant operands must agree
// on the variable list; their bounds combine to the elementwise minimum, so
// arithmetic never extends the retained orders.
template <class C>
class BasicTruncPoly {
 public:
  BasicTruncPoly() = default;
  BasicTruncPoly(const C& c) { set(Exponents{}, c); }  // NOLINT(google-explicit-constructor)
  BasicTruncPoly(int c) : BasicTruncPoly(C(c)) {}     // NOLINT(google-explicit-constructor)

  // The constant `c` living in the given frame.
  static BasicTruncPoly constant(const C& c, std::vector<std::string> vars, Exponents bounds) {
    BasicTruncPoly p(std::move(vars), bounds);
    p.set(Exponents{}, c);
    return p;
  }

  // The monomial `vars[index]` in the given frame (zero if its bound is 0).
  static BasicTruncPoly variable(std::size_t index, std::vector<std::string> vars, Exponents bounds) {
    BasicTruncPoly p(std::move(vars), bounds);
    Exponents e{};
    e[index] = 1;
    if (p.within(e)) p.set(e, C(1));
    return p;
  }

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const Exponents& bounds() const noexcept { return bounds_; }
  const std::map<Exponents, C>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
  }

  C coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C() : it->second;
  }

  // Stores c at exponent e (dropped if zero or outside the bounds).
  void set(const Exponents& e, C c) {
    if (c.is_zero() || !within(e)) {
      terms_.erase(e);
    } else {
      terms_.insert_or_assign(e, std::move(c));
    }
  }

  BasicTruncPoly& operator+=(const BasicTruncPoly& o) { return accumulate(o, false); }
  BasicTruncPoly& operator-=(const BasicTruncPoly& o) { return accumulate(o, true); }
  BasicTruncPoly& operator*=(const BasicTruncPoly& o) { return *this = *this * o; }
  BasicTruncPoly& operator*=(const Rational& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }
  BasicTruncPoly& operator/=(const Rational& c) {
    if (c.is_zero()) throw Error(ErrorKind::DivisionByZero, "truncated polynomial divided by zero");
    for (auto& [e, v] : terms_) v /= c;
    return *this;
  }

  friend BasicTruncPoly operator+(BasicTruncPoly a, const BasicTruncPoly& b) { return a += b; }
  friend BasicTruncPoly operator-(BasicTruncPoly a, const BasicTruncPoly& b) { return a -= b; }
  friend BasicTruncPoly operator*(BasicTruncPoly a, const Rational& c) { return a *= c; }
  friend BasicTruncPoly operator/(BasicTruncPoly a, const Rational& c) { return a /= c; }
  friend BasicTruncPoly operator-(BasicTruncPoly a) {
    for (auto& [e, v] : a.terms_) v = -v;
    return a;
  }

  friend BasicTruncPoly operator*(const BasicTruncPoly& a, const BasicTruncPoly& b) {
    BasicTruncPoly out = frame_of(a, b);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e{};
        for (std::size_t i = 0; i < kMaxTruncVars; ++i) e[i] = ea[i] + eb[i];
        if (!out.within(e)) continue;
        auto it = out.terms_.find(e);
        if (it == out.terms_.end()) {
          out.terms_.emplace(e, ca * cb);
        } else {
          it->second += ca * cb;
        }
      }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  }

  // Equality of values: variables and bounds must agree unless both sides
  // are constants.
  friend bool operator==(const BasicTruncPoly& a, const BasicTruncPoly& b) {
    if (a.terms_ != b.terms_) return false;
    if (a.vars_.empty() || b.vars_.empty()) return true;
    return a.vars_ == b.vars_ && a.bounds_ == b.bounds_;
  }

  // Substitutes every variable by a rational value. Throws UnboundVariable
  // if a variable has no value.
  C substitute(const std::map<std::string, Rational>& values) const {
    std::vector<Rational> point;
    for (const auto& v : vars_) {
      auto it = values.find(v);
      if (it == values.end()) throw Error(ErrorKind::UnboundVariable, "no value for '" + v + "'");
      point.push_back(it->second);
    }
    C out;
    for (const auto& [e, c] : terms_) {
      Rational w(1);
      for (std::size_t i = 0; i < point.size(); ++i) w *= point[i].pow(e[i]);
      out += c * w;
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      std::string coef = c.to_string();
      const bool compound = coef.find(' ') != std::string::npos;
      std::string term;
      if (mono.empty()) {
        term = compound && !first ? "(" + coef + ")" : coef;
      } else if (coef == "1") {
        term = mono;
      } else if (coef == "-1") {
        term = "-" + mono;
      } else {
        term = (compound ? "(" + coef + ")" : coef) + "*" + mono;
      }
      if (first) {
        out = term;
      } else if (term.front() == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
      first = false;
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicTruncPoly& p) { return os << p.to_string(); }

 private:
  BasicTruncPoly(std::vector<std::string> vars, Exponents bounds) : vars_(std::move(vars)), bounds_(bounds) {
    if (vars_.size() > kMaxTruncVars) throw Error(ErrorKind::DomainError, "at most two truncation variables");
    for (std::size_t i = vars_.size(); i < kMaxTruncVars; ++i) bounds_[i] = 0;
  }

  bool within(const Exponents& e) const {
    for (std::size_t i = 0; i < kMaxTruncVars; ++i) {
      if (e[i] > bounds_[i]) return false;
    }
    return true;
  }

  static BasicTruncPoly frame_of(const BasicTruncPoly& a, const BasicTruncPoly& b) {
    if (a.vars_.empty()) return BasicTruncPoly(b.vars_, b.bounds_);
    if (b.vars_.empty()) return BasicTruncPoly(a.vars_, a.bounds_);
    if (a.vars_ != b.vars_) throw Error(ErrorKind::MixedBackend, "truncated polynomials over different variables");
    Exponents bounds{};
    for (std::size_t i = 0; i < kMaxTruncVars; ++i) bounds[i] = std::min(a.bounds_[i], b.bounds_[i]);
    return BasicTruncPoly(a.vars_, bounds);
  }

  BasicTruncPoly& accumulate(const BasicTruncPoly& o, bool subtract) {
    BasicTruncPoly frame = frame_of(*this, o);
    vars_ = std::move(frame.vars_);
    bounds_ = frame.bounds_;
    std::erase_if(terms_, [this](const auto& kv) { return !within(kv.first); });
    for (const auto& [e, c] : o.terms_) {
      if (!within(e)) continue;
      auto it = terms_.find(e);
      if (it == terms_.end()) {
        terms_.emplace(e, subtract ? -c : c);
      } else {
        if (subtract) {
          it->second -= c;
        } else {
          it->second += c;
        }
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    return *this;
  }

  std::vector<std::string> vars_;
  Exponents bounds_{};
  std::map<Exponents, C> terms_;
};

using TruncPoly = BasicTruncPoly<SurdRational>;

}  // namespace defbose

#endif  // DEFBOSE_EXACT_TRUNCPOLY_HPP
