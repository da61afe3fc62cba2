#include "defbose/perturb.hpp"

#include <stdexcept>
#include <string>

#include "defbose/error.hpp"

namespace defbose {

Rational HamiltonianSplit::evaluate(const Rational& n, const Rational& eps) const {
  Rational acc;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) acc = acc * eps + (*it)(n);
  return acc;
}

Polynomial direct_split_term(int i) {
  const Polynomial c = Polynomial::binomial(i + 1);
  return (c.shifted(Rational(1)) + c) / Rational(2);
}

HamiltonianSplit hamiltonian_split(int order) {
  if (order < 0) throw Error(ErrorKind::DomainError, "split order must be >= 0");
  HamiltonianSplit split{order, {}};
  for (int i = 0; i <= order; ++i) {
    const Polynomial linear(std::vector<Rational>{Rational(1 - i), Rational(2)});
    Polynomial term = linear * Polynomial::falling_factorial(i) / Rational(Integer(2 * factorial(i + 1)));
    if (term != direct_split_term(i)) {
      throw std::logic_error("Hamiltonian split term " + std::to_string(i) + " disagrees with the direct expansion");
    }
    split.terms.push_back(std::move(term));
  }
  return split;
}

SplitPoly two_param_split(int order_eps, int order_mu) {
  if (order_eps < 0 || order_mu < 0) throw Error(ErrorKind::DomainError, "split orders must be >= 0");
  const std::vector<std::string> vars{"eps", "mu"};
  const Exponents bounds{order_eps, order_mu};

  // [N]_q and [N+1]_q as eps-polynomials with polynomial-in-N coefficients.
  SplitPoly basic = SplitPoly::constant(Polynomial(), vars, bounds);
  SplitPoly basic_next = basic;
  for (int i = 0; i <= order_eps; ++i) {
    const Polynomial c = Polynomial::binomial(i + 1);
    basic.set(Exponents{i, 0}, c);
    basic_next.set(Exponents{i, 0}, c.shifted(Rational(1)));
  }
  const SplitPoly one = SplitPoly::constant(Polynomial(1), vars, bounds);
  const SplitPoly mu = SplitPoly::variable(1, vars, bounds);
  auto phi = [&](const SplitPoly& b) { return (one + mu) * b - mu * b * b; };
  return (phi(basic_next) + phi(basic)) / Rational(2);
}

SplitPoly interaction_part(const SplitPoly& split) {
  SplitPoly out = split;
  out.set(Exponents{}, Polynomial());
  return out;
}

Rational evaluate_split(const SplitPoly& split, const Rational& n, const Rational& eps, const Rational& mu) {
  return split.substitute({{"eps", eps}, {"mu", mu}})(n);
}

}  // namespace defbose
