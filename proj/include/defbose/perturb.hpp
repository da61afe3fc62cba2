#ifndef DEFBOSE_PERTURB_HPP
#define DEFBOSE_PERTURB_HPP

#include <vector>

#include "defbose/exact/polynomial.hpp"
#include "defbose/exact/rational.hpp"
#include "defbose/exact/truncpoly.hpp"

namespace defbose {

// Single-mode Hamiltonian (1/2)([N+1]_q + [N]_q), omega = 1, expanded in
// eps = q - 1. terms[i] is the eps^i coefficient as a polynomial in the
// number operator N; terms[0] is the free part N + 1/2.
struct HamiltonianSplit {
  int order;
  std::vector<Polynomial> terms;

  // Sum_i eps^i terms[i](n).
  Rational evaluate(const Rational& n, const Rational& eps) const;
};

// terms[i] = (2N + 1 - i) / (2 (i+1)!) * N (N-1) ... (N-i+1).
// Checked against the direct expansion before it is returned.
HamiltonianSplit hamiltonian_split(int order);

// eps^i coefficient of (1/2)([N+1]_q + [N]_q) built from binomials:
// (C(N+1, i+1) + C(N, i+1)) / 2.
Polynomial direct_split_term(int i);

using SplitPoly = BasicTruncPoly<Polynomial>;

// (1/2)(phi(N+1) + phi(N)) for phi = (1 + mu)[N]_q - mu([N]_q)^2, as a
// truncated polynomial in (eps, mu) whose coefficients are polynomials in N.
// The (0, 0) coefficient is the free part; everything else is the
// interaction part.
SplitPoly two_param_split(int order_eps, int order_mu);

// The split without its (0, 0) coefficient.
SplitPoly interaction_part(const SplitPoly& split);

// Value of a two-parameter split at integer N and rational (eps, mu).
Rational evaluate_split(const SplitPoly& split, const Rational& n, const Rational& eps, const Rational& mu);

}  // namespace defbose

#endif  // DEFBOSE_PERTURB_HPP
