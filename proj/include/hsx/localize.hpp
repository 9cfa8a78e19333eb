#pragma once

// Independent intersection-theory oracle: equivariant restrictions by
// Billey's subword formula and Atiyah-Bott fixed-point integration.
//
// billey_restriction(X, w, v, pt) evaluates the restriction at the fixed
// point vP of the codimension-l(w) equivariant Schubert class indexed by w
// (the class supported on {v >= w}; its nonequivariant limit is
// sigma(dual w)).  integrate takes factors in the sigma(w) = [X^P(w)]
// convention used everywhere else and converts internally.
//
// Every integral is evaluated at two independent regular points and compared;
// a full symbolic evaluation over the polynomial ring in the simple roots is
// available as a third check for small ranks.

#include <vector>

#include "hsx/poly.hpp"
#include "hsx/space.hpp"

namespace hsx {

struct EvalPoint {
  std::vector<Rat> primary;    // alpha_i -> i-th prime
  std::vector<Rat> secondary;  // seeded random positive rationals
  unsigned long long seed = 0;
};

EvalPoint make_eval_point(const RootSystem& rs, unsigned long long seed);

Rat billey_restriction(const Space& X, int w, int v, const std::vector<Rat>& point);

Rat euler_denominator(const Space& X, int v, const std::vector<Rat>& point);

// Integral of the product of sigma(factor_i); returns 0 when the codimension
// sum differs from dim (degree reasons), without summing over fixed points.
Int integrate(const Space& X, const std::vector<int>& factors, const EvalPoint& pt);

// Symbolic counterpart over Q[alpha_1..alpha_rank]; intended for rank <= 3.
// Returns true when the fixed-point sum is exactly the constant `expected`.
bool integral_matches_symbolic(const Space& X, const std::vector<int>& factors, const Int& expected);

}  // namespace hsx
