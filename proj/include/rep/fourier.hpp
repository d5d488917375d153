#pragma once

#include <utility>
#include <vector>

#include "rep/unitary.hpp"

namespace rep {

// The diagonal multiplier of the intertwining operator after Fourier
// transform: ||xi||^power times the scalar coefficients[tau] on each
// tau-isotypic piece, with the normalizing gamma factor fixed to 1.
struct MultiplierDescription {
  Rational power;  // -2 lambda
  std::vector<std::pair<HighestWeight, Rational>> coefficients;  // keyed by tau <= sigma, lex
};

// Coefficients of an invariant inner product on a unitarizable factor:
// integral of ||xi||^weight_power sum_tau a(tau) |f_tau(xi)|^2.
struct InnerProductTable {
  CompositionFactor factor;
  Rational weight_power;  // -2 Re lambda
  std::vector<std::pair<HighestWeight, Rational>> coefficients;  // factor's tau set only
};

// The multiplier scalar on the tau-isotypic component,
//   prod_{i=1}^{m-1} poch(n/2-i+sigma_{i+1}-lambda, |tau_i|-sigma_{i+1})
//                  * poch(n/2-i+|tau_i|+lambda,  sigma_i-|tau_i|),
// sigma padded per ParamContext. Requires tau <= sigma, real lambda, and a
// self-dual sigma (n odd, or n even with sigma_m = 0).
Rational a_F(const PrincipalSeriesPoint& p, const HighestWeight& tau);

MultiplierDescription multiplier(const PrincipalSeriesPoint& p);

// Verifies (2l+1+s(2 tau_i+n-2i-1)) a_F(tau+s e_i) = (-2l+1+s(2 tau_i+n-2i-1)) a_F(tau)
// exactly, for s = +-1 and 1 <= i <= m-1. Both tau and tau+s e_i must be <= sigma.
bool check_F_recursion(const PrincipalSeriesPoint& p, const HighestWeight& tau, int i, int sign);

// The tau <= sigma supporting a composition factor in the Fourier picture:
//   Sub(i,j): tau_i > |sigma_{i+1}|+j; SubPlus/Minus: +-tau_i > j;
//   Quotient: the complement; all for 1 <= i <= m-1. The i = 0 family lives on
//   finite-dimensional pieces invisible away from xi = 0 and throws.
std::vector<HighestWeight> f_picture_factor_tau_set(const CompositionFactor& f);

// The invariant inner product of a unitarizable factor:
//   unitary principal: a(tau) = 1, power 0;
//   complementary: a(tau) = a_F(sigma, lambda, tau), power -2 lambda;
//   subrepresentation at lambda = rho-a+j: a(tau) = 1/a_F(sigma, -lambda, tau);
//   quotient at lambda = rho-a: a(tau) = a_F(sigma, lambda, tau).
// Throws for non-unitarizable factors and for factors with no Fourier-picture
// realization (the i = 0 family).
InnerProductTable inner_product_table(const CompositionFactor& f);

// True iff [a_F(tau) > 0 for every tau <= sigma] holds exactly when
// |lambda| < rho - a_sigma; an independent consistency check of the two
// unitarity characterizations. Requires real lambda and self-dual sigma.
bool positivity_unitarity_crosscheck(const PrincipalSeriesPoint& p);

}  // namespace rep
