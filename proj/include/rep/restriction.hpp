#pragma once

#include <vector>

#include "rep/fourier.hpp"

namespace rep {

// One irreducible summand L^2-Ind_{M_{e1} Nbar}^{Pbar}(tau (x) psi) of a
// restriction to the opposite parabolic; psi is the fixed unitary character
// x -> exp(-i<x, e1>) of Nbar. The sums are multiplicity-free.
struct PbarConstituent {
  HighestWeight tau;
  int mult = 1;
};

struct WhittakerSpace {
  std::vector<HighestWeight> taus;
  Int total_dim = 0;  // sum of weyl_dim over taus
};

// Decomposition of a unitarizable factor restricted to Pbar:
//   unitary principal / complementary: all tau <= sigma;
//   Sub(a, j): tau_a > j (all tau when a = 0, via tau_0 = +infty);
//   SubPlus/Minus: +-tau_a > j;
//   Quotient(a, 0), 0 < a < m: tau_a = 0; the trivial representation (a = 0)
//   has no infinite-dimensional constituents and yields the empty list.
// Throws for non-unitarizable factors.
std::vector<PbarConstituent> branch_to_pbar(const CompositionFactor& f);

// Same for a full principal series point; throws if the point is reducible or
// not unitary (real lambda outside the complementary range).
std::vector<PbarConstituent> branch_to_pbar(const PrincipalSeriesPoint& p);

// The space of Whittaker functionals (with respect to psi) as the tau-indexed
// decomposition of the dual of V_sigma:
//   irreducible I_{sigma,lambda}: all tau <= sigma;
//   Sub(i, j): tau_i > |sigma_{i+1}|+j; SubPlus/Minus: +-tau_i > |sigma_{i+1}|+j;
//   Quotient(i, j): |tau_i| <= |sigma_{i+1}|+j; with tau_0 = +infty, so the i = 0
//   subrepresentations keep every functional and the finite-dimensional
//   quotients keep none. Defined for all factors, unitarizable or not.
WhittakerSpace whittaker_space(const CompositionFactor& f);

// Whittaker space of an irreducible principal series; throws at reducibility
// points (select a factor instead).
WhittakerSpace whittaker_space(const PrincipalSeriesPoint& p);

// True iff the factor tau sets at the reducibility point lambda partition
// {tau <= sigma}. Requires a point of the families with 1 <= i <= m-1.
bool pbar_partition_check(const HighestWeight& sigma, const ParamContext& ctx,
                          const Rational& lambda);

}  // namespace rep
