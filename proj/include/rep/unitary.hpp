#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rep/compact.hpp"

namespace rep {

// min{k : sigma_{k+1} = 0} with the padded convention, in {0, ..., m}.
int a_sigma(const HighestWeight& sigma, const ParamContext& ctx);

enum class Verdict { UnitaryPrincipal, ComplementarySeries, IrreducibleNonUnitary, ReduciblePoint };

std::string verdict_name(Verdict v);

struct FactorAssessment {
  CompositionFactor factor;
  bool unitarizable = false;
  std::string reason;
};

struct ClassificationResult {
  PrincipalSeriesPoint point;
  Verdict verdict = Verdict::IrreducibleNonUnitary;
  std::vector<FactorAssessment> factors;  // nonempty exactly for ReduciblePoint
};

// Decides where (sigma, lambda) sits in the unitary dual. Requires n >= 3.
ClassificationResult classify(const PrincipalSeriesPoint& p);

std::pair<bool, std::string> factor_unitarizable(const CompositionFactor& f);

// One item of the unitary dual. Complementary series are reported as open
// intervals (0, upper) in lambda, never as samples.
struct DualItem {
  enum class Kind { PrincipalFamily, ComplementaryInterval, Sub, SubPlus, SubMinus, Quotient };
  Kind kind = Kind::PrincipalFamily;
  HighestWeight sigma;
  Rational upper;  // ComplementaryInterval only
  int i = 0;
  int j = 0;

  std::string str() const;
};

std::string dual_kind_name(DualItem::Kind k);

// All dual items with sigma_1 <= sigma1_bound and j <= j_bound, each
// equivalence class emitted once: discrete factors appear in their
// subrepresentation realization (the quotient realizations are recovered by
// equivalent_realizations), except the trivial representation which only
// exists as Quotient(0, 0, 0). Principal families for n even are listed with
// sigma_m >= 0 since (sigma, ilambda) and (sigma*, -ilambda) coincide.
std::vector<DualItem> enumerate_unitary_dual(const ParamContext& ctx, long long sigma1_bound,
                                             int j_bound);

// Known equivalences of a subrepresentation factor with other realizations:
//   Sub(sigma, i, j)          ~ Quotient(sigma+(j+1)e_{i+1}, i+1, sigma_{i+1}-|sigma_{i+2}|)
//                               for 0 <= i < m-1,
//   Sub(sigma, m-1, j), n=2m  ~ the full principal series at
//                               (sigma+sgn(sigma_m)(j+1)e_m, sigma_m) when sigma_m != 0,
//                               (sigma+-(j+1)e_m, 0) when sigma_m = 0 (both signs).
// Factors outside these hypotheses yield an empty list.
std::vector<CompositionFactor> equivalent_realizations(const CompositionFactor& f);

// The infinitesimal character as a tuple of rank(so(n+2, C)) rationals; a
// permutation of (sigma_1+rho-1, ..., sigma_r+rho-r, lambda). Throws for
// factor families where the closed form is not available (n even, i = 0, or a
// full irreducible point).
std::vector<Rational> infinitesimal_character(const CompositionFactor& f);

}  // namespace rep
