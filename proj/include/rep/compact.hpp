#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rep/weights.hpp"

namespace rep {

// Spectral parameter: a real rational lambda or a pure-imaginary i*value.
struct LambdaSpec {
  bool imaginary = false;
  Rational value;

  static LambdaSpec real(Rational v) { return {false, std::move(v)}; }
  static LambdaSpec imag(Rational v) { return {true, std::move(v)}; }

  bool is_real_zero() const { return value.is_zero(); }

  // "1/2" or "i3/2"; "i0" normalizes to "0".
  std::string str() const;
  static LambdaSpec parse(const std::string& s);

  friend bool operator==(const LambdaSpec& a, const LambdaSpec& b) {
    if (a.value.is_zero() && b.value.is_zero()) return true;
    return a.imaginary == b.imaginary && a.value == b.value;
  }
};

// A principal series representation I_{sigma,lambda} of SO0(n+1,1).
struct PrincipalSeriesPoint {
  ParamContext ctx;
  HighestWeight sigma;
  LambdaSpec lambda;

  PrincipalSeriesPoint(ParamContext c, HighestWeight s, LambdaSpec l);
};

enum class FactorTag { FullIrreducible, Sub, SubPlus, SubMinus, Quotient };

std::string factor_tag_name(FactorTag t);
FactorTag factor_tag_from_name(const std::string& s);

// One composition factor of I_{sigma,lambda}. For negative real lambda the
// factor is classified through the dual point (sigma*, -lambda); `dualized`
// records that reduction and sigma_eff/lambda_eff hold the parameters the
// membership predicates refer to (lambda_eff >= 0).
struct CompositionFactor {
  PrincipalSeriesPoint base;
  FactorTag tag = FactorTag::FullIrreducible;
  int i = 0;
  int j = 0;
  bool dualized = false;
  HighestWeight sigma_eff;
  Rational lambda_eff;
};

// The index a = min{k : sigma_{k+1} = 0} (with padding) plus the truncated
// listing of positive reducibility points.
struct ReducibilityInfo {
  int a = 0;
  std::vector<Rational> positive_points;  // ascending, truncated at rho-a+j_max
  std::vector<Rational> excluded;         // {rho-k+|sigma_k| : k=1..a}
  bool imaginary_axis_irreducible = true;
};

// c_k^+ = rho+1-k+alpha_k+lambda and c_k^- = rho-k+alpha_k-lambda.
Rational c_plus(const Rational& lambda, const HighestWeight& alpha, int k,
                const ParamContext& ctx);
Rational c_minus(const Rational& lambda, const HighestWeight& alpha, int k,
                 const ParamContext& ctx);

// Intertwining eigenvalue reduced by the common factor Gamma(rho+sigma_1+lambda),
// as the exact rational
//   r(alpha) = poch(rho+sigma_1-l, a1-s1)/poch(rho+sigma_1+l, a1-s1)
//              * prod_{k>=2} poch(rho+1-k+s_k-l, |a_k|-s_k) poch(rho+1-k+|a_k|+l, s_{k-1}-|a_k|).
// Requires sigma <= alpha, real lambda and an existing intertwiner (n odd, or
// n even with sigma_m = 0). Throws std::domain_error on an uncancelled pole.
Rational reduced_compact_eigenvalue(const PrincipalSeriesPoint& p, const HighestWeight& alpha);

// Numerator/denominator of r(alpha) before dividing; lets callers verify
// identities by cross-multiplication even where r itself has a pole.
std::pair<Rational, Rational> reduced_compact_eigenvalue_parts(const PrincipalSeriesPoint& p,
                                                               const HighestWeight& alpha);

// Sign of the removed factor Gamma(rho+sigma_1+lambda); lets callers recover
// the sign of the unreduced eigenvalue. Throws at poles.
int removed_gamma_factor_sign(const PrincipalSeriesPoint& p);

// Checks c^+(alpha,k) r(alpha+e_k) = c^-(alpha+e_k,k)... precisely
// (rho+1-k+alpha_k+lambda) r(alpha+e_k) = (rho+1-k+alpha_k-lambda) r(alpha),
// exactly, by cross-multiplication. Both alpha and alpha+e_k must be K-types.
bool check_compact_recurrence(const PrincipalSeriesPoint& p, const HighestWeight& alpha, int k);

ReducibilityInfo reducibility_points(const HighestWeight& sigma, const ParamContext& ctx,
                                     int j_max = 6);

// True iff the given real lambda >= 0 is a point of reducibility for sigma.
bool is_reducibility_point(const HighestWeight& sigma, const ParamContext& ctx,
                           const Rational& lambda);

// The M-dual weight sigma*: flips the sign of the last entry for n even.
HighestWeight sigma_star(const HighestWeight& sigma);

std::vector<CompositionFactor> composition_factors(const PrincipalSeriesPoint& p);

bool factor_contains_ktype(const CompositionFactor& f, const HighestWeight& alpha);

// True iff r(alpha) = 0 exactly on the union of the subrepresentation K-type
// sets, over all K-types with alpha_1 <= bound.
bool kernel_matches_factor(const PrincipalSeriesPoint& p, long long bound = 6);

}  // namespace rep
