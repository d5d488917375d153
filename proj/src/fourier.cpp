#include "rep/fourier.hpp"

#include <cstdlib>
#include <stdexcept>

namespace rep {

namespace {

void require_F_preconditions(const PrincipalSeriesPoint& p) {
  if (p.lambda.imaginary && !p.lambda.value.is_zero())
    throw std::invalid_argument("a_F: lambda must be real");
  if (p.ctx.n % 2 == 0 && p.ctx.sigma_padded(p.sigma, p.ctx.m) != 0)
    throw std::invalid_argument("a_F: sigma must be self-dual (sigma_m = 0 for n even)");
}

}  // namespace

Rational a_F(const PrincipalSeriesPoint& p, const HighestWeight& tau) {
  require_F_preconditions(p);
  const ParamContext& ctx = p.ctx;
  if (!sigma_contains_tau(p.sigma, tau, ctx))
    throw std::invalid_argument("a_F: tau is not contained in sigma");
  const Rational& l = p.lambda.value;
  Rational half_n = ctx.rho;  // n/2
  Rational prod(1);
  for (int i = 1; i <= ctx.m - 1; ++i) {
    long long si = ctx.sigma_padded(p.sigma, i);
    long long si1 = ctx.sigma_padded(p.sigma, i + 1);
    long long ti = std::llabs(tau.entry(i));
    prod *= pochhammer(half_n - Rational(i) + Rational(si1) - l, ti - si1);
    prod *= pochhammer(half_n - Rational(i) + Rational(ti) + l, si - ti);
  }
  return prod;
}

MultiplierDescription multiplier(const PrincipalSeriesPoint& p) {
  MultiplierDescription d;
  d.power = Rational(-2) * p.lambda.value;
  for (const auto& tau : enumerate_tau(p.sigma, p.ctx)) d.coefficients.push_back({tau, a_F(p, tau)});
  return d;
}

bool check_F_recursion(const PrincipalSeriesPoint& p, const HighestWeight& tau, int i, int sign) {
  if (i < 1 || i > p.ctx.m - 1) throw std::out_of_range("check_F_recursion: index out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("check_F_recursion: sign must be +-1");
  HighestWeight shifted = tau;
  shifted.entries[i - 1] += sign;
  if (!sigma_contains_tau(p.sigma, tau, p.ctx) || !shifted.is_valid() ||
      !sigma_contains_tau(p.sigma, shifted, p.ctx))
    throw std::invalid_argument("check_F_recursion: tau and tau+-e_i must be contained in sigma");
  const Rational& l = p.lambda.value;
  // 2(tau_i + (n-2i-1)/2), signed entry
  Rational offset = Rational(2 * tau.entry(i)) + Rational(p.ctx.n - 2 * i - 1);
  Rational cp = Rational(2) * l + Rational(1) + Rational(sign) * offset;
  Rational cm = Rational(-2) * l + Rational(1) + Rational(sign) * offset;
  return cp * a_F(p, shifted) == cm * a_F(p, tau);
}

std::vector<HighestWeight> f_picture_factor_tau_set(const CompositionFactor& f) {
  const ParamContext& ctx = f.base.ctx;
  if (f.tag == FactorTag::FullIrreducible || f.i == 0)
    throw std::invalid_argument(
        "f_picture_factor_tau_set: factor is not F-picture-realizable at this lambda");
  long long si1 = std::llabs(ctx.sigma_padded(f.sigma_eff, f.i + 1));
  bool middle = 2 * f.i == ctx.n - 1;
  auto in_sub_union = [&](const HighestWeight& tau) {
    long long ti = tau.entry(f.i);
    switch (f.tag) {
      case FactorTag::Sub: return ti > si1 + f.j;
      case FactorTag::SubPlus: return ti > static_cast<long long>(f.j);
      case FactorTag::SubMinus: return -ti > static_cast<long long>(f.j);
      case FactorTag::Quotient:
        return middle ? std::llabs(ti) > f.j : ti > si1 + f.j;
      default: throw std::logic_error("unreachable");
    }
  };
  std::vector<HighestWeight> out;
  for (const auto& tau : enumerate_tau(f.sigma_eff, ctx)) {
    bool in = in_sub_union(tau);
    if (f.tag == FactorTag::Quotient ? !in : in) out.push_back(tau);
  }
  return out;
}

InnerProductTable inner_product_table(const CompositionFactor& f) {
  auto [ok, why] = factor_unitarizable(f);
  if (!ok) throw std::invalid_argument("inner_product_table: factor not unitarizable: " + why);
  const ParamContext& ctx = f.base.ctx;
  InnerProductTable t{f, Rational(0), {}};
  if (f.tag == FactorTag::FullIrreducible) {
    if (f.base.lambda.imaginary || f.lambda_eff.is_zero()) {
      for (const auto& tau : enumerate_tau(f.base.sigma, ctx))
        t.coefficients.push_back({tau, Rational(1)});
      return t;
    }
    // complementary series
    t.weight_power = Rational(-2) * f.base.lambda.value;
    for (const auto& tau : enumerate_tau(f.base.sigma, ctx))
      t.coefficients.push_back({tau, a_F(f.base, tau)});
    return t;
  }
  PrincipalSeriesPoint eff(ctx, f.sigma_eff, LambdaSpec::real(f.lambda_eff));
  t.weight_power = Rational(-2) * f.lambda_eff;
  auto taus = f_picture_factor_tau_set(f);  // throws for the i = 0 family
  if (f.tag == FactorTag::Quotient) {
    for (const auto& tau : taus) t.coefficients.push_back({tau, a_F(eff, tau)});
  } else {
    PrincipalSeriesPoint neg(ctx, f.sigma_eff, LambdaSpec::real(-f.lambda_eff));
    for (const auto& tau : taus)
      t.coefficients.push_back({tau, Rational(1) / a_F(neg, tau)});
  }
  return t;
}

bool positivity_unitarity_crosscheck(const PrincipalSeriesPoint& p) {
  require_F_preconditions(p);
  bool all_positive = true;
  for (const auto& tau : enumerate_tau(p.sigma, p.ctx))
    if (!(a_F(p, tau) > Rational(0))) all_positive = false;
  int a = a_sigma(p.sigma, p.ctx);
  bool in_range = p.lambda.value.abs() < p.ctx.rho - Rational(a);
  return all_positive == in_range;
}

}  // namespace rep
