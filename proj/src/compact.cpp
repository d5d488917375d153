#include "rep/compact.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>

namespace rep {

std::string LambdaSpec::str() const {
  if (imaginary && !value.is_zero()) return "i" + value.str();
  return value.str();
}

LambdaSpec LambdaSpec::parse(const std::string& s) {
  if (!s.empty() && s[0] == 'i') return imag(Rational::parse(s.substr(1)));
  return real(Rational::parse(s));
}

PrincipalSeriesPoint::PrincipalSeriesPoint(ParamContext c, HighestWeight s, LambdaSpec l)
    : ctx(c), sigma(std::move(s)), lambda(std::move(l)) {
  if (sigma.group_order != ctx.n)
    throw std::invalid_argument("PrincipalSeriesPoint: sigma must be an SO(n) weight");
  sigma.check_valid();
}

std::string factor_tag_name(FactorTag t) {
  switch (t) {
    case FactorTag::FullIrreducible: return "FullIrreducible";
    case FactorTag::Sub: return "Sub";
    case FactorTag::SubPlus: return "SubPlus";
    case FactorTag::SubMinus: return "SubMinus";
    case FactorTag::Quotient: return "Quotient";
  }
  throw std::logic_error("unknown factor tag");
}

FactorTag factor_tag_from_name(const std::string& s) {
  if (s == "FullIrreducible") return FactorTag::FullIrreducible;
  if (s == "Sub") return FactorTag::Sub;
  if (s == "SubPlus") return FactorTag::SubPlus;
  if (s == "SubMinus") return FactorTag::SubMinus;
  if (s == "Quotient") return FactorTag::Quotient;
  throw std::invalid_argument("unknown factor tag '" + s + "'");
}

Rational c_plus(const Rational& lambda, const HighestWeight& alpha, int k,
                const ParamContext& ctx) {
  if (k < 1 || k > ctx.m) throw std::out_of_range("c_plus: index k out of range");
  return ctx.rho + Rational(1 - k) + Rational(alpha.entry(k)) + lambda;
}

Rational c_minus(const Rational& lambda, const HighestWeight& alpha, int k,
                 const ParamContext& ctx) {
  if (k < 1 || k > ctx.m) throw std::out_of_range("c_minus: index k out of range");
  return ctx.rho - Rational(k) + Rational(alpha.entry(k)) - lambda;
}

namespace {

bool intertwiner_exists(const HighestWeight& sigma, const ParamContext& ctx) {
  if (ctx.n % 2 == 1) return true;
  return ctx.sigma_padded(sigma, ctx.m) == 0;
}

void require_eigenvalue_preconditions(const PrincipalSeriesPoint& p, const HighestWeight& alpha) {
  if (p.lambda.imaginary && !p.lambda.value.is_zero())
    throw std::invalid_argument("reduced_compact_eigenvalue: lambda must be real");
  if (!intertwiner_exists(p.sigma, p.ctx))
    throw std::invalid_argument(
        "reduced_compact_eigenvalue: no intertwining operator (n even with sigma_m != 0)");
  if (!k_contains_sigma(alpha, p.sigma, p.ctx))
    throw std::invalid_argument("reduced_compact_eigenvalue: alpha does not contain sigma");
}

}  // namespace

std::pair<Rational, Rational> reduced_compact_eigenvalue_parts(const PrincipalSeriesPoint& p,
                                                               const HighestWeight& alpha) {
  require_eigenvalue_preconditions(p, alpha);
  const ParamContext& ctx = p.ctx;
  const Rational& l = p.lambda.value;
  long long s1 = ctx.sigma_padded(p.sigma, 1);
  long long a1 = alpha.entry(1);
  Rational num = pochhammer(ctx.rho + Rational(s1) - l, a1 - s1);
  Rational den = pochhammer(ctx.rho + Rational(s1) + l, a1 - s1);
  for (int k = 2; k <= ctx.m; ++k) {
    long long sk = ctx.sigma_padded(p.sigma, k);
    long long sk1 = ctx.sigma_padded(p.sigma, k - 1);
    long long ak = std::llabs(alpha.entry(k));
    num *= pochhammer(ctx.rho + Rational(1 - k) + Rational(sk) - l, ak - sk);
    num *= pochhammer(ctx.rho + Rational(1 - k) + Rational(ak) + l, sk1 - ak);
  }
  return {num, den};
}

Rational reduced_compact_eigenvalue(const PrincipalSeriesPoint& p, const HighestWeight& alpha) {
  auto [num, den] = reduced_compact_eigenvalue_parts(p, alpha);
  if (den.is_zero())
    throw std::domain_error("reduced_compact_eigenvalue: pole (denominator Pochhammer zero)");
  return num / den;
}

int removed_gamma_factor_sign(const PrincipalSeriesPoint& p) {
  if (p.lambda.imaginary && !p.lambda.value.is_zero())
    throw std::invalid_argument("removed_gamma_factor_sign: lambda must be real");
  return gamma_sign(p.ctx.rho + Rational(p.ctx.sigma_padded(p.sigma, 1)) + p.lambda.value);
}

bool check_compact_recurrence(const PrincipalSeriesPoint& p, const HighestWeight& alpha, int k) {
  if (k < 1 || k > p.ctx.m) throw std::out_of_range("check_compact_recurrence: k out of range");
  HighestWeight shifted = alpha;
  shifted.entries[k - 1] += 1;
  if (!k_contains_sigma(alpha, p.sigma, p.ctx) || !shifted.is_valid() ||
      !k_contains_sigma(shifted, p.sigma, p.ctx))
    throw std::invalid_argument("check_compact_recurrence: alpha and alpha+e_k must be K-types");
  auto [pn, pd] = reduced_compact_eigenvalue_parts(p, alpha);
  auto [qn, qd] = reduced_compact_eigenvalue_parts(p, shifted);
  const Rational& l = p.lambda.value;
  Rational base = p.ctx.rho + Rational(1 - k) + Rational(alpha.entry(k));
  // (base + lambda) r(alpha+e_k) = (base - lambda) r(alpha), cross-multiplied
  return (base + l) * qn * pd == (base - l) * pn * qd;
}

HighestWeight sigma_star(const HighestWeight& sigma) {
  HighestWeight s = sigma;
  if (sigma.group_order % 2 == 0 && !s.entries.empty()) s.entries.back() = -s.entries.back();
  return s;
}

namespace {

struct FactorPoint {
  int i;
  int j;
};

// For real lambda >= 0 returns the unique (i, j) family membership, if any.
std::optional<FactorPoint> find_factor_point(const HighestWeight& sigma, const ParamContext& ctx,
                                             const Rational& lambda) {
  long long s1 = std::llabs(ctx.sigma_padded(sigma, 1));
  Rational j0 = lambda - ctx.rho - Rational(s1);
  if (j0 >= Rational(0) && j0.is_integer())
    return FactorPoint{0, static_cast<int>(j0.num().convert_to<long long>())};
  for (int i = 1; i <= ctx.m - 1; ++i) {
    long long si = std::llabs(ctx.sigma_padded(sigma, i));
    long long si1 = std::llabs(ctx.sigma_padded(sigma, i + 1));
    Rational jr = lambda - (ctx.rho - Rational(i)) - Rational(si1);
    if (!jr.is_integer() || jr < Rational(0)) continue;
    long long j = jr.num().convert_to<long long>();
    if (j < si - si1) return FactorPoint{i, static_cast<int>(j)};
  }
  return std::nullopt;
}

}  // namespace

bool is_reducibility_point(const HighestWeight& sigma, const ParamContext& ctx,
                           const Rational& lambda) {
  Rational l = lambda.abs();
  return find_factor_point(sigma, ctx, l).has_value();
}

ReducibilityInfo reducibility_points(const HighestWeight& sigma, const ParamContext& ctx,
                                     int j_max) {
  sigma.check_valid();
  ReducibilityInfo info;
  int a = 0;
  while (std::llabs(ctx.sigma_padded(sigma, a + 1)) != 0) ++a;
  info.a = a;
  for (int k = 1; k <= a; ++k)
    info.excluded.push_back(ctx.rho - Rational(k) +
                            Rational(std::llabs(ctx.sigma_padded(sigma, k))));
  Rational base = ctx.rho - Rational(a);
  for (int t = 0; t <= j_max; ++t) {
    Rational l = base + Rational(t);
    if (is_reducibility_point(sigma, ctx, l)) info.positive_points.push_back(l);
  }
  return info;
}

std::vector<CompositionFactor> composition_factors(const PrincipalSeriesPoint& p) {
  std::vector<CompositionFactor> out;
  auto make = [&](FactorTag tag, int i, int j, bool dualized, const HighestWeight& se,
                  const Rational& le) {
    CompositionFactor f{p, tag, i, j, dualized, se, le};
    out.push_back(std::move(f));
  };
  bool imaginary_nonzero = p.lambda.imaginary && !p.lambda.value.is_zero();
  bool dualized = !imaginary_nonzero && p.lambda.value.sign() < 0;
  HighestWeight se = dualized ? sigma_star(p.sigma) : p.sigma;
  Rational le = p.lambda.value.abs();
  if (imaginary_nonzero) {
    make(FactorTag::FullIrreducible, 0, 0, false, p.sigma, Rational(0));
    return out;
  }
  auto fp = find_factor_point(se, p.ctx, le);
  if (!fp) {
    make(FactorTag::FullIrreducible, 0, 0, dualized, se, le);
    return out;
  }
  bool middle = (p.ctx.n % 2 == 1) && (2 * fp->i == p.ctx.n - 1);
  if (middle) {
    make(FactorTag::SubPlus, fp->i, fp->j, dualized, se, le);
    make(FactorTag::SubMinus, fp->i, fp->j, dualized, se, le);
  } else {
    make(FactorTag::Sub, fp->i, fp->j, dualized, se, le);
  }
  make(FactorTag::Quotient, fp->i, fp->j, dualized, se, le);
  return out;
}

bool factor_contains_ktype(const CompositionFactor& f, const HighestWeight& alpha) {
  const ParamContext& ctx = f.base.ctx;
  if (!k_contains_sigma(alpha, f.sigma_eff, ctx))
    throw std::invalid_argument("factor_contains_ktype: alpha does not contain sigma");
  switch (f.tag) {
    case FactorTag::FullIrreducible:
      return true;
    case FactorTag::Sub: {
      long long si1 = std::llabs(ctx.sigma_padded(f.sigma_eff, f.i + 1));
      return alpha.entry(f.i + 1) > si1 + f.j;
    }
    case FactorTag::SubPlus:
      return alpha.entry(f.i + 1) > f.j;
    case FactorTag::SubMinus:
      return -alpha.entry(f.i + 1) > f.j;
    case FactorTag::Quotient: {
      if (2 * f.i == ctx.n - 1) return std::llabs(alpha.entry(f.i + 1)) <= f.j;
      long long si1 = std::llabs(ctx.sigma_padded(f.sigma_eff, f.i + 1));
      return alpha.entry(f.i + 1) <= si1 + f.j;
    }
  }
  throw std::logic_error("unknown factor tag");
}

bool kernel_matches_factor(const PrincipalSeriesPoint& p, long long bound) {
  auto factors = composition_factors(p);
  if (factors.size() < 2)
    throw std::invalid_argument("kernel_matches_factor: lambda is not a reducibility point");
  const CompositionFactor& any = factors.front();
  PrincipalSeriesPoint eff(p.ctx, any.sigma_eff, LambdaSpec::real(any.lambda_eff));
  for (const auto& alpha : enumerate_ktypes(any.sigma_eff, p.ctx, bound)) {
    bool in_sub = false;
    for (const auto& f : factors)
      if (f.tag != FactorTag::Quotient && factor_contains_ktype(f, alpha)) in_sub = true;
    bool zero = reduced_compact_eigenvalue(eff, alpha).is_zero();
    if (zero != in_sub) return false;
  }
  return true;
}

}  // namespace rep
