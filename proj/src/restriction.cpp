#include "rep/restriction.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

namespace rep {

namespace {

std::vector<PbarConstituent> all_constituents(const HighestWeight& sigma,
                                              const ParamContext& ctx) {
  std::vector<PbarConstituent> out;
  for (const auto& tau : enumerate_tau(sigma, ctx)) out.push_back({tau, 1});
  return out;
}

}  // namespace

std::vector<PbarConstituent> branch_to_pbar(const CompositionFactor& f) {
  auto [ok, why] = factor_unitarizable(f);
  if (!ok) throw std::invalid_argument("branch_to_pbar: factor not unitarizable: " + why);
  const ParamContext& ctx = f.base.ctx;
  if (f.tag == FactorTag::FullIrreducible) return all_constituents(f.base.sigma, ctx);
  if (f.i == 0) {
    // tau_0 = +infty: the subrepresentation keeps everything, the trivial
    // representation has no infinite-dimensional constituents
    if (f.tag == FactorTag::Sub) return all_constituents(f.sigma_eff, ctx);
    return {};
  }
  std::vector<PbarConstituent> out;
  for (const auto& tau : enumerate_tau(f.sigma_eff, ctx)) {
    long long ta = tau.entry(f.i);
    bool keep = false;
    switch (f.tag) {
      case FactorTag::Sub: keep = ta > f.j; break;
      case FactorTag::SubPlus: keep = ta > f.j; break;
      case FactorTag::SubMinus: keep = -ta > f.j; break;
      case FactorTag::Quotient: keep = ta == 0; break;
      default: break;
    }
    if (keep) out.push_back({tau, 1});
  }
  return out;
}

std::vector<PbarConstituent> branch_to_pbar(const PrincipalSeriesPoint& p) {
  auto r = classify(p);
  if (r.verdict == Verdict::ReduciblePoint)
    throw std::invalid_argument("branch_to_pbar: point is reducible; pick a factor");
  if (r.verdict == Verdict::IrreducibleNonUnitary)
    throw std::invalid_argument("branch_to_pbar: point is not unitary");
  return all_constituents(p.sigma, p.ctx);
}

WhittakerSpace whittaker_space(const CompositionFactor& f) {
  const ParamContext& ctx = f.base.ctx;
  WhittakerSpace w;
  auto add = [&](const HighestWeight& tau) {
    w.taus.push_back(tau);
    w.total_dim += weyl_dim(tau);
  };
  if (f.tag == FactorTag::FullIrreducible) {
    for (const auto& tau : enumerate_tau(f.base.sigma, ctx)) add(tau);
    return w;
  }
  if (f.i == 0) {
    if (f.tag == FactorTag::Sub)
      for (const auto& tau : enumerate_tau(f.sigma_eff, ctx)) add(tau);
    return w;
  }
  long long bound = std::llabs(ctx.sigma_padded(f.sigma_eff, f.i + 1)) + f.j;
  for (const auto& tau : enumerate_tau(f.sigma_eff, ctx)) {
    long long ti = tau.entry(f.i);
    bool keep = false;
    switch (f.tag) {
      case FactorTag::Sub: keep = ti > bound; break;
      case FactorTag::SubPlus: keep = ti > bound; break;
      case FactorTag::SubMinus: keep = -ti > bound; break;
      case FactorTag::Quotient: keep = std::llabs(ti) <= bound; break;
      default: break;
    }
    if (keep) add(tau);
  }
  return w;
}

WhittakerSpace whittaker_space(const PrincipalSeriesPoint& p) {
  auto factors = composition_factors(p);
  if (factors.size() > 1)
    throw std::invalid_argument("whittaker_space: point is reducible; pick a factor");
  return whittaker_space(factors.front());
}

bool pbar_partition_check(const HighestWeight& sigma, const ParamContext& ctx,
                          const Rational& lambda) {
  PrincipalSeriesPoint p(ctx, sigma, LambdaSpec::real(lambda));
  auto factors = composition_factors(p);
  if (factors.size() < 2 || factors.front().i == 0)
    throw std::invalid_argument(
        "pbar_partition_check: lambda must be a reducibility point with 1 <= i <= m-1");
  std::multiset<std::vector<long long>> covered;
  for (const auto& f : factors)
    for (const auto& tau : f_picture_factor_tau_set(f)) covered.insert(tau.entries);
  auto all = enumerate_tau(factors.front().sigma_eff, ctx);
  if (covered.size() != all.size()) return false;
  for (const auto& tau : all)
    if (covered.count(tau.entries) != 1) return false;
  return true;
}

}  // namespace rep
