#include "rep/unitary.hpp"

#include <cstdlib>
#include <stdexcept>

namespace rep {

int a_sigma(const HighestWeight& sigma, const ParamContext& ctx) {
  int a = 0;
  while (a < ctx.m && std::llabs(ctx.sigma_padded(sigma, a + 1)) != 0) ++a;
  return a;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::UnitaryPrincipal: return "UnitaryPrincipal";
    case Verdict::ComplementarySeries: return "ComplementarySeries";
    case Verdict::IrreducibleNonUnitary: return "IrreducibleNonUnitary";
    case Verdict::ReduciblePoint: return "ReduciblePoint";
  }
  throw std::logic_error("unknown verdict");
}

namespace {

void require_classifiable(const ParamContext& ctx) {
  if (ctx.n < 3)
    throw std::invalid_argument("classification requires n >= 3 (SO(2) conventions degenerate)");
}

bool sigma_m_vanishes(const HighestWeight& sigma, const ParamContext& ctx) {
  return ctx.sigma_padded(sigma, ctx.m) == 0;
}

}  // namespace

std::pair<bool, std::string> factor_unitarizable(const CompositionFactor& f) {
  const ParamContext& ctx = f.base.ctx;
  require_classifiable(ctx);
  const HighestWeight& sigma = f.sigma_eff;
  bool sm0 = sigma_m_vanishes(sigma, ctx);
  int a = a_sigma(sigma, ctx);
  switch (f.tag) {
    case FactorTag::FullIrreducible: {
      if (f.base.lambda.imaginary || f.lambda_eff.is_zero())
        return {true, "unitary principal series"};
      if (sm0 && f.lambda_eff.abs() < ctx.rho - Rational(a))
        return {true, "complementary series range |lambda| < rho - a"};
      return {false, "real spectral parameter outside the complementary range"};
    }
    case FactorTag::SubPlus:
    case FactorTag::SubMinus:
      return {true, "middle-index half subrepresentation; always unitarizable"};
    case FactorTag::Sub: {
      if (f.i == 0) {
        if (sigma.is_zero()) return {true, "first-family subrepresentation with sigma = 0"};
        return {false, "first-family subrepresentation is unitarizable only for sigma = 0"};
      }
      if (!sm0) return {false, "sigma_m != 0 admits no invariant Hermitian pairing"};
      if (f.i != a) return {false, "index differs from the minimal vanishing index of sigma"};
      return {true, "subrepresentation at the minimal vanishing index with sigma_m = 0"};
    }
    case FactorTag::Quotient: {
      if (f.i == 0) {
        if (sigma.is_zero() && f.j == 0) return {true, "trivial representation"};
        return {false, "finite-dimensional quotients beyond the trivial one are non-unitary"};
      }
      if (!sm0) return {false, "sigma_m != 0 admits no invariant Hermitian pairing"};
      if (f.i != a) return {false, "index differs from the minimal vanishing index of sigma"};
      if (f.j != 0) return {false, "only the j = 0 quotient at the minimal index is unitarizable"};
      return {true, "first quotient at the minimal vanishing index with sigma_m = 0"};
    }
  }
  throw std::logic_error("unknown factor tag");
}

ClassificationResult classify(const PrincipalSeriesPoint& p) {
  require_classifiable(p.ctx);
  ClassificationResult res{p, Verdict::IrreducibleNonUnitary, {}};
  if (p.lambda.imaginary && !p.lambda.value.is_zero()) {
    res.verdict = Verdict::UnitaryPrincipal;
    return res;
  }
  auto factors = composition_factors(p);
  if (factors.size() > 1) {
    res.verdict = Verdict::ReduciblePoint;
    for (auto& f : factors) {
      auto [ok, why] = factor_unitarizable(f);
      res.factors.push_back({std::move(f), ok, std::move(why)});
    }
    return res;
  }
  if (p.lambda.value.is_zero()) {
    res.verdict = Verdict::UnitaryPrincipal;
    return res;
  }
  int a = a_sigma(p.sigma, p.ctx);
  if (sigma_m_vanishes(p.sigma, p.ctx) && p.lambda.value.abs() < p.ctx.rho - Rational(a))
    res.verdict = Verdict::ComplementarySeries;
  return res;
}

std::string dual_kind_name(DualItem::Kind k) {
  switch (k) {
    case DualItem::Kind::PrincipalFamily: return "PrincipalFamily";
    case DualItem::Kind::ComplementaryInterval: return "ComplementaryInterval";
    case DualItem::Kind::Sub: return "Sub";
    case DualItem::Kind::SubPlus: return "SubPlus";
    case DualItem::Kind::SubMinus: return "SubMinus";
    case DualItem::Kind::Quotient: return "Quotient";
  }
  throw std::logic_error("unknown dual item kind");
}

std::string DualItem::str() const {
  std::string s = dual_kind_name(kind) + " sigma=(" + sigma.str() + ")";
  switch (kind) {
    case Kind::PrincipalFamily: return s + " lambda in iR";
    case Kind::ComplementaryInterval: return s + " 0<lambda<" + upper.str();
    default: return s + " i=" + std::to_string(i) + " j=" + std::to_string(j);
  }
}

namespace {

std::vector<HighestWeight> all_sigmas(const ParamContext& ctx, long long bound) {
  std::vector<HighestWeight> out;
  int r = HighestWeight::rank_of(ctx.n);
  std::vector<long long> cur;
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == r) {
      HighestWeight s(ctx.n, cur);
      if (s.is_valid()) out.push_back(s);
      return;
    }
    long long hi = idx == 0 ? bound : cur[idx - 1];
    long long lo = (ctx.n % 2 == 0 && idx == r - 1) ? -hi : 0;
    for (long long v = lo; v <= hi; ++v) {
      cur.push_back(v);
      self(self, idx + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::vector<DualItem> enumerate_unitary_dual(const ParamContext& ctx, long long sigma1_bound,
                                             int j_bound) {
  require_classifiable(ctx);
  if (sigma1_bound < 0 || j_bound < 0)
    throw std::invalid_argument("enumerate_unitary_dual: bounds must be nonnegative");
  std::vector<DualItem> items;
  auto sigmas = all_sigmas(ctx, sigma1_bound);
  for (const auto& sigma : sigmas) {
    bool canonical = ctx.n % 2 == 1 || sigma.entries.back() >= 0;
    if (canonical) items.push_back({DualItem::Kind::PrincipalFamily, sigma, Rational(0), 0, 0});
  }
  for (const auto& sigma : sigmas) {
    if (!sigma_m_vanishes(sigma, ctx)) continue;
    int a = a_sigma(sigma, ctx);
    items.push_back(
        {DualItem::Kind::ComplementaryInterval, sigma, ctx.rho - Rational(a), 0, 0});
  }
  for (const auto& sigma : sigmas) {
    if (!sigma_m_vanishes(sigma, ctx)) continue;
    int a = a_sigma(sigma, ctx);
    if (a == 0) {
      for (int j = 0; j <= j_bound; ++j)
        items.push_back({DualItem::Kind::Sub, sigma, Rational(0), 0, j});
      continue;
    }
    long long ja = ctx.sigma_padded(sigma, a);
    int jmax = static_cast<int>(std::min<long long>(ja - 1, j_bound));
    if (ctx.n % 2 == 1 && a == ctx.m - 1) {
      for (int j = 0; j <= jmax; ++j) {
        items.push_back({DualItem::Kind::SubPlus, sigma, Rational(0), a, j});
        items.push_back({DualItem::Kind::SubMinus, sigma, Rational(0), a, j});
      }
    } else if (a <= ctx.m - 2) {
      for (int j = 0; j <= jmax; ++j)
        items.push_back({DualItem::Kind::Sub, sigma, Rational(0), a, j});
    }
    // n even, a = m-1: Sub(sigma, m-1, j) equals the lambda = 0 principal
    // series at sigma +- (j+1)e_m, which is already listed above.
  }
  HighestWeight zero(ctx.n, std::vector<long long>(HighestWeight::rank_of(ctx.n), 0));
  items.push_back({DualItem::Kind::Quotient, zero, Rational(0), 0, 0});
  return items;
}

std::vector<CompositionFactor> equivalent_realizations(const CompositionFactor& f) {
  const ParamContext& ctx = f.base.ctx;
  std::vector<CompositionFactor> out;
  if (f.tag != FactorTag::Sub) return out;
  if (f.i < ctx.m - 1) {
    long long si1 = ctx.sigma_padded(f.sigma_eff, f.i + 1);
    long long si2 = ctx.sigma_padded(f.sigma_eff, f.i + 2);
    HighestWeight sp = f.sigma_eff;
    sp.entries[f.i] += f.j + 1;
    sp.check_valid();
    int jp = static_cast<int>(si1 - std::llabs(si2));
    Rational lp = ctx.rho - Rational(f.i + 1) + Rational(std::llabs(si2)) + Rational(jp);
    PrincipalSeriesPoint base(ctx, sp, LambdaSpec::real(lp));
    out.push_back({base, FactorTag::Quotient, f.i + 1, jp, false, sp, lp});
    return out;
  }
  if (ctx.n % 2 == 0 && f.i == ctx.m - 1) {
    long long sm = f.sigma_eff.entries.back();
    if (sm != 0) {
      HighestWeight sp = f.sigma_eff;
      sp.entries.back() += (sm > 0 ? 1 : -1) * (f.j + 1);
      sp.check_valid();
      Rational lp(sm);
      PrincipalSeriesPoint base(ctx, sp, LambdaSpec::real(lp));
      out.push_back({base, FactorTag::FullIrreducible, 0, 0, false, sp, lp});
    } else {
      for (int sign : {+1, -1}) {
        HighestWeight sp = f.sigma_eff;
        sp.entries.back() = sign * (f.j + 1);
        sp.check_valid();
        PrincipalSeriesPoint base(ctx, sp, LambdaSpec::real(Rational(0)));
        out.push_back({base, FactorTag::FullIrreducible, 0, 0, false, sp, Rational(0)});
      }
    }
  }
  return out;
}

std::vector<Rational> infinitesimal_character(const CompositionFactor& f) {
  const ParamContext& ctx = f.base.ctx;
  if (f.tag == FactorTag::FullIrreducible)
    throw std::invalid_argument("infinitesimal_character: factor must be a sub or quotient");
  auto slot = [&](int k) {
    return Rational(ctx.sigma_padded(f.sigma_eff, k)) + ctx.rho - Rational(k);
  };
  int a = f.i;
  std::vector<Rational> gamma;
  if (ctx.n % 2 == 1) {
    int half = (ctx.n - 1) / 2;
    if (a == half) {
      for (int k = 1; k <= half; ++k) gamma.push_back(slot(k));
      gamma.push_back(Rational(f.j) + Rational(1, 2));
      return gamma;
    }
    for (int k = 1; k <= a; ++k) gamma.push_back(slot(k));
    gamma.push_back(Rational(std::llabs(ctx.sigma_padded(f.sigma_eff, a + 1))) + ctx.rho -
                    Rational(a) + Rational(f.j));
    for (int k = a + 1; k <= half; ++k) gamma.push_back(slot(k));
    return gamma;
  }
  if (a < 1 || a > ctx.n / 2 - 1)
    throw std::invalid_argument("infinitesimal_character: index outside the tabulated range");
  for (int k = 1; k <= a; ++k) gamma.push_back(slot(k));
  gamma.push_back(Rational(std::llabs(ctx.sigma_padded(f.sigma_eff, a + 1))) + ctx.rho -
                  Rational(a) + Rational(f.j));
  for (int k = a + 1; k <= ctx.n / 2; ++k) gamma.push_back(slot(k));
  return gamma;
}

}  // namespace rep
