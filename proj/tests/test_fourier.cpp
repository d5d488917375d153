#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rep/fourier.hpp"

using namespace rep;

namespace {

HighestWeight hw(int k, std::vector<long long> e) { return HighestWeight(k, std::move(e)); }

PrincipalSeriesPoint pt(int n, std::vector<long long> sigma, Rational lambda) {
  ParamContext ctx(n);
  return PrincipalSeriesPoint(ctx, hw(n, std::move(sigma)), LambdaSpec::real(std::move(lambda)));
}

}  // namespace

TEST_CASE("a_F examples") {
  auto p = pt(4, {2, 0}, Rational(1));
  CHECK(a_F(p, hw(3, {0})) == Rational(6));
  CHECK(a_F(p, hw(3, {1})) == Rational(0));
  CHECK(a_F(p, hw(3, {2})) == Rational(0));

  auto p0 = pt(4, {2, 0}, Rational(0));
  CHECK(a_F(p0, hw(3, {0})) == Rational(2));
  CHECK(a_F(p0, hw(3, {1})) == Rational(2));
  CHECK(a_F(p0, hw(3, {2})) == Rational(2));

  auto q = pt(3, {1}, Rational(1, 4));
  CHECK(a_F(q, hw(2, {1})) == Rational(1, 4));
  CHECK(a_F(q, hw(2, {-1})) == Rational(1, 4));
  CHECK(a_F(q, hw(2, {0})) == Rational(3, 4));

  CHECK_THROWS_AS(a_F(p, hw(3, {3})), std::invalid_argument);
  ParamContext c4(4);
  PrincipalSeriesPoint bad(c4, hw(4, {1, 1}), LambdaSpec::real(Rational(0)));
  CHECK_THROWS_AS(a_F(bad, hw(3, {1})), std::invalid_argument);
}

TEST_CASE("one-form coefficients") {
  // sigma = e_1: a_F is n/2-1-lambda on tau = e_1 and n/2-1+lambda on tau = 0
  for (int n : {4, 5, 6, 7}) {
    ParamContext ctx(n);
    std::vector<long long> sv(HighestWeight::rank_of(n), 0);
    sv[0] = 1;
    std::vector<long long> tv(HighestWeight::rank_of(n - 1), 0);
    HighestWeight tau0(n - 1, tv);
    tv[0] = 1;
    HighestWeight tau1(n - 1, tv);
    for (int twol = -5; twol <= 5; ++twol) {
      Rational l(twol, 2);
      PrincipalSeriesPoint p(ctx, hw(n, sv), LambdaSpec::real(l));
      CHECK(a_F(p, tau1) == ctx.rho - Rational(1) - l);
      CHECK(a_F(p, tau0) == ctx.rho - Rational(1) + l);
    }
  }
}

TEST_CASE("multiplier description") {
  auto d = multiplier(pt(3, {1}, Rational(1, 4)));
  CHECK(d.power == Rational(-1, 2));
  REQUIRE(d.coefficients.size() == 3);
  CHECK(d.coefficients[0].first == hw(2, {-1}));
  CHECK(d.coefficients[0].second == Rational(1, 4));
  CHECK(d.coefficients[1].second == Rational(3, 4));
  CHECK(d.coefficients[2].second == Rational(1, 4));
}

TEST_CASE("recursion examples") {
  CHECK(check_F_recursion(pt(4, {2, 0}, Rational(1)), hw(3, {0}), 1, +1));
  CHECK(check_F_recursion(pt(4, {2, 0}, Rational(0)), hw(3, {1}), 1, +1));
  CHECK(check_F_recursion(pt(3, {1}, Rational(1, 4)), hw(2, {0}), 1, +1));
  CHECK(check_F_recursion(pt(3, {1}, Rational(1, 4)), hw(2, {0}), 1, -1));
  CHECK_THROWS_AS(check_F_recursion(pt(3, {1}, Rational(1, 4)), hw(2, {1}), 1, +1),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_F_recursion(pt(3, {1}, Rational(1, 4)), hw(2, {0}), 2, +1),
                  std::out_of_range);
}

TEST_CASE("recursion closure sweep") {
  for (int n = 3; n <= 7; ++n) {
    ParamContext ctx(n);
    int r = HighestWeight::rank_of(n);
    std::vector<std::vector<long long>> sigmas;
    for (long long a = 0; a <= 2; ++a)
      for (long long b = 0; b <= a; ++b) {
        std::vector<long long> e(r, 0);
        e[0] = a;
        if (r > 1) e[1] = b;
        sigmas.push_back(e);
      }
    for (const auto& sv : sigmas) {
      HighestWeight sigma = hw(n, sv);
      if (!sigma.is_valid() || ctx.sigma_padded(sigma, ctx.m) != 0) continue;
      for (int twol = -2 * (n + 2); twol <= 2 * (n + 2); ++twol) {
        PrincipalSeriesPoint p(ctx, sigma, LambdaSpec::real(Rational(twol, 2)));
        for (const auto& tau : enumerate_tau(sigma, ctx)) {
          for (int i = 1; i <= ctx.m - 1; ++i) {
            for (int sign : {+1, -1}) {
              HighestWeight up = tau;
              up.entries[i - 1] += sign;
              if (!up.is_valid() || !sigma_contains_tau(sigma, up, ctx)) continue;
              CHECK(check_F_recursion(p, tau, i, sign));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("lambda=0 collapse") {
  for (int n = 3; n <= 7; ++n) {
    ParamContext ctx(n);
    int r = HighestWeight::rank_of(n);
    std::vector<long long> sv(r, 0);
    sv[0] = 3;
    if (r > 2) sv[1] = 1;
    auto p = pt(n, sv, Rational(0));
    auto d = multiplier(p);
    for (const auto& [tau, c] : d.coefficients) CHECK(c == d.coefficients.front().second);
  }
}

TEST_CASE("factor tau sets") {
  auto f1 = composition_factors(pt(3, {1}, Rational(1, 2)));
  CHECK(f_picture_factor_tau_set(f1[0]) == std::vector<HighestWeight>{hw(2, {1})});
  CHECK(f_picture_factor_tau_set(f1[1]) == std::vector<HighestWeight>{hw(2, {-1})});
  CHECK(f_picture_factor_tau_set(f1[2]) == std::vector<HighestWeight>{hw(2, {0})});

  auto f2 = composition_factors(pt(4, {2, 0}, Rational(1)));
  CHECK(f_picture_factor_tau_set(f2[0]) ==
        std::vector<HighestWeight>{hw(3, {1}), hw(3, {2})});
  CHECK(f_picture_factor_tau_set(f2[1]) == std::vector<HighestWeight>{hw(3, {0})});

  // the i = 0 family is invisible away from xi = 0
  auto f3 = composition_factors(pt(3, {0}, Rational(3, 2)));
  CHECK_THROWS_AS(f_picture_factor_tau_set(f3[0]), std::invalid_argument);
  CHECK_THROWS_AS(f_picture_factor_tau_set(f3[1]), std::invalid_argument);
}

TEST_CASE("factor tau sets partition the tau lattice") {
  for (int n : {3, 4, 5, 6, 7}) {
    ParamContext ctx(n);
    int r = HighestWeight::rank_of(n);
    std::vector<long long> sv(r, 0);
    sv[0] = 3;
    if (r > 1) sv[1] = 1;
    HighestWeight sigma = hw(n, sv);
    if (ctx.sigma_padded(sigma, ctx.m) != 0) sv[r - 1] = 0, sigma = hw(n, sv);
    for (const auto& l : reducibility_points(sigma, ctx, 4).positive_points) {
      auto fs = composition_factors(PrincipalSeriesPoint(ctx, sigma, LambdaSpec::real(l)));
      if (fs[0].i == 0) continue;
      std::size_t total = 0;
      for (const auto& f : fs) total += f_picture_factor_tau_set(f).size();
      CHECK(total == enumerate_tau(sigma, ctx).size());
    }
  }
}

TEST_CASE("a_F kernel equals the union of the sub tau sets") {
  for (int n : {3, 4, 5, 6}) {
    ParamContext ctx(n);
    int r = HighestWeight::rank_of(n);
    for (long long a = 0; a <= 3; ++a)
      for (long long b = 0; b <= (r > 1 ? a : 0); ++b) {
        std::vector<long long> sv(r, 0);
        sv[0] = a;
        if (r > 1) sv[1] = b;
        HighestWeight sigma = hw(n, sv);
        if (!sigma.is_valid() || ctx.sigma_padded(sigma, ctx.m) != 0) continue;
        for (const auto& l : reducibility_points(sigma, ctx, 4).positive_points) {
          PrincipalSeriesPoint p(ctx, sigma, LambdaSpec::real(l));
          auto fs = composition_factors(p);
          if (fs[0].i == 0) continue;
          std::vector<HighestWeight> zero_taus;
          for (const auto& tau : enumerate_tau(sigma, ctx))
            if (a_F(p, tau).is_zero()) zero_taus.push_back(tau);
          std::vector<HighestWeight> sub_taus;
          for (const auto& f : fs)
            if (f.tag != FactorTag::Quotient)
              for (const auto& tau : f_picture_factor_tau_set(f)) sub_taus.push_back(tau);
          std::sort(sub_taus.begin(), sub_taus.end());
          CHECK(zero_taus == sub_taus);
        }
      }
  }
}

TEST_CASE("inner product tables") {
  auto comp = classify(pt(3, {1}, Rational(1, 4)));
  REQUIRE(comp.verdict == Verdict::ComplementarySeries);
  auto fs = composition_factors(pt(3, {1}, Rational(1, 4)));
  auto t = inner_product_table(fs[0]);
  CHECK(t.weight_power == Rational(-1, 2));
  REQUIRE(t.coefficients.size() == 3);
  CHECK(t.coefficients[0].second == Rational(1, 4));
  CHECK(t.coefficients[1].second == Rational(3, 4));

  auto fsub = composition_factors(pt(3, {1}, Rational(1, 2)));
  auto tp = inner_product_table(fsub[0]);  // SubPlus
  CHECK(tp.weight_power == Rational(-1));
  REQUIRE(tp.coefficients.size() == 1);
  CHECK(tp.coefficients[0].first == hw(2, {1}));
  CHECK(tp.coefficients[0].second == Rational(1));

  auto fq = composition_factors(pt(4, {2, 0}, Rational(1)));
  auto tq = inner_product_table(fq[1]);  // Quotient(1,0)
  CHECK(tq.weight_power == Rational(-2));
  REQUIRE(tq.coefficients.size() == 1);
  CHECK(tq.coefficients[0].first == hw(3, {0}));
  CHECK(tq.coefficients[0].second == Rational(6));

  auto punit = composition_factors(
      PrincipalSeriesPoint(ParamContext(3), hw(3, {1}), LambdaSpec::imag(Rational(2))));
  auto tu = inner_product_table(punit[0]);
  CHECK(tu.weight_power == Rational(0));
  for (const auto& [tau, c] : tu.coefficients) CHECK(c == Rational(1));

  auto fbad = composition_factors(pt(5, {2, 1}, Rational(5, 2)));
  CHECK_THROWS_AS(inner_product_table(fbad[0]), std::invalid_argument);
}

TEST_CASE("unitarizable tables have positive coefficients") {
  std::vector<PrincipalSeriesPoint> points = {
      pt(3, {1}, Rational(1, 2)), pt(3, {2}, Rational(1, 2)), pt(3, {2}, Rational(3, 2)),
      pt(4, {2, 0}, Rational(1)), pt(5, {2, 1}, Rational(1, 2)),
      pt(5, {1, 0}, Rational(3, 2)), pt(6, {1, 0, 0}, Rational(2))};
  for (const auto& p : points) {
    for (const auto& f : composition_factors(p)) {
      if (!factor_unitarizable(f).first || f.i == 0) continue;
      auto t = inner_product_table(f);
      REQUIRE_FALSE(t.coefficients.empty());
      for (const auto& [tau, c] : t.coefficients) CHECK(c > Rational(0));
    }
  }
}

TEST_CASE("positivity crosscheck examples") {
  CHECK(positivity_unitarity_crosscheck(pt(3, {1}, Rational(1, 4))));
  CHECK(positivity_unitarity_crosscheck(pt(3, {1}, Rational(3, 4))));
  CHECK(positivity_unitarity_crosscheck(pt(4, {0, 0}, Rational(0))));
}

TEST_CASE("positivity crosscheck sweep (sigma nonzero)") {
  for (int n = 3; n <= 7; ++n) {
    ParamContext ctx(n);
    int r = HighestWeight::rank_of(n);
    for (long long a = 1; a <= 3; ++a)
      for (long long b = 0; b <= (r > 1 ? a : 0); ++b) {
        std::vector<long long> sv(r, 0);
        sv[0] = a;
        if (r > 1) sv[1] = b;
        HighestWeight sigma = hw(n, sv);
        if (!sigma.is_valid() || ctx.sigma_padded(sigma, ctx.m) != 0) continue;
        Rational lo = -ctx.rho - Rational(1);
        for (Rational l = lo; l <= ctx.rho + Rational(1); l += Rational(1, 4)) {
          PrincipalSeriesPoint p(ctx, sigma, LambdaSpec::real(l));
          CHECK(positivity_unitarity_crosscheck(p));
        }
      }
  }
}

TEST_CASE("sigma = 0: compact-picture positivity marks the complementary window") {
  // a_F degenerates to the constant 1 for sigma = 0, so positivity of the
  // compact-picture eigenvalues is the meaningful witness there.
  for (int n = 3; n <= 7; ++n) {
    ParamContext ctx(n);
    HighestWeight zero(n, std::vector<long long>(HighestWeight::rank_of(n), 0));
    for (Rational l = Rational(0); l <= ctx.rho + Rational(1); l += Rational(1, 4)) {
      PrincipalSeriesPoint p(ctx, zero, LambdaSpec::real(l));
      bool all_pos = true;
      for (const auto& alpha : enumerate_ktypes(zero, ctx, 4))
        if (!(reduced_compact_eigenvalue(p, alpha) > Rational(0))) all_pos = false;
      CHECK(all_pos == (l < ctx.rho));
    }
  }
}
