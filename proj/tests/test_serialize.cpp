#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rep/serialize.hpp"

using namespace rep;

namespace {

PrincipalSeriesPoint pt(int n, std::vector<long long> sigma, LambdaSpec l) {
  ParamContext ctx(n);
  return PrincipalSeriesPoint(ctx, HighestWeight(n, std::move(sigma)), std::move(l));
}

}  // namespace

TEST_CASE("factor records") {
  auto fs = composition_factors(pt(3, {1}, LambdaSpec::real(Rational(1, 2))));
  json j = factor_to_json(fs[0]);
  CHECK(j["tag"] == "SubPlus");
  CHECK(j["i"] == 1);
  CHECK(j["j"] == 0);
  CHECK(j["lambda"] == "1/2");
  CHECK(j["sigma"] == "1");
  CHECK(j["n"] == 3);
  CHECK_FALSE(j.contains("dualized"));
  for (const auto& f : fs) {
    json rendered = factor_to_json(f);
    CHECK(factor_to_json(factor_from_json(rendered)) == rendered);
  }
}

TEST_CASE("dualized factor records round-trip") {
  auto fs = composition_factors(pt(3, {1}, LambdaSpec::real(Rational(-1, 2))));
  for (const auto& f : fs) {
    json j = factor_to_json(f);
    CHECK(j["dualized"] == true);
    CHECK(j["lambda"] == "-1/2");
    CHECK(factor_to_json(factor_from_json(j)) == j);
  }
}

TEST_CASE("multiplier records") {
  json j = multiplier_to_json(multiplier(pt(3, {1}, LambdaSpec::real(Rational(1, 4)))));
  CHECK(j["power"] == "-1/2");
  CHECK(j["coefficients"]["-1"] == "1/4");
  CHECK(j["coefficients"]["0"] == "3/4");
  CHECK(j["coefficients"]["1"] == "1/4");
  CHECK(multiplier_to_json(multiplier_from_json(j)) == j);

  json j2 = multiplier_to_json(multiplier(pt(4, {2, 0}, LambdaSpec::real(Rational(1)))));
  CHECK(j2["coefficients"]["0"] == "6");
  CHECK(j2["coefficients"]["1"] == "0");
  CHECK(j2["coefficients"]["2"] == "0");
  CHECK(multiplier_to_json(multiplier_from_json(j2)) == j2);
}

TEST_CASE("inner product table records") {
  auto fs = composition_factors(pt(3, {1}, LambdaSpec::real(Rational(1, 2))));
  json j = inner_product_table_to_json(inner_product_table(fs[0]));
  CHECK(j["factor"]["tag"] == "SubPlus");
  CHECK(j["coefficients"].size() == 1);
}

TEST_CASE("classification records") {
  json j = classification_to_json(classify(pt(3, {1}, LambdaSpec::real(Rational(1, 4)))));
  CHECK(j["verdict"] == "ComplementarySeries");
  CHECK(j["factors"].empty());

  json j2 = classification_to_json(classify(pt(3, {1}, LambdaSpec::real(Rational(1, 2)))));
  CHECK(j2["verdict"] == "ReduciblePoint");
  CHECK(j2["factors"].size() == 3);
  for (const auto& f : j2["factors"]) {
    CHECK(f.contains("unitarizable"));
    CHECK(f.contains("reason"));
  }
}

TEST_CASE("dual item records") {
  ParamContext ctx(3);
  auto items = enumerate_unitary_dual(ctx, 1, 1);
  for (const auto& it : items) {
    json j = dual_item_to_json(it, ctx);
    CHECK(j.contains("kind"));
    CHECK(j["n"] == 3);
    CHECK(j.contains("description"));
  }
}

TEST_CASE("restriction records") {
  auto fs = composition_factors(pt(3, {1}, LambdaSpec::real(Rational(1, 2))));
  json j = restriction_to_json(fs[0]);
  CHECK(j["constituents"].size() == 1);
  CHECK(j["constituents"][0]["tau"] == "1");
  CHECK(j["constituents"][0]["mult"] == 1);
  CHECK(j["whittaker_dim"] == 1);

  auto full = composition_factors(pt(3, {1}, LambdaSpec::real(Rational(1, 4))));
  json jf = restriction_to_json(full[0]);
  CHECK(jf["constituents"].size() == 3);
  CHECK(jf["whittaker_dim"] == 3);
}

TEST_CASE("schema envelope and reports") {
  json j = with_schema({{"verdict", "x"}});
  CHECK(j["schema"] == "1");
  CHECK(j["verdict"] == "x");
  CHECK(j.begin().key() == "schema");

  VerificationReport r{"bruhat-decomposition", "n=3", 0.0, 1e-12, 1e-10, true};
  json rj = report_to_json(r);
  CHECK(rj["pass"] == true);
  CHECK(rj["check"] == "bruhat-decomposition");
  CHECK(rj["measured"] == 1e-12);
}
