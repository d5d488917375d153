#include "rep/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace rep {

json factor_to_json(const CompositionFactor& f) {
  json j;
  j["tag"] = factor_tag_name(f.tag);
  j["i"] = f.i;
  j["j"] = f.j;
  j["lambda"] = f.base.lambda.str();
  j["sigma"] = f.base.sigma.str();
  j["n"] = f.base.ctx.n;
  if (f.dualized) {
    j["dualized"] = true;
    j["sigma_dual"] = f.sigma_eff.str();
    j["lambda_dual"] = f.lambda_eff.str();
  }
  return j;
}

CompositionFactor factor_from_json(const json& j) {
  int n = j.at("n").get<int>();
  ParamContext ctx(n);
  HighestWeight sigma = HighestWeight::parse(n, j.at("sigma").get<std::string>());
  LambdaSpec lambda = LambdaSpec::parse(j.at("lambda").get<std::string>());
  PrincipalSeriesPoint p(ctx, sigma, lambda);
  FactorTag tag = factor_tag_from_name(j.at("tag").get<std::string>());
  int fi = j.at("i").get<int>();
  int fj = j.at("j").get<int>();
  for (const auto& f : composition_factors(p))
    if (f.tag == tag && f.i == fi && f.j == fj) return f;
  throw std::invalid_argument("factor_from_json: no such factor at the given point");
}

namespace {

json coefficient_map(const std::vector<std::pair<HighestWeight, Rational>>& coeffs) {
  json c = json::object();
  for (const auto& [tau, value] : coeffs) c[tau.str()] = value.str();
  return c;
}

}  // namespace

json multiplier_to_json(const MultiplierDescription& m) {
  json j;
  j["power"] = m.power.str();
  j["coefficients"] = coefficient_map(m.coefficients);
  return j;
}

MultiplierDescription multiplier_from_json(const json& j) {
  MultiplierDescription m;
  m.power = Rational::parse(j.at("power").get<std::string>());
  for (const auto& [key, value] : j.at("coefficients").items()) {
    int k = 1 + static_cast<int>(std::count(key.begin(), key.end(), ','));
    m.coefficients.emplace_back(HighestWeight::parse(2 * k, key),
                                Rational::parse(value.get<std::string>()));
  }
  return m;
}

json inner_product_table_to_json(const InnerProductTable& t) {
  json j;
  j["factor"] = factor_to_json(t.factor);
  j["power"] = t.weight_power.str();
  j["coefficients"] = coefficient_map(t.coefficients);
  return j;
}

json classification_to_json(const ClassificationResult& r) {
  json j;
  j["verdict"] = verdict_name(r.verdict);
  j["n"] = r.point.ctx.n;
  j["sigma"] = r.point.sigma.str();
  j["lambda"] = r.point.lambda.str();
  json fs = json::array();
  for (const auto& a : r.factors) {
    json f = factor_to_json(a.factor);
    f["unitarizable"] = a.unitarizable;
    f["reason"] = a.reason;
    fs.push_back(std::move(f));
  }
  j["factors"] = std::move(fs);
  return j;
}

json dual_item_to_json(const DualItem& item, const ParamContext& ctx) {
  json j;
  j["kind"] = dual_kind_name(item.kind);
  j["n"] = ctx.n;
  j["sigma"] = item.sigma.str();
  if (item.kind == DualItem::Kind::ComplementaryInterval) j["upper"] = item.upper.str();
  if (item.kind == DualItem::Kind::Sub || item.kind == DualItem::Kind::SubPlus ||
      item.kind == DualItem::Kind::SubMinus || item.kind == DualItem::Kind::Quotient) {
    j["i"] = item.i;
    j["j"] = item.j;
  }
  j["description"] = item.str();
  return j;
}

json restriction_to_json(const CompositionFactor& f) {
  json j;
  j["factor"] = factor_to_json(f);
  json cs = json::array();
  for (const auto& c : branch_to_pbar(f)) cs.push_back({{"tau", c.tau.str()}, {"mult", c.mult}});
  j["constituents"] = std::move(cs);
  j["whittaker_dim"] = whittaker_space(f).total_dim.convert_to<long long>();
  return j;
}

json report_to_json(const VerificationReport& r) {
  json j;
  j["check"] = r.check;
  j["params"] = r.params;
  j["expected"] = r.expected;
  j["measured"] = r.measured;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  return j;
}

json with_schema(json payload) {
  json j;
  j["schema"] = "1";
  for (auto& [key, value] : payload.items()) j[key] = std::move(value);
  return j;
}

}  // namespace rep
