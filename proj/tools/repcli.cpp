#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "rep/serialize.hpp"

using namespace rep;

namespace {

PrincipalSeriesPoint make_point(int n, const std::string& sigma_csv,
                                const std::string& lambda_str) {
  ParamContext ctx(n);
  HighestWeight sigma = HighestWeight::parse(n, sigma_csv);
  LambdaSpec lambda = LambdaSpec::parse(lambda_str);
  return PrincipalSeriesPoint(ctx, sigma, lambda);
}

void emit(const json& j, bool as_json) {
  if (as_json) {
    std::cout << with_schema(j).dump(2) << "\n";
    return;
  }
  // flat text rendering of the same data
  std::function<void(const json&, const std::string&)> walk = [&](const json& node,
                                                                  const std::string& prefix) {
    if (node.is_object()) {
      for (const auto& [key, value] : node.items())
        walk(value, prefix.empty() ? key : prefix + "." + key);
    } else if (node.is_array()) {
      int idx = 0;
      for (const auto& value : node) walk(value, prefix + "[" + std::to_string(idx++) + "]");
      if (node.empty()) std::cout << prefix << ": (none)\n";
    } else {
      std::cout << prefix << ": " << (node.is_string() ? node.get<std::string>() : node.dump())
                << "\n";
    }
  };
  walk(j, "");
}

int cmd_classify(int n, const std::string& sigma, const std::string& lambda, bool as_json) {
  emit(classification_to_json(classify(make_point(n, sigma, lambda))), as_json);
  return 0;
}

int cmd_factors(int n, const std::string& sigma, const std::string& lambda, bool as_json) {
  json fs = json::array();
  for (const auto& f : composition_factors(make_point(n, sigma, lambda)))
    fs.push_back(factor_to_json(f));
  emit(json{{"factors", std::move(fs)}}, as_json);
  return 0;
}

int cmd_eigenvalues(int n, const std::string& sigma, const std::string& lambda,
                    const std::string& picture, long long bound, bool as_json) {
  PrincipalSeriesPoint p = make_point(n, sigma, lambda);
  json table = json::object();
  if (picture == "fourier") {
    for (const auto& tau : enumerate_tau(p.sigma, p.ctx))
      table[tau.str()] = a_F(p, tau).str();
  } else if (picture == "compact") {
    if (bound < 0) bound = p.sigma.entry(1) + 2;
    for (const auto& alpha : enumerate_ktypes(p.sigma, p.ctx, bound))
      table[alpha.str()] = reduced_compact_eigenvalue(p, alpha).str();
  } else {
    throw std::invalid_argument("eigenvalues: --picture must be compact or fourier");
  }
  emit(json{{"picture", picture}, {"n", n}, {"sigma", p.sigma.str()},
            {"lambda", p.lambda.str()}, {"eigenvalues", std::move(table)}},
       as_json);
  return 0;
}

int cmd_dual(int n, long long bound, bool as_json) {
  ParamContext ctx(n);
  json items = json::array();
  for (const auto& it : enumerate_unitary_dual(ctx, bound, static_cast<int>(bound)))
    items.push_back(dual_item_to_json(it, ctx));
  emit(json{{"n", n}, {"bound", bound}, {"items", std::move(items)}}, as_json);
  return 0;
}

int cmd_branch(int n, const std::string& sigma, const std::string& lambda, bool as_json) {
  PrincipalSeriesPoint p = make_point(n, sigma, lambda);
  json records = json::array();
  auto factors = composition_factors(p);
  bool any = false;
  for (const auto& f : factors) {
    if (!factor_unitarizable(f).first) continue;
    records.push_back(restriction_to_json(f));
    any = true;
  }
  if (!any)
    throw std::invalid_argument("branch: no unitarizable constituent at this point; "
                                "the decomposition is only defined for unitary factors");
  emit(json{{"restrictions", std::move(records)}}, as_json);
  return 0;
}

int cmd_whittaker(int n, const std::string& sigma, const std::string& lambda, bool as_json) {
  PrincipalSeriesPoint p = make_point(n, sigma, lambda);
  json records = json::array();
  for (const auto& f : composition_factors(p)) {
    WhittakerSpace w = whittaker_space(f);
    json taus = json::array();
    for (const auto& tau : w.taus) taus.push_back(tau.str());
    records.push_back({{"factor", factor_to_json(f)},
                       {"taus", std::move(taus)},
                       {"whittaker_dim", w.total_dim.convert_to<long long>()}});
  }
  emit(json{{"whittaker", std::move(records)}}, as_json);
  return 0;
}

int cmd_verify(const std::string& suite, unsigned seed, bool as_json) {
  std::vector<VerificationReport> reports;
  auto append = [&](std::vector<VerificationReport> more) {
    reports.insert(reports.end(), more.begin(), more.end());
  };
  if (suite == "decomposition" || suite == "all") append(run_decomposition_suite(seed));
  if (suite == "lie-action" || suite == "all") append(run_lie_action_suite(seed));
  if (suite == "multiplier" || suite == "all") append(run_multiplier_suite());
  if (reports.empty())
    throw std::invalid_argument("verify: --suite must be decomposition, lie-action, "
                                "multiplier or all");
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.pass;
    if (as_json)
      std::cout << with_schema(report_to_json(r)).dump() << "\n";
    else
      std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.check << "  [" << r.params
                << "]  measured=" << r.measured << " expected=" << r.expected
                << " tolerance=" << r.tolerance << "\n";
  }
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"composition series, unitarity and intertwining-operator data for the "
               "spherical-type principal series of SO0(n+1,1)"};
  app.require_subcommand(1);

  int n = 0;
  std::string sigma, lambda, picture = "compact", suite = "all";
  long long bound = -1;
  unsigned seed = 12345;
  bool as_json = false;

  auto add_point_opts = [&](CLI::App* cmd, bool need_lambda = true) {
    cmd->add_option("--n", n, "rank parameter n of SO0(n+1,1), n >= 2")->required();
    cmd->add_option("--sigma", sigma, "highest weight of sigma, comma-separated")->required();
    if (need_lambda)
      cmd->add_option("--lambda", lambda, "spectral parameter, e.g. 1/2 or i3/2")->required();
    cmd->add_flag("--json", as_json, "emit JSON instead of text");
  };

  auto* classify_cmd = app.add_subcommand("classify", "place (sigma, lambda) in the unitary dual");
  add_point_opts(classify_cmd);

  auto* factors_cmd = app.add_subcommand("factors", "composition factors at (sigma, lambda)");
  add_point_opts(factors_cmd);

  auto* eig_cmd = app.add_subcommand("eigenvalues", "intertwining-operator eigenvalue table");
  add_point_opts(eig_cmd);
  eig_cmd->add_option("--picture", picture, "compact or fourier");
  eig_cmd->add_option("--bound", bound, "first-entry bound for the compact K-type table");

  auto* dual_cmd = app.add_subcommand("dual", "enumerate the unitary dual");
  dual_cmd->add_option("--n", n, "rank parameter n, n >= 3")->required();
  dual_cmd->add_option("--bound", bound, "bound on sigma_1 and on the discrete index j");
  dual_cmd->add_flag("--json", as_json, "emit JSON instead of text");

  auto* branch_cmd =
      app.add_subcommand("branch", "restriction to the opposite parabolic subgroup");
  add_point_opts(branch_cmd);

  auto* whit_cmd = app.add_subcommand("whittaker", "Whittaker functionals per factor");
  add_point_opts(whit_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "numeric verification suites");
  verify_cmd->add_option("--suite", suite, "decomposition, lie-action, multiplier or all");
  verify_cmd->add_option("--seed", seed, "seed for the randomized sweeps");
  verify_cmd->add_flag("--json", as_json, "emit JSON report stream");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(n, sigma, lambda, as_json);
    if (factors_cmd->parsed()) return cmd_factors(n, sigma, lambda, as_json);
    if (eig_cmd->parsed()) return cmd_eigenvalues(n, sigma, lambda, picture, bound, as_json);
    if (dual_cmd->parsed()) return cmd_dual(n, bound < 0 ? 2 : bound, as_json);
    if (branch_cmd->parsed()) return cmd_branch(n, sigma, lambda, as_json);
    if (whit_cmd->parsed()) return cmd_whittaker(n, sigma, lambda, as_json);
    if (verify_cmd->parsed()) return cmd_verify(suite, seed, as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
