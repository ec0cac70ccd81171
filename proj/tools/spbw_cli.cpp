#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "spbw/certify.hpp"
#include "spbw/expr_parser.hpp"
#include "spbw/presentation_io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kSemanticFailure = 1;
constexpr int kInputError = 2;

spbw::ExtensionPresentation load_or_exit(const std::string& path) {
  try {
    return spbw::load_presentation(path);
  } catch (const spbw::DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::exit(kInputError);
  }
}

int require_valid(const spbw::ExtensionPresentation& pres) {
  auto violations = spbw::validate_shape(pres);
  for (const auto& v : violations) std::cerr << "invalid: " << v.field << ": " << v.message << "\n";
  return violations.empty() ? kOk : kSemanticFailure;
}

int cmd_validate(const std::string& file) {
  auto pres = load_or_exit(file);
  int rc = require_valid(pres);
  if (rc == kOk) std::cout << "ok\n";
  return rc;
}

int cmd_classify(const std::string& file) {
  auto pres = load_or_exit(file);
  if (int rc = require_valid(pres); rc != kOk) return rc;
  auto labels = spbw::classify_case(pres);
  bool any = false;
  for (const auto& l : labels)
    if (l.matched) {
      std::cout << l.id() << "\n";
      any = true;
    }
  if (!any) {
    std::cout << "no match";
    std::string sep = "; residuals: ";
    for (const auto& l : labels)
      for (const auto& [name, r] : l.residuals) {
        std::cout << sep << l.id() << ": [" << name << "] " << r.str();
        sep = "; ";
      }
    std::cout << "\n";
    return kSemanticFailure;
  }
  return kOk;
}

int cmd_reduce(const std::string& file, const std::string& expr) {
  auto pres = load_or_exit(file);
  if (int rc = require_valid(pres); rc != kOk) return rc;
  try {
    std::cout << spbw::parse_expression(expr, pres).str() << "\n";
  } catch (const spbw::ExprParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemanticFailure;
  }
  return kOk;
}

int cmd_autos(const std::string& file) {
  auto pres = load_or_exit(file);
  if (int rc = require_valid(pres); rc != kOk) return rc;
  auto autos = spbw::build_standard_autos(pres);
  bool all_ok = true;
  for (const auto& nu : autos) {
    std::cout << nu.name << ":\n";
    for (int j = 0; j < pres.m; ++j)
      std::cout << "  " << pres.base_var_name(j) << " -> " << nu.base_images[j].str() << "\n";
    for (int i = 0; i < pres.n; ++i)
      std::cout << "  " << spbw::ExtensionPresentation::gen_name(i) << " -> "
                << nu.gen_images[i].str() << "\n";
    auto report = spbw::check_respects_relations(pres, nu);
    if (report.all_zero) {
      std::cout << "  respects all defining relations\n";
    } else {
      all_ok = false;
      for (const auto& [id, r] : report.residuals)
        if (!r.is_zero()) std::cout << "  residual on " << id << ": " << r.str() << "\n";
    }
  }
  auto commute = spbw::check_pairwise_commute(pres, autos);
  if (commute.all_zero) {
    std::cout << "all pairs commute\n";
  } else {
    all_ok = false;
    for (const auto& [id, r] : commute.residuals)
      if (!r.is_zero()) std::cout << "commutation residual " << id << ": " << r.str() << "\n";
  }
  return all_ok ? kOk : kSemanticFailure;
}

int cmd_certify(const std::string& file, const spbw::CertifyOptions& opts, bool as_json) {
  auto pres = load_or_exit(file);
  auto cert = spbw::certify(pres, opts);
  std::cout << (as_json ? spbw::to_json_string(cert) : spbw::to_text(cert));
  return cert.smooth() ? kOk : kSemanticFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skew PBW extensions over k[t] and k[t1,t2]: normal forms, "
               "standard automorphisms, and differential smoothness certification"};
  app.require_subcommand(1);

  std::string file, expr;
  spbw::CertifyOptions opts;
  bool as_json = false;

  auto* validate = app.add_subcommand("validate", "check the presentation file shape");
  validate->add_option("file", file, "presentation file")->required();

  auto* classify = app.add_subcommand("classify", "match the presentation against the parameter tables");
  classify->add_option("file", file, "presentation file")->required();

  auto* reduce = app.add_subcommand("reduce", "print the normal form of an expression");
  reduce->add_option("file", file, "presentation file")->required();
  reduce->add_option("expr", expr, "expression, e.g. \"x2*x1\"")->required();

  auto* autos = app.add_subcommand("autos", "print the standard maps and their residual reports");
  autos->add_option("file", file, "presentation file")->required();

  auto* certify = app.add_subcommand("certify", "run the differential smoothness certification");
  certify->add_option("file", file, "presentation file")->required();
  certify->add_option("--degree", opts.degree, "connectedness degree bound")
      ->envname("SPBW_DEGREE")
      ->capture_default_str();
  certify->add_option("--diamond-degree", opts.diamond_degree, "diamond word-length bound")
      ->capture_default_str();
  certify->add_option("--trials", opts.trials, "random trials for the sampling stages")
      ->capture_default_str();
  certify->add_option("--seed", opts.seed, "random seed")->capture_default_str();
  certify->add_flag("--json", as_json, "emit the certificate as JSON");

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) return cmd_validate(file);
  if (classify->parsed()) return cmd_classify(file);
  if (reduce->parsed()) return cmd_reduce(file, expr);
  if (autos->parsed()) return cmd_autos(file);
  if (certify->parsed()) return cmd_certify(file, opts, as_json);
  return kInputError;
}
