#include "spbw/certify.hpp"

#include <json.hpp>

#include <sstream>

namespace spbw {

Rational RandomAlgebra::rational(long max_abs, long max_den) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng_), den(rng_));
}

Rational RandomAlgebra::nonzero_rational(long max_abs, long max_den) {
  while (true) {
    Rational r = rational(max_abs, max_den);
    if (!r.is_zero()) return r;
  }
}

BasePoly RandomAlgebra::poly(int arity, unsigned max_degree, unsigned max_terms) {
  std::uniform_int_distribution<unsigned> nterms(0, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  BasePoly out(arity);
  unsigned k = nterms(rng_);
  for (unsigned i = 0; i < k; ++i) {
    unsigned d = deg(rng_);
    BaseExp e{0, 0};
    if (arity == 1) {
      e[0] = d;
    } else {
      std::uniform_int_distribution<unsigned> split(0, d);
      e[0] = split(rng_);
      e[1] = d - e[0];
    }
    out += BasePoly::monomial(arity, e, rational());
  }
  return out;
}

NormalElement RandomAlgebra::element(int m, int n, unsigned max_degree, unsigned max_terms) {
  std::uniform_int_distribution<unsigned> nterms(0, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  NormalElement out(m, n);
  unsigned k = nterms(rng_);
  for (unsigned i = 0; i < k; ++i) {
    unsigned budget = deg(rng_);
    Monomial mono{{0, 0}, std::vector<uint32_t>(size_t(n), 0)};
    for (int v = 0; v < m + n; ++v) {
      std::uniform_int_distribution<unsigned> take(0, budget);
      unsigned e = take(rng_);
      if (v < m)
        mono.base[v] = e;
      else
        mono.gens[size_t(v - m)] = e;
      budget -= e;
    }
    out += NormalElement::monomial(m, n, mono, rational());
  }
  return out;
}

DifferentialForm RandomAlgebra::form(const Calculus& calc, int grade, unsigned coeff_degree,
                                     unsigned max_terms) {
  const int dim = calc.dimension();
  DifferentialForm out = calc.zero_form(grade);
  std::vector<std::vector<int>> wedges;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (int(cur.size()) == grade) {
      wedges.push_back(cur);
      return;
    }
    for (int l = next; l < dim; ++l) {
      cur.push_back(l);
      self(self, l + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::uniform_int_distribution<size_t> pick(0, wedges.size() - 1);
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  unsigned k = nterms(rng_);
  const auto& pres = calc.presentation();
  for (unsigned i = 0; i < k; ++i)
    out.add_term(FormMonomial{wedges[pick(rng_)]},
                 element(pres.m, pres.n, coeff_degree, 3));
  return out;
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

}  // namespace

SmoothnessCertificate certify(const ExtensionPresentation& pres, const CertifyOptions& opts) {
  SmoothnessCertificate cert;
  cert.degree_bound = opts.degree;
  cert.diamond_degree = opts.diamond_degree;
  cert.trials = opts.trials;
  cert.rng_seed = opts.seed;
  cert.calculus_dimension = pres.m + pres.n;
  cert.gk_dimension_assumed = pres.m + pres.n;
  cert.d_extension = "d(w f) = (-1)^{|w|} w ^ d(f) on basis wedges w (closed generators)";
  cert.assumptions = {
      "connectedness checked up to total degree " + std::to_string(opts.degree) +
          ", not for all degrees",
      "Gelfand-Kirillov dimension taken as " + std::to_string(pres.m + pres.n) +
          ", not computed",
  };

  bool failed = false;
  auto stage = [&](const std::string& name, bool pass, std::string details) {
    cert.stages.push_back({name, pass, std::move(details)});
    if (!pass && !failed) {
      failed = true;
      cert.failing_stage = name;
    }
    return pass;
  };

  // Shape.
  {
    auto violations = validate_shape(pres);
    std::vector<std::string> msgs;
    for (const auto& v : violations) msgs.push_back(v.field + ": " + v.message);
    if (!stage("shape", violations.empty(), join(msgs, "; "))) {
      cert.verdict = "NOT_CERTIFIED";
      return cert;
    }
  }

  // Classification (recorded, never gates).
  {
    auto labels = classify_case(pres);
    std::vector<std::string> matched, near;
    for (const auto& l : labels) {
      if (l.matched) {
        matched.push_back(l.id());
      } else {
        std::vector<std::string> names;
        for (const auto& [name, r] : l.residuals) names.push_back(name);
        near.push_back(l.id() + " [" + join(names, ", ") + "]");
      }
    }
    cert.matched_cases = matched;
    std::string details = matched.empty() ? "no case matched; candidates: " + join(near, "; ")
                                          : join(matched, "; ");
    stage("classification", true, details);
  }

  Calculus calc(pres);

  // Automorphism stages. These run before the diamond stage so that a
  // parameter set whose relations admit no compatible maps is reported
  // against the relations themselves, whether or not it presents an
  // actual extension; the diamond stage below still gates the verdict.
  {
    std::vector<std::string> bad;
    for (const auto& nu : calc.autos()) {
      auto report = check_respects_relations(pres, nu);
      for (const auto& [id, r] : report.residuals)
        if (!r.is_zero()) bad.push_back(nu.name + " on " + id + ": " + r.str());
    }
    if (!stage("automorphism-extension", bad.empty(), join(bad, "; "))) {
      cert.verdict = "NOT_CERTIFIED";
      return cert;
    }
  }
  {
    std::vector<std::string> bad;
    for (const auto& nu : calc.autos())
      if (!check_automorphism(pres, nu)) bad.push_back(nu.name + " is not invertible");
    if (!stage("automorphism-bijectivity", bad.empty(), join(bad, "; "))) {
      cert.verdict = "NOT_CERTIFIED";
      return cert;
    }
  }
  {
    auto report = check_pairwise_commute(pres, calc.autos());
    std::vector<std::string> bad;
    for (const auto& [id, r] : report.residuals)
      if (!r.is_zero()) bad.push_back(id + ": " + r.str());
    if (!stage("automorphism-commutation", bad.empty(), join(bad, "; "))) {
      cert.verdict = "NOT_CERTIFIED";
      return cert;
    }
  }

  // PBW diamond.
  {
    auto residuals = check_pbw_diamond(pres, opts.diamond_degree);
    std::string details = "words up to length " + std::to_string(opts.diamond_degree);
    if (!residuals.empty())
      details = "first failing word " + residuals.front().word_str(pres) + ", difference " +
                residuals.front().diff.str();
    if (!stage("pbw-diamond", residuals.empty(), details)) {
      cert.verdict = "NOT_CERTIFIED";
      return cert;
    }
  }

  // d o d = 0 sampling.
  {
    RandomAlgebra rand(opts.seed);
    unsigned bad = 0;
    for (unsigned i = 0; i < opts.trials; ++i) {
      NormalElement f = rand.element(pres.m, pres.n, opts.degree);
      if (!calc.d(calc.d(calc.grade0(f))).is_zero()) ++bad;
    }
    for (unsigned i = 0; i < opts.trials / 2; ++i) {
      DifferentialForm f = rand.form(calc, 1, 3);
      if (!calc.d(calc.d(f)).is_zero()) ++bad;
    }
    std::ostringstream details;
    details << opts.trials << " grade-0 and " << opts.trials / 2 << " grade-1 samples";
    if (!stage("dga-d-squared", bad == 0,
               bad ? std::to_string(bad) + " nonzero d(d(.))" : details.str())) {
      cert.verdict = "NOT_CERTIFIED";
      return cert;
    }
  }

  // Connectedness up to the degree bound.
  {
    unsigned dim = calc.connected_kernel_dim(opts.degree);
    if (!stage("connectedness", dim == 1,
               "ker(d) dimension " + std::to_string(dim) + " on degree <= " +
                   std::to_string(opts.degree))) {
      cert.verdict = "NOT_CERTIFIED";
      return cert;
    }
  }

  // Reconstruction at every grade: all basis wedges, then random
  // algebra-coefficient forms.
  {
    RandomAlgebra rand(opts.seed + 1);
    std::vector<std::string> bad;
    const int dim = calc.dimension();
    for (int k = 0; k <= dim && bad.size() < 4; ++k) {
      const auto& gens = calc.integral_generators();
      for (size_t i = 0; i < gens.omega[size_t(k)].size(); ++i) {
        DifferentialForm r = calc.reconstruct_residual(k, gens.omega[size_t(k)][i]);
        if (!r.is_zero())
          bad.push_back("grade " + std::to_string(k) + " basis wedge " + std::to_string(i));
      }
      for (unsigned trial = 0; trial < 20 && bad.size() < 4; ++trial) {
        DifferentialForm test = rand.form(calc, k, 3);
        DifferentialForm r = calc.reconstruct_residual(k, test);
        if (!r.is_zero())
          bad.push_back("grade " + std::to_string(k) + " random form " + std::to_string(trial));
      }
    }
    if (!stage("reconstruction", bad.empty(), join(bad, "; "))) {
      cert.verdict = "NOT_CERTIFIED";
      return cert;
    }
  }

  // Dimension bookkeeping.
  stage("dimension", true,
        "calculus dimension " + std::to_string(cert.calculus_dimension) +
            " matches the assumed Gelfand-Kirillov dimension");

  cert.verdict = failed ? "NOT_CERTIFIED" : "SMOOTH";
  return cert;
}

std::string to_text(const SmoothnessCertificate& cert) {
  std::ostringstream out;
  out << "verdict: " << cert.verdict << "\n";
  if (!cert.failing_stage.empty()) out << "failing stage: " << cert.failing_stage << "\n";
  out << "calculus dimension: " << cert.calculus_dimension << "\n";
  out << "degree bound: " << cert.degree_bound << ", diamond degree: " << cert.diamond_degree
      << ", trials: " << cert.trials << ", seed: " << cert.rng_seed << "\n";
  if (!cert.matched_cases.empty()) out << "matched cases: " << join(cert.matched_cases, "; ") << "\n";
  for (const auto& s : cert.stages) {
    out << "  [" << (s.pass ? "pass" : "FAIL") << "] " << s.name;
    if (!s.details.empty()) out << " — " << s.details;
    out << "\n";
  }
  for (const auto& a : cert.assumptions) out << "assumption: " << a << "\n";
  return out.str();
}

std::string to_json_string(const SmoothnessCertificate& cert) {
  nlohmann::json j;
  j["schema_version"] = SmoothnessCertificate::kSchemaVersion;
  j["verdict"] = cert.verdict;
  j["failing_stage"] = cert.failing_stage;
  j["degree_bound"] = cert.degree_bound;
  j["diamond_degree"] = cert.diamond_degree;
  j["trials"] = cert.trials;
  j["rng_seed"] = cert.rng_seed;
  j["calculus_dimension"] = cert.calculus_dimension;
  j["gk_dimension_assumed"] = cert.gk_dimension_assumed;
  j["d_extension"] = cert.d_extension;
  j["matched_cases"] = cert.matched_cases;
  j["assumptions"] = cert.assumptions;
  j["stages"] = nlohmann::json::array();
  for (const auto& s : cert.stages)
    j["stages"].push_back({{"name", s.name}, {"pass", s.pass}, {"details", s.details}});
  return j.dump(2) + "\n";
}

}  // namespace spbw
