#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spbw/calculus.hpp"

namespace spbw {

// Seeded, platform-stable generator of small exact inputs for the
// sampling stages. Also used by the test suites.
class RandomAlgebra {
 public:
  explicit RandomAlgebra(uint64_t seed) : rng_(seed) {}

  Rational rational(long max_abs = 9, long max_den = 9);
  Rational nonzero_rational(long max_abs = 9, long max_den = 9);
  BasePoly poly(int arity, unsigned max_degree, unsigned max_terms = 4);
  NormalElement element(int m, int n, unsigned max_degree, unsigned max_terms = 5);
  DifferentialForm form(const Calculus& calc, int grade, unsigned coeff_degree,
                        unsigned max_terms = 3);
  uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

struct CertStage {
  std::string name;
  bool pass = false;
  std::string details;
};

struct CertifyOptions {
  unsigned degree = 6;          // connectedness bound, random coefficient cap
  unsigned diamond_degree = 4;  // word length for the diamond stage
  unsigned trials = 200;        // random trials for the sampling stages
  uint64_t seed = 0;
};

struct SmoothnessCertificate {
  static constexpr int kSchemaVersion = 1;

  std::string verdict;  // SMOOTH | NOT_CERTIFIED
  std::string failing_stage;
  std::vector<CertStage> stages;
  std::vector<std::string> matched_cases;
  std::vector<std::string> assumptions;
  unsigned degree_bound = 0;
  unsigned diamond_degree = 0;
  unsigned trials = 0;
  uint64_t rng_seed = 0;
  int calculus_dimension = 0;
  int gk_dimension_assumed = 0;
  std::string d_extension;  // how d is extended to higher grades

  bool smooth() const { return verdict == "SMOOTH"; }
};

// Runs the full verification pipeline:
//   shape -> classification -> pbw-diamond -> automorphism-extension ->
//   automorphism-bijectivity -> automorphism-commutation -> dga-d-squared
//   -> connectedness -> reconstruction -> dimension.
// Verdict SMOOTH only when every gate passes; classification is recorded
// but never gates (the residual checks are the authority).
SmoothnessCertificate certify(const ExtensionPresentation& pres, const CertifyOptions& opts);

std::string to_text(const SmoothnessCertificate& cert);
std::string to_json_string(const SmoothnessCertificate& cert);  // byte-deterministic

}  // namespace spbw
