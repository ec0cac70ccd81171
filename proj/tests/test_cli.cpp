#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "spbw/certify.hpp"
#include "spbw/expr_parser.hpp"
#include "spbw/presentation_io.hpp"
#include "test_support.hpp"

using namespace spbw;
using namespace spbw::test;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = (env.empty() ? "" : "env " + env + " ") + std::string(SPBW_CLI_PATH) + " " +
                    args + " 2>&1";
  std::array<char, 512> buf{};
  RunResult r{-1, ""};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), int(buf.size()), pipe)) r.out += buf.data();
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("expression parsing round trips the pretty printer") {
  RandomAlgebra rand(123);
  for (int trial = 0; trial < 500; ++trial) {
    int m = trial % 2 + 1;
    int n = 1 + int(rand.raw() % 3);
    ExtensionPresentation pres = make_commutative(m, n);
    NormalElement f = rand.element(m, n, 5);
    CAPTURE(f.str());
    REQUIRE(parse_expression(f.str(), pres) == f);
  }
}

TEST_CASE("expression parser reduces through the engine") {
  auto pres = pres2(Q(2), Q(3), pt({5}), Q(1), Q(0), pt({}), Q(1), Q(5), Q(0), Q(0));
  CHECK(parse_expression("x1*t", pres).str() == "2*t*x1 + 3*x1 + 5");
  CHECK(parse_expression("x2*x1", pres).str() == "x1*x2 + 5");
  CHECK(parse_expression("t*t", pres).str() == "t^2");
  CHECK(parse_expression("(x1 + 1)^2 - x1^2 - 2x1 - 1", pres).is_zero());
  CHECK(parse_expression("3/2 * t", pres) ==
        NormalElement::base_var(1, 2, 0).scaled(Q(3, 2)));
}

TEST_CASE("expression parser reports positions and unknown generators") {
  auto pres = make_commutative(1, 2);
  CHECK_THROWS_AS(parse_expression("x3", pres), ExprParseError);
  CHECK_THROWS_AS(parse_expression("t1", pres), ExprParseError);
  CHECK_THROWS_AS(parse_expression("x1 +", pres), ExprParseError);
  CHECK_THROWS_AS(parse_expression("1/0", pres), ExprParseError);
  try {
    parse_expression("x1 * y", pres);
    CHECK(false);
  } catch (const ExprParseError& e) {
    CHECK(e.pos == 5);
  }
}

TEST_CASE("presentation files load strictly") {
  auto pres = load_presentation(fixture("table1_i.json"));
  CHECK(pres.m == 1);
  CHECK(pres.n == 2);
  CHECK(pres.sigma_scale(0, 0) == Q(2));
  CHECK(pres.p[0] == pt({0, 1}));
  CHECK(pres.c_of(0, 1) == Q(1));

  CHECK_THROWS_AS(presentation_from_json_text("{"), DocumentError);
  CHECK_THROWS_AS(presentation_from_json_text("{\"base_arity\": 3}"), DocumentError);
  std::string extra = R"({"base_arity":1,"generators":1,"sigma":[[{"scale":1,"shift":0}]],
                          "delta_p":[["0"]],"c":[],"q":[],"surprise":1})";
  CHECK_THROWS_AS(presentation_from_json_text(extra), DocumentError);
  std::string badq = R"({"base_arity":1,"generators":2,
      "sigma":[[{"scale":1,"shift":0}],[{"scale":1,"shift":0}]],
      "delta_p":[["0"],["0"]],"c":["1"],"q":[["0","0"]]})";
  CHECK_THROWS_AS(presentation_from_json_text(badq), DocumentError);
}

TEST_CASE("presentation files round trip") {
  RandomAlgebra rand(321);
  for (int trial = 0; trial < 30; ++trial) {
    int m = trial % 2 + 1;
    int n = 1 + int(rand.raw() % 3);
    ExtensionPresentation pres = make_commutative(m, n);
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> scale, shift;
      for (int j = 0; j < m; ++j) {
        scale.push_back(rand.nonzero_rational(4, 3));
        shift.push_back(rand.rational(4, 3));
      }
      pres.sigma[i] = AffineMap(m, scale, shift);
      pres.p[i] = m == 1 ? rand.poly(1, 3) : BasePoly::constant(2, rand.rational());
    }
    for (auto& [k, v] : pres.c) v = rand.nonzero_rational();
    for (auto& [k, v] : pres.q)
      for (auto& r : v) r = rand.rational();
    ExtensionPresentation back = presentation_from_json_text(presentation_to_json_text(pres));
    REQUIRE(back.m == pres.m);
    REQUIRE(back.n == pres.n);
    for (int i = 0; i < n; ++i) {
      REQUIRE(back.p[i] == pres.p[i]);
      for (int j = 0; j < m; ++j) {
        REQUIRE(back.sigma_scale(i, j) == pres.sigma_scale(i, j));
        REQUIRE(back.sigma_shift(i, j) == pres.sigma_shift(i, j));
      }
    }
    REQUIRE(back.c == pres.c);
    REQUIRE(back.q == pres.q);
  }
}

TEST_CASE("certificates are byte deterministic") {
  auto pres = load_presentation(fixture("table1_i.json"));
  CertifyOptions opts;
  opts.degree = 4;
  opts.diamond_degree = 3;
  opts.trials = 20;
  opts.seed = 7;
  std::string a = to_json_string(certify(pres, opts));
  std::string b = to_json_string(certify(pres, opts));
  CHECK(a == b);
  CHECK(a.find("\"schema_version\": 1") != std::string::npos);
  CHECK(a.find("\"verdict\": \"SMOOTH\"") != std::string::npos);
}

TEST_CASE("cli validate") {
  CHECK(run_cli("validate " + fixture("table1_a.json")).exit_code == 0);
  auto bad = run_cli("validate " + fixture("invalid_c0.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("c[1,2]") != std::string::npos);
  auto malformed = run_cli("validate " + fixture("malformed.json"));
  CHECK(malformed.exit_code == 2);
  CHECK(run_cli("validate " + fixture("no_such_file.json")).exit_code == 2);
}

TEST_CASE("cli classify") {
  auto r = run_cli("classify " + fixture("table1_i.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("Table1/(i)") != std::string::npos);
  auto f = run_cli("classify " + fixture("table1_f.json"));
  CHECK(f.exit_code == 1);
  CHECK(f.out.find("no match") != std::string::npos);
}

TEST_CASE("cli reduce") {
  auto r = run_cli("reduce " + fixture("cli_reduce.json") + " \"x1*t\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2*t*x1 + 3*x1 + 5\n");
  auto q = run_cli("reduce " + fixture("cli_reduce.json") + " \"x2*x1\"");
  CHECK(q.out == "x1*x2 + 5\n");
  auto t = run_cli("reduce " + fixture("cli_reduce.json") + " \"t*t\"");
  CHECK(t.out == "t^2\n");
  CHECK(run_cli("reduce " + fixture("cli_reduce.json") + " \"x9\"").exit_code == 1);
}

TEST_CASE("cli autos and certify") {
  auto r = run_cli("autos " + fixture("table1_i.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("nu_t") != std::string::npos);
  CHECK(r.out.find("respects all defining relations") != std::string::npos);

  auto ok = run_cli("certify --degree 4 --diamond-degree 3 --trials 20 " +
                    fixture("table1_i.json"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("SMOOTH") != std::string::npos);

  auto bad = run_cli("certify --degree 4 --diamond-degree 3 --trials 20 --json " +
                     fixture("table1_f.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("\"verdict\": \"NOT_CERTIFIED\"") != std::string::npos);
  CHECK(bad.out.find("automorphism-extension") != std::string::npos);
}

TEST_CASE("cli certify honors the SPBW_DEGREE environment override") {
  auto r = run_cli("certify --diamond-degree 3 --trials 20 " + fixture("table1_a.json"),
                   "SPBW_DEGREE=3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("degree bound: 3") != std::string::npos);
}
