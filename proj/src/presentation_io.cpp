#include "spbw/presentation_io.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace spbw {

namespace {

using nlohmann::json;

Rational rational_from(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return Rational::from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
  } catch (const std::exception& e) {
    throw DocumentError(where + ": " + e.what());
  }
  throw DocumentError(where + ": rationals must be strings like \"p/q\" or integers");
}

json rational_to(const Rational& r) { return json(r.str()); }

ExtensionPresentation from_json(const json& doc) {
  if (!doc.is_object()) throw DocumentError("top level must be an object");
  const std::set<std::string> allowed = {"base_arity", "generators", "sigma", "delta_p", "c", "q"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!allowed.count(it.key())) throw DocumentError("unknown key '" + it.key() + "'");
  for (const auto& key : allowed)
    if (!doc.contains(key)) throw DocumentError("missing key '" + key + "'");

  ExtensionPresentation pres;
  if (!doc["base_arity"].is_number_integer()) throw DocumentError("base_arity must be 1 or 2");
  pres.m = doc["base_arity"].get<int>();
  if (pres.m != 1 && pres.m != 2) throw DocumentError("base_arity must be 1 or 2");
  if (!doc["generators"].is_number_integer() || doc["generators"].get<int>() < 1)
    throw DocumentError("generators must be a positive integer");
  pres.n = doc["generators"].get<int>();

  const json& sigma = doc["sigma"];
  if (!sigma.is_array() || int(sigma.size()) != pres.n)
    throw DocumentError("sigma must list one entry per generator");
  for (int i = 0; i < pres.n; ++i) {
    const json& entry = sigma[size_t(i)];
    if (!entry.is_array() || int(entry.size()) != pres.m)
      throw DocumentError("sigma[" + std::to_string(i + 1) + "] must list one {scale, shift} per base variable");
    std::vector<Rational> scale, shift;
    for (int j = 0; j < pres.m; ++j) {
      const json& cell = entry[size_t(j)];
      if (!cell.is_object() || !cell.contains("scale") || !cell.contains("shift") || cell.size() != 2)
        throw DocumentError("sigma entries must be {\"scale\": r, \"shift\": r}");
      std::string where = "sigma[" + std::to_string(i + 1) + "]";
      scale.push_back(rational_from(cell["scale"], where));
      shift.push_back(rational_from(cell["shift"], where));
    }
    pres.sigma.push_back(AffineMap(pres.m, scale, shift));
  }

  const json& dp = doc["delta_p"];
  if (!dp.is_array() || int(dp.size()) != pres.n)
    throw DocumentError("delta_p must list one entry per generator");
  for (int i = 0; i < pres.n; ++i) {
    std::string where = "delta_p[" + std::to_string(i + 1) + "]";
    const json& entry = dp[size_t(i)];
    BasePoly p(pres.m);
    if (pres.m == 2) {
      p += BasePoly::constant(2, rational_from(entry, where));
    } else {
      if (!entry.is_array()) throw DocumentError(where + ": expected a coefficient list");
      for (size_t k = 0; k < entry.size(); ++k)
        p += BasePoly::monomial(1, {uint32_t(k), 0}, rational_from(entry[k], where));
    }
    pres.p.push_back(std::move(p));
  }

  size_t pairs = size_t(pres.n) * size_t(pres.n - 1) / 2;
  const json& c = doc["c"];
  if (!c.is_array() || c.size() != pairs)
    throw DocumentError("c must list one rational per pair i<j (" + std::to_string(pairs) + ")");
  const json& q = doc["q"];
  if (!q.is_array() || q.size() != pairs)
    throw DocumentError("q must list one coefficient list per pair i<j");
  size_t at = 0;
  for (int i = 0; i < pres.n; ++i)
    for (int j = i + 1; j < pres.n; ++j, ++at) {
      std::string pair = std::to_string(i + 1) + "," + std::to_string(j + 1);
      pres.c[{i, j}] = rational_from(c[at], "c[" + pair + "]");
      const json& qrow = q[at];
      if (!qrow.is_array() || int(qrow.size()) != pres.n + 1)
        throw DocumentError("q[" + pair + "] must list " + std::to_string(pres.n + 1) +
                            " rationals, constant term first");
      std::vector<Rational> row;
      for (size_t k = 0; k < qrow.size(); ++k)
        row.push_back(rational_from(qrow[k], "q[" + pair + "]"));
      pres.q[{i, j}] = std::move(row);
    }
  return pres;
}

}  // namespace

ExtensionPresentation presentation_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(e.what());
  }
  return from_json(doc);
}

ExtensionPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return presentation_from_json_text(buf.str());
}

std::string presentation_to_json_text(const ExtensionPresentation& pres) {
  json doc;
  doc["base_arity"] = pres.m;
  doc["generators"] = pres.n;
  json sigma = json::array();
  for (int i = 0; i < pres.n; ++i) {
    json entry = json::array();
    for (int j = 0; j < pres.m; ++j)
      entry.push_back({{"scale", rational_to(pres.sigma_scale(i, j))},
                       {"shift", rational_to(pres.sigma_shift(i, j))}});
    sigma.push_back(entry);
  }
  doc["sigma"] = sigma;
  json dp = json::array();
  for (int i = 0; i < pres.n; ++i) {
    if (pres.m == 2) {
      dp.push_back(rational_to(pres.p[i].constant_term()));
    } else {
      json coeffs = json::array();
      int deg = pres.p[i].degree();
      for (int k = 0; k <= std::max(deg, 0); ++k)
        coeffs.push_back(rational_to(pres.p[i].coeff({uint32_t(k), 0})));
      dp.push_back(coeffs);
    }
  }
  doc["delta_p"] = dp;
  json c = json::array(), q = json::array();
  for (int i = 0; i < pres.n; ++i)
    for (int j = i + 1; j < pres.n; ++j) {
      c.push_back(rational_to(pres.c.at({i, j})));
      json row = json::array();
      for (const auto& r : pres.q.at({i, j})) row.push_back(rational_to(r));
      q.push_back(row);
    }
  doc["c"] = c;
  doc["q"] = q;
  return doc.dump(2) + "\n";
}

}  // namespace spbw
