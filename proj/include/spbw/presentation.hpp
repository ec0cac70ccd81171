#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spbw/base_poly.hpp"

namespace spbw {

// All data defining one skew PBW extension over k[t] (m=1) or k[t1,t2]
// (m=2) with n generators x_1..x_n:
//
//   x_i t_j  = a_{ij} t_j x_i + b_{ij} x_i + p_i          (affine sigma_i)
//   x_j x_i  = c_{ij} x_i x_j + q_{ij}^{(0)} + sum_k q_{ij}^{(k)} x_k   (i<j)
//
// Generators are 0-based in code and 1-based in all printed output.
struct ExtensionPresentation {
  int m = 1;
  int n = 1;
  std::vector<AffineMap> sigma;                          // n maps of arity m
  std::vector<BasePoly> p;                               // n polys of arity m
  std::map<std::pair<int, int>, Rational> c;             // (i,j), i<j
  std::map<std::pair<int, int>, std::vector<Rational>> q;  // (i,j), i<j -> n+1 scalars

  // c with the convention c_{ji} = c_{ij}^{-1}, c_{ii} = 1.
  Rational c_of(int i, int j) const;
  // q^{(k)} (k=0..n) with the convention q_{ji}^{(k)} = -c_{ij}^{-1} q_{ij}^{(k)}
  // for i<j, and q_{ii}^{(k)} = 0.
  Rational q_of(int i, int j, int k) const;

  Rational sigma_scale(int i, int j) const { return sigma.at(i).scale(j); }
  Rational sigma_shift(int i, int j) const { return sigma.at(i).shift(j); }

  int dimension() const { return m + n; }

  std::string base_var_name(int j) const {
    return m == 1 ? std::string("t") : "t" + std::to_string(j + 1);
  }
  static std::string gen_name(int i) { return "x" + std::to_string(i + 1); }
};

// Handy constructors for tests and fixtures.
ExtensionPresentation make_commutative(int m, int n);

struct ShapeViolation {
  std::string field;
  std::string message;
};

// Empty result iff the presentation data is well-shaped: sizes agree,
// every sigma scale and every c is nonzero, and (m=2) every p_i is a
// constant. Violations are data, not exceptions.
std::vector<ShapeViolation> validate_shape(const ExtensionPresentation& pres);

// One evaluated table row (or the two-variable condition system). Only
// nonzero residuals are stored, so matched <=> residuals.empty().
struct CaseLabel {
  std::string table;    // Table1 | Table2 | Table3 | TwoVarConditions
  std::string case_id;  // "(a)".."(p)" or "conditions"
  int row = 1;          // 1-based row index inside the case
  bool matched = false;
  std::vector<std::pair<std::string, BasePoly>> residuals;  // nonzero only

  std::string id() const;
};

// Evaluates the parameter tables (m=1; the table consulted is chosen by n)
// or the two-variable condition system (m=2) and returns one label per row
// whose structural guard applies. Pure; requires validate_shape empty.
std::vector<CaseLabel> classify_case(const ExtensionPresentation& pres);

}  // namespace spbw
