#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spbw/rational.hpp"

namespace spbw {

// Exponent vector of a commutative base monomial. Slot 1 stays zero for
// arity-1 polynomials.
using BaseExp = std::array<uint32_t, 2>;

// Ascending degree-lexicographic order on exponents.
struct BaseExpDegLex {
  bool operator()(const BaseExp& a, const BaseExp& b) const {
    uint64_t da = uint64_t(a[0]) + a[1];
    uint64_t db = uint64_t(b[0]) + b[1];
    if (da != db) return da < db;
    return a < b;
  }
};

class AffineMap;

// Sparse commutative polynomial over Q in one or two central variables.
// No zero coefficients are ever stored; the zero polynomial is the empty
// map, so structural equality is semantic equality.
class BasePoly {
 public:
  explicit BasePoly(int arity = 1);

  static BasePoly constant(int arity, const Rational& c);
  static BasePoly variable(int arity, int var);  // t (var=0) or t2 (var=1)
  static BasePoly monomial(int arity, BaseExp e, const Rational& c);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coeff(BaseExp e) const;
  int degree() const;  // total degree; -1 for the zero polynomial
  size_t term_count() const { return terms_.size(); }

  BasePoly& operator+=(const BasePoly& o);
  BasePoly& operator-=(const BasePoly& o);
  friend BasePoly operator+(BasePoly a, const BasePoly& b) { return a += b; }
  friend BasePoly operator-(BasePoly a, const BasePoly& b) { return a -= b; }
  friend BasePoly operator*(const BasePoly& a, const BasePoly& b);
  friend BasePoly operator-(const BasePoly& a);
  BasePoly scaled(const Rational& c) const;
  BasePoly pow(unsigned e) const;

  friend bool operator==(const BasePoly& a, const BasePoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const BasePoly& a, const BasePoly& b) { return !(a == b); }

  // f(t_j <- a_j t_j + b_j), exact; shape error on arity mismatch.
  BasePoly substitute(const AffineMap& s) const;

  // Formal partial derivative in variable `var`.
  BasePoly derivative(int var = 0) const;

  // Exact univariate division. Every call site divides something that is
  // divisible by construction; a nonzero remainder aborts loudly.
  static BasePoly div_exact(const BasePoly& f, const BasePoly& g);

  const std::map<BaseExp, Rational, BaseExpDegLex>& terms() const { return terms_; }

  std::string str() const;

 private:
  void insert(BaseExp e, const Rational& c);

  int arity_;
  std::map<BaseExp, Rational, BaseExpDegLex> terms_;
};

// Invertible affine substitution t_j -> a_j t_j + b_j, one slot per base
// variable. Arity-2 maps are diagonal by construction. Zero scales are
// representable so that shape validation can report them as data; inverse()
// rejects them.
class AffineMap {
 public:
  AffineMap(int arity, std::vector<Rational> scale, std::vector<Rational> shift);
  static AffineMap identity(int arity);
  static AffineMap univariate(const Rational& a, const Rational& b);

  int arity() const { return arity_; }
  const Rational& scale(int j) const { return scale_.at(j); }
  const Rational& shift(int j) const { return shift_.at(j); }
  bool is_identity() const;
  bool is_invertible() const;
  AffineMap inverse() const;

  // Image of t_j as a polynomial, a_j t_j + b_j.
  BasePoly image(int j) const;

 private:
  int arity_;
  std::vector<Rational> scale_, shift_;
};

// The divided-difference sigma-derivation delta_p:
//   f |-> (f(s(t)) - f(t)) / (s(t) - t) * p(t)   when s != id,
//   f |-> f'(t) * p(t)                           when s == id.
// Univariate only; the division is always exact.
BasePoly divided_difference(const BasePoly& f, const AffineMap& s, const BasePoly& p);

}  // namespace spbw
