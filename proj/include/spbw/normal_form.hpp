#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spbw/presentation.hpp"

namespace spbw {

// Ordered monomial t^e x^alpha. Base exponents first, then generator
// exponents in index order.
struct Monomial {
  BaseExp base{0, 0};              // slot 1 unused when m = 1
  std::vector<uint32_t> gens;      // n entries

  unsigned total_degree() const {
    unsigned d = base[0] + base[1];
    for (auto g : gens) d += g;
    return d;
  }
  unsigned gen_degree() const {
    unsigned d = 0;
    for (auto g : gens) d += g;
    return d;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.base == b.base && a.gens == b.gens;
  }
};

// Ascending degree-lexicographic order: total degree, then base exponents,
// then generator exponents in index order.
struct MonomialDegLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    if (a.base != b.base) return a.base < b.base;
    return a.gens < b.gens;
  }
};

// An algebra element in left normal form: sum of exact rational
// coefficients times ordered monomials, the base-ring part written on the
// left. Structural equality of the term map is equality in the algebra.
class NormalElement {
 public:
  NormalElement(int m, int n) : m_(m), n_(n) {}

  static NormalElement zero(int m, int n) { return NormalElement(m, n); }
  static NormalElement scalar(int m, int n, const Rational& c);
  static NormalElement one(int m, int n) { return scalar(m, n, Rational(1)); }
  static NormalElement base_var(int m, int n, int j);
  static NormalElement generator(int m, int n, int i);
  static NormalElement monomial(int m, int n, Monomial mono, const Rational& c);
  // Embeds a base polynomial (arity m) as an element.
  static NormalElement from_base(const BasePoly& f, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  Rational scalar_value() const;  // constant coefficient
  Rational coeff(const Monomial& mono) const;
  int degree() const;  // total degree; -1 for zero
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational, MonomialDegLex>& terms() const { return terms_; }

  NormalElement& operator+=(const NormalElement& o);
  NormalElement& operator-=(const NormalElement& o);
  friend NormalElement operator+(NormalElement a, const NormalElement& b) { return a += b; }
  friend NormalElement operator-(NormalElement a, const NormalElement& b) { return a -= b; }
  friend NormalElement operator-(const NormalElement& a);
  NormalElement scaled(const Rational& c) const;
  // Left multiplication by a base-ring polynomial (coefficients live on
  // the left, so this is coefficient-wise).
  NormalElement base_mul(const BasePoly& f) const;

  friend bool operator==(const NormalElement& a, const NormalElement& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const NormalElement& a, const NormalElement& b) { return !(a == b); }

  // Canonical text form, terms in descending degree-lex order, e.g.
  // "3/2*t^2*x1*x2^3 + x1 - 5".
  std::string str() const;

  void add_term(Monomial mono, const Rational& c);

 private:
  int m_, n_;
  std::map<Monomial, Rational, MonomialDegLex> terms_;
};

// Rule-application counter for the termination bound checks.
struct RewriteStats {
  uint64_t steps = 0;
};

// Normal form of x_i * t^e, by iterated application of the defining
// relation x_i t_j = a_ij t_j x_i + b_ij x_i + p_i.
NormalElement mul_gen_base(const ExtensionPresentation& pres, int i, BaseExp e,
                           RewriteStats* stats = nullptr);

// Normal form of x_j * x_i for j > i:
//   c_ij x_i x_j + q_ij^(0) + sum_k q_ij^(k) x_k.
NormalElement mul_gen_gen(const ExtensionPresentation& pres, int j, int i);

// Normal form of x_i * g for an arbitrary element g.
NormalElement gen_times(const ExtensionPresentation& pres, int i, const NormalElement& g,
                        RewriteStats* stats = nullptr);

// Normal form of f * g (bilinear, degree-filtered).
NormalElement multiply(const ExtensionPresentation& pres, const NormalElement& f,
                       const NormalElement& g, RewriteStats* stats = nullptr);

NormalElement power(const ExtensionPresentation& pres, const NormalElement& f, unsigned e);

// Closed form of x_i t^e for the one-variable base:
//   (a_i t + b_i)^e x_i + p_i(t) sum_{l<e} (a_i t + b_i)^l t^{e-1-l}.
// Computed directly, with no rewriting; the independent oracle for
// mul_gen_base. Two-variable bases are rejected.
NormalElement commrel_closed_form(const ExtensionPresentation& pres, int i, unsigned e);

// Letters for words over the alphabet {t_1..t_m, x_1..x_n}: letter
// 0..m-1 is a base variable, m..m+n-1 is a generator.
NormalElement letter_element(const ExtensionPresentation& pres, int letter);

struct DiamondResidual {
  std::vector<int> word;  // letters
  size_t split;           // position whose bracketing disagrees with split 1
  NormalElement diff;
  std::string word_str(const ExtensionPresentation& pres) const;
};

// For every word of length <= max_len over the alphabet and every split
// w = u*v, reduces NF(NF(u)*NF(v)) and compares across splits. An empty
// result certifies associativity of the rewriting up to that length.
std::vector<DiamondResidual> check_pbw_diamond(const ExtensionPresentation& pres,
                                               unsigned max_len,
                                               RewriteStats* stats = nullptr,
                                               uint64_t* max_steps_per_word = nullptr);

}  // namespace spbw
