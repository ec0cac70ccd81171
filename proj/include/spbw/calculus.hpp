#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spbw/automorphisms.hpp"

namespace spbw {

// A wedge monomial dX_{l_1} ^ ... ^ dX_{l_k} with strictly increasing
// letters (0..m-1 base differentials, then m..m+n-1 generator
// differentials).
struct FormMonomial {
  std::vector<int> letters;

  int grade() const { return int(letters.size()); }
  friend bool operator==(const FormMonomial& a, const FormMonomial& b) {
    return a.letters == b.letters;
  }
  friend bool operator<(const FormMonomial& a, const FormMonomial& b) {
    return a.letters < b.letters;
  }
};

// A homogeneous differential form: right-module combination of increasing
// wedge monomials, coefficients written on the right.
class DifferentialForm {
 public:
  DifferentialForm(int m, int n, int grade) : m_(m), n_(n), grade_(grade) {}

  int m() const { return m_; }
  int n() const { return n_; }
  int grade() const { return grade_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<FormMonomial, NormalElement>& terms() const { return terms_; }
  NormalElement coeff(const FormMonomial& w) const;

  void add_term(FormMonomial w, const NormalElement& coeff);
  DifferentialForm& operator+=(const DifferentialForm& o);
  DifferentialForm& operator-=(const DifferentialForm& o);
  friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
  friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }
  friend bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
    return a.grade_ == b.grade_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const DifferentialForm& a, const DifferentialForm& b) { return !(a == b); }
  DifferentialForm scaled(const Rational& c) const;

  std::string str() const;

 private:
  int m_, n_, grade_;
  std::map<FormMonomial, NormalElement> terms_;
};

struct IntegralGenerators {
  // omega[j][i] has grade j, omega_bar[j][i] has grade (m+n)-j; the pair
  // satisfies omega_bar[j][i] ^ omega[j][i] = volume form.
  std::vector<std::vector<DifferentialForm>> omega;
  std::vector<std::vector<DifferentialForm>> omega_bar;
};

// The differential calculus attached to a presentation through its
// standard maps. Constructing it does not verify that the maps extend or
// commute; certification does that first.
class Calculus {
 public:
  explicit Calculus(ExtensionPresentation pres);

  const ExtensionPresentation& presentation() const { return pres_; }
  const std::vector<GeneratorImages>& autos() const { return autos_; }
  int dimension() const { return pres_.dimension(); }

  DifferentialForm zero_form(int grade) const;
  // dX_letter as a grade-1 form with unit coefficient.
  DifferentialForm d_letter(int letter) const;
  // A grade-0 form wrapping an algebra element.
  DifferentialForm grade0(const NormalElement& a) const;
  // Wedge of the letters of w with unit coefficient.
  DifferentialForm basis_form(const FormMonomial& w) const;
  DifferentialForm volume_form() const;
  // Right multiplication by an algebra element.
  DifferentialForm right_mul(const DifferentialForm& f, const NormalElement& a) const;

  // a . (dX_S f) = dX_S (nu_S(a) f), extended linearly.
  DifferentialForm left_action(const NormalElement& a, const DifferentialForm& f) const;

  // Canonicalize an arbitrary word of differentials to increasing order:
  // nullopt on a repeated letter, otherwise the scalar picked up by the
  // swaps (-a, -c, or -1 per out-of-order pair).
  std::optional<std::pair<Rational, FormMonomial>> canonicalize_word(
      const std::vector<int>& word) const;

  DifferentialForm wedge(const DifferentialForm& f, const DifferentialForm& g) const;

  // Per-variable partial derivatives of an algebra element, one entry per
  // letter, so that d(f) = sum_l dX_l partial_l(f).
  std::vector<NormalElement> partials(const NormalElement& f) const;

  DifferentialForm d(const DifferentialForm& f) const;

  // Reads a off (volume form) a; shape error unless grade = m+n.
  NormalElement pi_omega(const DifferentialForm& top) const;

  // The composite of all standard maps, applied base-first then
  // generators in index order; satisfies a . omega = omega . nu_omega(a).
  NormalElement nu_omega(const NormalElement& a) const;

  const IntegralGenerators& integral_generators() const;

  // sum_i omega_i^k pi(omega_bar_i^{dim-k} ^ test) - test; zero for every
  // test certifies the reconstruction identity at grade k.
  DifferentialForm reconstruct_residual(int k, const DifferentialForm& test) const;

  // Dimension of ker(d) on the span of monomials of total degree <= D,
  // computed by exact Gaussian elimination. 1 means connected up to D.
  unsigned connected_kernel_dim(unsigned D) const;

 private:
  IntegralGenerators build_integral_generators() const;

  ExtensionPresentation pres_;
  std::vector<GeneratorImages> autos_;
  IntegralGenerators gens_;  // eager, so const methods share no mutable state
};

}  // namespace spbw
