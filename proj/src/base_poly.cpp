#include "spbw/base_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace spbw {

namespace {

void check_arity(int arity) {
  if (arity != 1 && arity != 2)
    throw std::invalid_argument("base poly: arity must be 1 or 2");
}

}  // namespace

BasePoly::BasePoly(int arity) : arity_(arity) { check_arity(arity); }

BasePoly BasePoly::constant(int arity, const Rational& c) {
  BasePoly p(arity);
  p.insert({0, 0}, c);
  return p;
}

BasePoly BasePoly::variable(int arity, int var) {
  check_arity(arity);
  if (var < 0 || var >= arity)
    throw std::invalid_argument("base poly: variable index out of range");
  BasePoly p(arity);
  BaseExp e{0, 0};
  e[var] = 1;
  p.insert(e, Rational(1));
  return p;
}

BasePoly BasePoly::monomial(int arity, BaseExp e, const Rational& c) {
  check_arity(arity);
  if (arity == 1 && e[1] != 0)
    throw std::invalid_argument("base poly: arity-1 monomial uses slot 1");
  BasePoly p(arity);
  p.insert(e, c);
  return p;
}

bool BasePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == BaseExp{0, 0});
}

Rational BasePoly::constant_term() const { return coeff({0, 0}); }

Rational BasePoly::coeff(BaseExp e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int BasePoly::degree() const {
  if (terms_.empty()) return -1;
  const BaseExp& e = terms_.rbegin()->first;
  return int(e[0] + e[1]);
}

void BasePoly::insert(BaseExp e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BasePoly& BasePoly::operator+=(const BasePoly& o) {
  if (arity_ != o.arity_) throw std::invalid_argument("base poly: arity mismatch in +");
  for (const auto& [e, c] : o.terms_) insert(e, c);
  return *this;
}

BasePoly& BasePoly::operator-=(const BasePoly& o) {
  if (arity_ != o.arity_) throw std::invalid_argument("base poly: arity mismatch in -");
  for (const auto& [e, c] : o.terms_) insert(e, -c);
  return *this;
}

BasePoly operator*(const BasePoly& a, const BasePoly& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("base poly: arity mismatch in *");
  BasePoly r(a.arity_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.insert({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
  return r;
}

BasePoly operator-(const BasePoly& a) {
  BasePoly r(a.arity_);
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

BasePoly BasePoly::scaled(const Rational& c) const {
  BasePoly r(arity_);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

BasePoly BasePoly::pow(unsigned e) const {
  BasePoly acc = BasePoly::constant(arity_, Rational(1));
  BasePoly base = *this;
  for (unsigned k = e; k > 0; k >>= 1) {
    if (k & 1) acc = acc * base;
    if (k > 1) base = base * base;
  }
  return acc;
}

BasePoly BasePoly::substitute(const AffineMap& s) const {
  if (s.arity() != arity_)
    throw std::invalid_argument("substitute: arity mismatch between polynomial and map");
  // Precompute powers of each image up to the needed degree.
  std::array<std::vector<BasePoly>, 2> pows;
  for (int j = 0; j < arity_; ++j) {
    uint32_t maxe = 0;
    for (const auto& [e, c] : terms_) maxe = std::max(maxe, e[j]);
    pows[j].push_back(BasePoly::constant(arity_, Rational(1)));
    BasePoly img = s.image(j);
    for (uint32_t k = 1; k <= maxe; ++k) pows[j].push_back(pows[j][k - 1] * img);
  }
  BasePoly r(arity_);
  for (const auto& [e, c] : terms_) {
    BasePoly term = pows[0][e[0]].scaled(c);
    if (arity_ == 2) term = term * pows[1][e[1]];
    r += term;
  }
  return r;
}

BasePoly BasePoly::derivative(int var) const {
  if (var < 0 || var >= arity_)
    throw std::invalid_argument("derivative: variable index out of range");
  BasePoly r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    BaseExp d = e;
    d[var] -= 1;
    r.insert(d, c * Rational(long(e[var])));
  }
  return r;
}

BasePoly BasePoly::div_exact(const BasePoly& f, const BasePoly& g) {
  if (f.arity_ != 1 || g.arity_ != 1)
    throw std::invalid_argument("div_exact: univariate only");
  if (g.is_zero()) throw std::domain_error("div_exact: division by zero polynomial");
  BasePoly rem = f;
  BasePoly quo(1);
  int dg = g.degree();
  Rational lg = g.coeff({uint32_t(dg), 0});
  while (!rem.is_zero() && rem.degree() >= dg) {
    int dr = rem.degree();
    Rational lr = rem.coeff({uint32_t(dr), 0});
    BasePoly m = BasePoly::monomial(1, {uint32_t(dr - dg), 0}, lr / lg);
    quo += m;
    rem -= m * g;
  }
  if (!rem.is_zero())
    throw std::logic_error("internal error: inexact polynomial division, remainder " + rem.str());
  return quo;
}

std::string BasePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending degree-lex.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else if (a.sign() < 0) {
      out << " - ";
      a = -a;
    } else {
      out << " + ";
    }
    bool has_var = e[0] + e[1] > 0;
    if (!has_var || !a.is_one()) {
      out << a.str();
      if (has_var) out << "*";
    }
    bool star = false;
    for (int j = 0; j < arity_; ++j) {
      if (e[j] == 0) continue;
      if (star) out << "*";
      out << (arity_ == 1 ? std::string("t") : "t" + std::to_string(j + 1));
      if (e[j] > 1) out << "^" << e[j];
      star = true;
    }
  }
  return out.str();
}

AffineMap::AffineMap(int arity, std::vector<Rational> scale, std::vector<Rational> shift)
    : arity_(arity), scale_(std::move(scale)), shift_(std::move(shift)) {
  check_arity(arity);
  if (int(scale_.size()) != arity || int(shift_.size()) != arity)
    throw std::invalid_argument("affine map: need one (scale, shift) pair per variable");
}

AffineMap AffineMap::identity(int arity) {
  std::vector<Rational> a(arity, Rational(1)), b(arity, Rational(0));
  return AffineMap(arity, a, b);
}

AffineMap AffineMap::univariate(const Rational& a, const Rational& b) {
  return AffineMap(1, {a}, {b});
}

bool AffineMap::is_identity() const {
  for (int j = 0; j < arity_; ++j)
    if (!scale_[j].is_one() || !shift_[j].is_zero()) return false;
  return true;
}

bool AffineMap::is_invertible() const {
  for (const auto& a : scale_)
    if (a.is_zero()) return false;
  return true;
}

AffineMap AffineMap::inverse() const {
  if (!is_invertible()) throw std::domain_error("affine map: not invertible");
  std::vector<Rational> a, b;
  for (int j = 0; j < arity_; ++j) {
    a.push_back(scale_[j].inverse());
    b.push_back(-shift_[j] / scale_[j]);
  }
  return AffineMap(arity_, a, b);
}

BasePoly AffineMap::image(int j) const {
  BasePoly img = BasePoly::variable(arity_, j).scaled(scale_[j]);
  img += BasePoly::constant(arity_, shift_[j]);
  return img;
}

BasePoly divided_difference(const BasePoly& f, const AffineMap& s, const BasePoly& p) {
  if (f.arity() != 1 || p.arity() != 1 || s.arity() != 1)
    throw std::invalid_argument("divided_difference: univariate only");
  if (s.is_identity()) return f.derivative(0) * p;
  BasePoly num = f.substitute(s) - f;
  BasePoly den = s.image(0) - BasePoly::variable(1, 0);
  return BasePoly::div_exact(num, den) * p;
}

}  // namespace spbw
