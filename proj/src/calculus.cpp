#include "spbw/calculus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spbw {

NormalElement DifferentialForm::coeff(const FormMonomial& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? NormalElement::zero(m_, n_) : it->second;
}

void DifferentialForm::add_term(FormMonomial w, const NormalElement& coeff) {
  if (int(w.letters.size()) != grade_)
    throw std::invalid_argument("form: wedge grade mismatch");
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms_.emplace(std::move(w), coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& o) {
  if (grade_ != o.grade_) throw std::invalid_argument("form: grade mismatch in +");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& o) {
  if (grade_ != o.grade_) throw std::invalid_argument("form: grade mismatch in -");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

DifferentialForm DifferentialForm::scaled(const Rational& c) const {
  DifferentialForm out(m_, n_, grade_);
  if (c.is_zero()) return out;
  for (const auto& [w, k] : terms_) out.terms_.emplace(w, k.scaled(c));
  return out;
}

std::string DifferentialForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (w.letters.empty()) {
      out << "(" << c.str() << ")";
      continue;
    }
    bool wedge = false;
    for (int l : w.letters) {
      if (wedge) out << "^";
      out << "d"
          << (l < m_ ? (m_ == 1 ? std::string("t") : "t" + std::to_string(l + 1))
                     : "x" + std::to_string(l - m_ + 1));
      wedge = true;
    }
    out << "*(" << c.str() << ")";
  }
  return out.str();
}

Calculus::Calculus(ExtensionPresentation pres)
    : pres_(std::move(pres)), autos_(build_standard_autos(pres_)) {
  gens_ = build_integral_generators();
}

DifferentialForm Calculus::zero_form(int grade) const {
  return DifferentialForm(pres_.m, pres_.n, grade);
}

DifferentialForm Calculus::d_letter(int letter) const {
  DifferentialForm f(pres_.m, pres_.n, 1);
  f.add_term(FormMonomial{{letter}}, NormalElement::one(pres_.m, pres_.n));
  return f;
}

DifferentialForm Calculus::grade0(const NormalElement& a) const {
  DifferentialForm f(pres_.m, pres_.n, 0);
  f.add_term(FormMonomial{}, a);
  return f;
}

DifferentialForm Calculus::basis_form(const FormMonomial& w) const {
  DifferentialForm f(pres_.m, pres_.n, w.grade());
  f.add_term(w, NormalElement::one(pres_.m, pres_.n));
  return f;
}

DifferentialForm Calculus::volume_form() const {
  FormMonomial all;
  all.letters.resize(dimension());
  std::iota(all.letters.begin(), all.letters.end(), 0);
  return basis_form(all);
}

DifferentialForm Calculus::right_mul(const DifferentialForm& f, const NormalElement& a) const {
  DifferentialForm out = zero_form(f.grade());
  for (const auto& [w, c] : f.terms()) out.add_term(w, multiply(pres_, c, a));
  return out;
}

DifferentialForm Calculus::left_action(const NormalElement& a, const DifferentialForm& f) const {
  DifferentialForm out = zero_form(f.grade());
  for (const auto& [w, c] : f.terms()) {
    NormalElement moved = a;
    for (int l : w.letters) moved = apply_auto(pres_, autos_[l], moved);
    out.add_term(w, multiply(pres_, moved, c));
  }
  return out;
}

std::optional<std::pair<Rational, FormMonomial>> Calculus::canonicalize_word(
    const std::vector<int>& word) const {
  const int m = pres_.m;
  std::vector<int> w = word;
  Rational scale(1);
  // Bubble sort; each adjacent swap of an out-of-order pair (u before v,
  // u > v) picks up the factor -1 (base/base), -a (generator past base)
  // or -c (generator past generator).
  for (size_t i = 0; i + 1 < w.size(); ++i)
    for (size_t k = 0; k + 1 < w.size() - i; ++k) {
      if (w[k] == w[k + 1]) return std::nullopt;
      if (w[k] <= w[k + 1]) continue;
      int u = w[k], v = w[k + 1];
      if (u < m)
        scale *= Rational(-1);
      else if (v < m)
        scale *= -pres_.sigma_scale(u - m, v);
      else
        scale *= -pres_.c_of(v - m, u - m);
      std::swap(w[k], w[k + 1]);
    }
  for (size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k] == w[k + 1]) return std::nullopt;
  return std::make_pair(scale, FormMonomial{w});
}

DifferentialForm Calculus::wedge(const DifferentialForm& f, const DifferentialForm& g) const {
  DifferentialForm out = zero_form(f.grade() + g.grade());
  for (const auto& [wf, cf] : f.terms())
    for (const auto& [wg, cg] : g.terms()) {
      // Move the left coefficient across the right wedge letters.
      NormalElement moved = cf;
      for (int l : wg.letters) moved = apply_auto(pres_, autos_[l], moved);
      std::vector<int> word = wf.letters;
      word.insert(word.end(), wg.letters.begin(), wg.letters.end());
      auto canon = canonicalize_word(word);
      if (!canon) continue;
      out.add_term(canon->second, multiply(pres_, moved, cg).scaled(canon->first));
    }
  return out;
}

std::vector<NormalElement> Calculus::partials(const NormalElement& f) const {
  const int m = pres_.m, n = pres_.n;
  std::vector<NormalElement> out(size_t(m + n), NormalElement::zero(m, n));

  for (const auto& [mono, c] : f.terms()) {
    // d/dt_j is the plain partial derivative.
    for (int j = 0; j < m; ++j) {
      if (mono.base[j] == 0) continue;
      Monomial down = mono;
      down.base[j] -= 1;
      out[j].add_term(std::move(down), c * Rational(long(mono.base[j])));
    }
    // d/dx_i:
    //   l_i prod_j a_ij^{-k_j} (t_j - b_ij)^{k_j}
    //       prod_{s<i} c_si^{-l_s} (x_s - q_si^{(i)})^{l_s}
    //       x_i^{l_i - 1} x_{i+1}^{l_{i+1}} ...
    for (int i = 0; i < n; ++i) {
      if (mono.gens[i] == 0) continue;
      Rational lead = c * Rational(long(mono.gens[i]));
      BasePoly base_factor = BasePoly::constant(m, Rational(1));
      for (int j = 0; j < m; ++j) {
        uint32_t k = mono.base[j];
        if (k == 0) continue;
        lead *= pres_.sigma_scale(i, j).inverse().pow(k);
        BasePoly shifted = BasePoly::variable(m, j);
        shifted -= BasePoly::constant(m, pres_.sigma_shift(i, j));
        base_factor = base_factor * shifted.pow(k);
      }
      NormalElement term = NormalElement::from_base(base_factor.scaled(lead), n);
      for (int s = 0; s < i; ++s) {
        uint32_t ls = mono.gens[s];
        if (ls == 0) continue;
        NormalElement shifted = NormalElement::generator(m, n, s);
        shifted -= NormalElement::scalar(m, n, pres_.q_of(s, i, i + 1));
        term = term.scaled(pres_.c_of(s, i).inverse().pow(ls));
        // The factors commute as written; power() only multiplies
        // monomials that are already in normal order.
        term = multiply(pres_, term, power(pres_, shifted, ls));
      }
      Monomial rest{{0, 0}, std::vector<uint32_t>(n, 0)};
      rest.gens[i] = mono.gens[i] - 1;
      for (int s = i + 1; s < n; ++s) rest.gens[s] = mono.gens[s];
      term = multiply(pres_, term, NormalElement::monomial(m, n, rest, Rational(1)));
      out[size_t(m + i)] += term;
    }
  }
  return out;
}

DifferentialForm Calculus::d(const DifferentialForm& f) const {
  const int m = pres_.m, n = pres_.n;
  DifferentialForm out = zero_form(f.grade() + 1);
  if (f.grade() >= dimension()) return out;
  const Rational sign = f.grade() % 2 == 0 ? Rational(1) : Rational(-1);
  for (const auto& [w, c] : f.terms()) {
    std::vector<NormalElement> parts = partials(c);
    DifferentialForm dc(m, n, 1);
    for (int l = 0; l < m + n; ++l) dc.add_term(FormMonomial{{l}}, parts[size_t(l)]);
    // d(dX_S c) = (-1)^{|S|} dX_S ^ d(c); the generator wedges are closed.
    out += wedge(basis_form(w), dc).scaled(sign);
  }
  return out;
}

NormalElement Calculus::pi_omega(const DifferentialForm& top) const {
  if (top.grade() != dimension())
    throw std::invalid_argument("pi_omega: form grade must equal the calculus dimension");
  FormMonomial all;
  all.letters.resize(dimension());
  std::iota(all.letters.begin(), all.letters.end(), 0);
  return top.coeff(all);
}

NormalElement Calculus::nu_omega(const NormalElement& a) const {
  NormalElement out = a;
  for (const auto& nu : autos_) out = apply_auto(pres_, nu, out);
  return out;
}

const IntegralGenerators& Calculus::integral_generators() const { return gens_; }

IntegralGenerators Calculus::build_integral_generators() const {
  const int dim = dimension();
  IntegralGenerators g;
  g.omega.resize(size_t(dim) + 1);
  g.omega_bar.resize(size_t(dim) + 1);
  // Subsets of {0..dim-1} in lexicographic order per grade.
  for (int j = 0; j <= dim; ++j) {
    std::vector<int> subset(static_cast<size_t>(j));
    std::iota(subset.begin(), subset.end(), 0);
    auto emit = [&](const std::vector<int>& s) {
      std::vector<int> comp;
      for (int l = 0; l < dim; ++l)
        if (std::find(s.begin(), s.end(), l) == s.end()) comp.push_back(l);
      g.omega[size_t(j)].push_back(basis_form(FormMonomial{s}));
      // The complement is scaled so that omega_bar ^ omega is exactly the
      // volume form.
      std::vector<int> word = comp;
      word.insert(word.end(), s.begin(), s.end());
      auto canon = canonicalize_word(word);
      DifferentialForm bar(pres_.m, pres_.n, dim - j);
      bar.add_term(FormMonomial{comp},
                   NormalElement::scalar(pres_.m, pres_.n, canon->first.inverse()));
      g.omega_bar[size_t(j)].push_back(std::move(bar));
    };
    if (j == 0) {
      emit({});
    } else {
      while (true) {
        emit(subset);
        int k = j - 1;
        while (k >= 0 && subset[size_t(k)] == dim - j + k) --k;
        if (k < 0) break;
        subset[size_t(k)] += 1;
        for (int l = k + 1; l < j; ++l) subset[size_t(l)] = subset[size_t(l - 1)] + 1;
      }
    }
  }
  return g;
}

DifferentialForm Calculus::reconstruct_residual(int k, const DifferentialForm& test) const {
  if (k < 0 || k > dimension() || test.grade() != k)
    throw std::invalid_argument("reconstruct: grade out of range");
  const IntegralGenerators& g = integral_generators();
  DifferentialForm sum = zero_form(k);
  for (size_t i = 0; i < g.omega[size_t(k)].size(); ++i) {
    NormalElement a = pi_omega(wedge(g.omega_bar[size_t(k)][i], test));
    sum += right_mul(g.omega[size_t(k)][i], a);
  }
  return sum - test;
}

unsigned Calculus::connected_kernel_dim(unsigned D) const {
  const int m = pres_.m, n = pres_.n;
  // Enumerate monomials of total degree <= D.
  std::vector<Monomial> monos;
  Monomial cur{{0, 0}, std::vector<uint32_t>(size_t(n), 0)};
  auto rec = [&](auto&& self, int var, unsigned left) -> void {
    if (var == m + n) {
      monos.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      if (var < m)
        cur.base[var] = e;
      else
        cur.gens[size_t(var - m)] = e;
      self(self, var + 1, left - e);
    }
    if (var < m)
      cur.base[var] = 0;
    else
      cur.gens[size_t(var - m)] = 0;
  };
  rec(rec, 0, D);

  std::map<Monomial, size_t, MonomialDegLex> mono_index;
  for (size_t idx = 0; idx < monos.size(); ++idx) mono_index[monos[idx]] = idx;

  // Columns of d, indexed by (letter, output monomial) rows.
  using Row = std::pair<int, size_t>;
  using Column = std::map<Row, Rational>;
  std::vector<Column> pivots;  // echelonized columns
  std::vector<Row> pivot_rows;
  unsigned rank = 0;

  for (const auto& mono : monos) {
    NormalElement e = NormalElement::monomial(m, n, mono, Rational(1));
    std::vector<NormalElement> parts = partials(e);
    Column col;
    for (int l = 0; l < m + n; ++l)
      for (const auto& [om, c] : parts[size_t(l)].terms()) col[{l, mono_index.at(om)}] = c;
    // Reduce against existing pivots. Pivots are kept mutually reduced,
    // so a single pass suffices.
    auto subtract_multiple = [](Column& target, const Rational& factor, const Column& src) {
      for (const auto& [row, val] : src) {
        auto jt = target.find(row);
        if (jt == target.end()) {
          target[row] = -factor * val;
        } else {
          jt->second -= factor * val;
          if (jt->second.is_zero()) target.erase(jt);
        }
      }
    };
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
      auto it = col.find(pivot_rows[pi]);
      if (it == col.end()) continue;
      Rational factor = it->second;
      subtract_multiple(col, factor, pivots[pi]);
    }
    if (col.empty()) continue;
    Row lead = col.begin()->first;
    Rational inv = col.begin()->second.inverse();
    for (auto& [row, val] : col) val *= inv;
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
      auto it = pivots[pi].find(lead);
      if (it == pivots[pi].end()) continue;
      Rational factor = it->second;
      subtract_multiple(pivots[pi], factor, col);
    }
    pivot_rows.push_back(lead);
    pivots.push_back(std::move(col));
    ++rank;
  }
  return unsigned(monos.size()) - rank;
}

}  // namespace spbw
