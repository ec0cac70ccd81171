#include "spbw/normal_form.hpp"

#include <sstream>
#include <stdexcept>

namespace spbw {

NormalElement NormalElement::scalar(int m, int n, const Rational& c) {
  NormalElement e(m, n);
  e.add_term(Monomial{{0, 0}, std::vector<uint32_t>(n, 0)}, c);
  return e;
}

NormalElement NormalElement::base_var(int m, int n, int j) {
  if (j < 0 || j >= m) throw std::invalid_argument("base variable index out of range");
  Monomial mono{{0, 0}, std::vector<uint32_t>(n, 0)};
  mono.base[j] = 1;
  NormalElement e(m, n);
  e.add_term(mono, Rational(1));
  return e;
}

NormalElement NormalElement::generator(int m, int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("generator index out of range");
  Monomial mono{{0, 0}, std::vector<uint32_t>(n, 0)};
  mono.gens[i] = 1;
  NormalElement e(m, n);
  e.add_term(mono, Rational(1));
  return e;
}

NormalElement NormalElement::monomial(int m, int n, Monomial mono, const Rational& c) {
  if (int(mono.gens.size()) != n) throw std::invalid_argument("monomial shape mismatch");
  if (m == 1 && mono.base[1] != 0) throw std::invalid_argument("monomial uses t2 with m=1");
  NormalElement e(m, n);
  e.add_term(std::move(mono), c);
  return e;
}

NormalElement NormalElement::from_base(const BasePoly& f, int n) {
  NormalElement e(f.arity(), n);
  for (const auto& [be, c] : f.terms())
    e.add_term(Monomial{be, std::vector<uint32_t>(n, 0)}, c);
  return e;
}

bool NormalElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

Rational NormalElement::scalar_value() const {
  return coeff(Monomial{{0, 0}, std::vector<uint32_t>(size_t(n_), 0)});
}

Rational NormalElement::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

int NormalElement::degree() const {
  if (terms_.empty()) return -1;
  return int(terms_.rbegin()->first.total_degree());
}

void NormalElement::add_term(Monomial mono, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(std::move(mono), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NormalElement& NormalElement::operator+=(const NormalElement& o) {
  if (m_ != o.m_ || n_ != o.n_) throw std::invalid_argument("element shape mismatch in +");
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

NormalElement& NormalElement::operator-=(const NormalElement& o) {
  if (m_ != o.m_ || n_ != o.n_) throw std::invalid_argument("element shape mismatch in -");
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

NormalElement operator-(const NormalElement& a) { return a.scaled(Rational(-1)); }

NormalElement NormalElement::scaled(const Rational& c) const {
  NormalElement r(m_, n_);
  if (c.is_zero()) return r;
  for (const auto& [mono, k] : terms_) r.terms_.emplace(mono, k * c);
  return r;
}

NormalElement NormalElement::base_mul(const BasePoly& f) const {
  if (f.arity() != m_) throw std::invalid_argument("base_mul arity mismatch");
  NormalElement r(m_, n_);
  for (const auto& [be, bc] : f.terms())
    for (const auto& [mono, c] : terms_) {
      Monomial prod = mono;
      prod.base[0] += be[0];
      prod.base[1] += be[1];
      r.add_term(std::move(prod), bc * c);
    }
  return r;
}

std::string NormalElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
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
    std::vector<std::string> factors;
    for (int j = 0; j < m_; ++j) {
      if (mono.base[j] == 0) continue;
      std::string v = m_ == 1 ? std::string("t") : "t" + std::to_string(j + 1);
      if (mono.base[j] > 1) v += "^" + std::to_string(mono.base[j]);
      factors.push_back(v);
    }
    for (int i = 0; i < n_; ++i) {
      if (mono.gens[i] == 0) continue;
      std::string v = "x" + std::to_string(i + 1);
      if (mono.gens[i] > 1) v += "^" + std::to_string(mono.gens[i]);
      factors.push_back(v);
    }
    if (factors.empty()) {
      out << a.str();
    } else {
      bool star = false;
      if (!a.is_one()) {
        out << a.str();
        star = true;
      }
      for (const auto& f : factors) {
        if (star) out << "*";
        out << f;
        star = true;
      }
    }
  }
  return out.str();
}

namespace {

void bump(RewriteStats* stats) {
  if (stats) ++stats->steps;
}

}  // namespace

NormalElement mul_gen_base(const ExtensionPresentation& pres, int i, BaseExp e,
                           RewriteStats* stats) {
  const int m = pres.m, n = pres.n;
  NormalElement acc = NormalElement::generator(m, n, i);
  // Multiply by t_j once per exponent unit; intermediate terms have
  // generator degree <= 1, so only the x_i t_j rule ever fires.
  for (int j = 0; j < m; ++j) {
    BasePoly sigma_tj = pres.sigma[i].image(j);  // a t_j + b
    for (uint32_t rep = 0; rep < e[j]; ++rep) {
      NormalElement next(m, n);
      for (const auto& [mono, c] : acc.terms()) {
        if (mono.gens[i] == 0) {
          Monomial up = mono;
          up.base[j] += 1;
          next.add_term(std::move(up), c);
          continue;
        }
        bump(stats);
        // r t^B x_i t_j = r t^B (sigma_i(t_j) x_i + p_i)
        BasePoly coef = BasePoly::monomial(m, mono.base, c);
        Monomial bare = mono;  // keeps x_i
        bare.base = {0, 0};
        next += NormalElement::monomial(m, n, bare, Rational(1)).base_mul(coef * sigma_tj);
        next += NormalElement::from_base(coef * pres.p[i], n);
      }
      acc = std::move(next);
    }
  }
  return acc;
}

NormalElement mul_gen_gen(const ExtensionPresentation& pres, int j, int i) {
  if (!(j > i)) throw std::invalid_argument("mul_gen_gen expects j > i");
  const int m = pres.m, n = pres.n;
  Monomial xixj{{0, 0}, std::vector<uint32_t>(n, 0)};
  xixj.gens[i] = 1;
  xixj.gens[j] = 1;
  NormalElement r = NormalElement::monomial(m, n, xixj, pres.c_of(i, j));
  r += NormalElement::scalar(m, n, pres.q_of(i, j, 0));
  for (int k = 0; k < n; ++k)
    r += NormalElement::generator(m, n, k).scaled(pres.q_of(i, j, k + 1));
  return r;
}

namespace {

// Normal form of x_i * x^beta, by the generator-past-generator rule.
NormalElement gen_into_word(const ExtensionPresentation& pres, int i,
                            const std::vector<uint32_t>& beta, RewriteStats* stats) {
  const int m = pres.m, n = pres.n;
  int k = -1;
  for (int g = 0; g < n; ++g)
    if (beta[g] > 0) {
      k = g;
      break;
    }
  if (k < 0 || i <= k) {
    Monomial mono{{0, 0}, beta};
    mono.gens[i] += 1;
    return NormalElement::monomial(m, n, std::move(mono), Rational(1));
  }
  bump(stats);
  // x_i x_k = c x_k x_i + q^(0) + sum q^(l) x_l, with k < i.
  std::vector<uint32_t> rest = beta;
  rest[k] -= 1;
  NormalElement tail = gen_into_word(pres, i, rest, stats);
  NormalElement out(m, n);
  // c x_k * (x_i x^rest). All c, q are scalars, so tail carries no base
  // exponents and its coefficients commute past x_k.
  for (const auto& [mono, c] : tail.terms()) {
    NormalElement prefixed = gen_into_word(pres, k, mono.gens, stats);
    out += prefixed.base_mul(BasePoly::monomial(m, mono.base, c * pres.c_of(k, i)));
  }
  Monomial rest_mono{{0, 0}, rest};
  out += NormalElement::monomial(m, n, rest_mono, pres.q_of(k, i, 0));
  for (int l = 0; l < n; ++l) {
    Rational ql = pres.q_of(k, i, l + 1);
    if (ql.is_zero()) continue;
    out += gen_into_word(pres, l, rest, stats).scaled(ql);
  }
  return out;
}

}  // namespace

NormalElement gen_times(const ExtensionPresentation& pres, int i, const NormalElement& g,
                        RewriteStats* stats) {
  const int m = pres.m, n = pres.n;
  NormalElement out(m, n);
  for (const auto& [mono, c] : g.terms()) {
    // x_i * (c t^B x^beta) = (x_i * t^B) * x^beta
    NormalElement head = mul_gen_base(pres, i, mono.base, stats);
    for (const auto& [hm, hc] : head.terms()) {
      BasePoly coef = BasePoly::monomial(m, hm.base, hc * c);
      if (hm.gens[i] == 0) {
        // delta part: no generator left of x^beta
        Monomial prod{{0, 0}, mono.gens};
        out += NormalElement::monomial(m, n, std::move(prod), Rational(1)).base_mul(coef);
      } else {
        out += gen_into_word(pres, i, mono.gens, stats).base_mul(coef);
      }
    }
  }
  return out;
}

NormalElement multiply(const ExtensionPresentation& pres, const NormalElement& f,
                       const NormalElement& g, RewriteStats* stats) {
  const int m = pres.m, n = pres.n;
  if (f.m() != m || f.n() != n || g.m() != m || g.n() != n)
    throw std::invalid_argument("multiply: elements do not match the presentation shape");
  NormalElement out(m, n);
  for (const auto& [mono, c] : f.terms()) {
    NormalElement h = g;
    for (int i = n - 1; i >= 0; --i)
      for (uint32_t rep = 0; rep < mono.gens[i]; ++rep) h = gen_times(pres, i, h, stats);
    out += h.base_mul(BasePoly::monomial(m, mono.base, c));
  }
  return out;
}

NormalElement power(const ExtensionPresentation& pres, const NormalElement& f, unsigned e) {
  NormalElement acc = NormalElement::one(pres.m, pres.n);
  for (unsigned k = 0; k < e; ++k) acc = multiply(pres, acc, f);
  return acc;
}

NormalElement commrel_closed_form(const ExtensionPresentation& pres, int i, unsigned e) {
  if (pres.m != 1)
    throw std::domain_error("commrel_closed_form: stated for the one-variable base only");
  BasePoly sig = pres.sigma[i].image(0);  // a t + b
  BasePoly t = BasePoly::variable(1, 0);
  NormalElement out = NormalElement::generator(1, pres.n, i).base_mul(sig.pow(e));
  BasePoly tail(1);
  for (unsigned l = 0; l < e; ++l) tail += sig.pow(l) * t.pow(e - 1 - l);
  out += NormalElement::from_base(pres.p[i] * tail, pres.n);
  return out;
}

NormalElement letter_element(const ExtensionPresentation& pres, int letter) {
  if (letter < pres.m) return NormalElement::base_var(pres.m, pres.n, letter);
  return NormalElement::generator(pres.m, pres.n, letter - pres.m);
}

std::string DiamondResidual::word_str(const ExtensionPresentation& pres) const {
  std::string s;
  for (int l : word) {
    if (!s.empty()) s += "*";
    s += l < pres.m ? pres.base_var_name(l) : ExtensionPresentation::gen_name(l - pres.m);
  }
  return s;
}

std::vector<DiamondResidual> check_pbw_diamond(const ExtensionPresentation& pres,
                                               unsigned max_len, RewriteStats* stats,
                                               uint64_t* max_steps_per_word) {
  const int alphabet = pres.m + pres.n;
  std::vector<DiamondResidual> residuals;
  if (max_steps_per_word) *max_steps_per_word = 0;

  std::vector<int> word;
  auto reduce_fold = [&](size_t from, size_t to, RewriteStats* st) {
    NormalElement acc = letter_element(pres, word[from]);
    for (size_t k = from + 1; k < to; ++k)
      acc = multiply(pres, acc, letter_element(pres, word[k]), st);
    return acc;
  };

  auto visit = [&](auto&& self) -> void {
    if (word.size() >= 2) {
      RewriteStats local;
      NormalElement ref = multiply(pres, reduce_fold(0, 1, &local),
                                   reduce_fold(1, word.size(), &local), &local);
      for (size_t split = 2; split < word.size(); ++split) {
        NormalElement alt = multiply(pres, reduce_fold(0, split, &local),
                                     reduce_fold(split, word.size(), &local), &local);
        if (alt != ref) residuals.push_back({word, split, alt - ref});
      }
      if (stats) stats->steps += local.steps;
      if (max_steps_per_word && local.steps > *max_steps_per_word)
        *max_steps_per_word = local.steps;
    }
    if (word.size() == max_len) return;
    for (int l = 0; l < alphabet; ++l) {
      word.push_back(l);
      self(self);
      word.pop_back();
    }
  };
  visit(visit);
  return residuals;
}

}  // namespace spbw
