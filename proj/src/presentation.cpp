#include "spbw/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace spbw {

Rational ExtensionPresentation::c_of(int i, int j) const {
  if (i == j) return Rational(1);
  if (i < j) return c.at({i, j});
  return c.at({j, i}).inverse();
}

Rational ExtensionPresentation::q_of(int i, int j, int k) const {
  if (i == j) return Rational(0);
  if (i < j) return q.at({i, j}).at(k);
  return -(c.at({j, i}).inverse()) * q.at({j, i}).at(k);
}

ExtensionPresentation make_commutative(int m, int n) {
  ExtensionPresentation pres;
  pres.m = m;
  pres.n = n;
  for (int i = 0; i < n; ++i) {
    pres.sigma.push_back(AffineMap::identity(m));
    pres.p.push_back(BasePoly(m));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pres.c[{i, j}] = Rational(1);
      pres.q[{i, j}] = std::vector<Rational>(n + 1, Rational(0));
    }
  return pres;
}

std::vector<ShapeViolation> validate_shape(const ExtensionPresentation& pres) {
  std::vector<ShapeViolation> out;
  auto bad = [&](const std::string& field, const std::string& msg) {
    out.push_back({field, msg});
  };

  if (pres.m != 1 && pres.m != 2) {
    bad("base_arity", "base arity must be 1 or 2");
    return out;
  }
  if (pres.n < 1) {
    bad("generators", "need at least one generator");
    return out;
  }
  if (int(pres.sigma.size()) != pres.n) {
    bad("sigma", "expected one affine map per generator");
    return out;
  }
  if (int(pres.p.size()) != pres.n) {
    bad("delta_p", "expected one polynomial per generator");
    return out;
  }
  for (int i = 0; i < pres.n; ++i) {
    if (pres.sigma[i].arity() != pres.m)
      bad("sigma[" + std::to_string(i + 1) + "]", "arity differs from base arity");
    else
      for (int j = 0; j < pres.m; ++j)
        if (pres.sigma[i].scale(j).is_zero())
          bad("sigma[" + std::to_string(i + 1) + "]",
              "scale on " + pres.base_var_name(j) + " must be nonzero");
    if (pres.p[i].arity() != pres.m)
      bad("delta_p[" + std::to_string(i + 1) + "]", "arity differs from base arity");
    else if (pres.m == 2 && !pres.p[i].is_constant())
      bad("delta_p[" + std::to_string(i + 1) + "]",
          "p must be constant when the base has two variables");
  }
  for (int i = 0; i < pres.n; ++i)
    for (int j = i + 1; j < pres.n; ++j) {
      std::string pair = std::to_string(i + 1) + "," + std::to_string(j + 1);
      auto ic = pres.c.find({i, j});
      if (ic == pres.c.end())
        bad("c[" + pair + "]", "missing");
      else if (ic->second.is_zero())
        bad("c[" + pair + "]", "c must be nonzero");
      auto iq = pres.q.find({i, j});
      if (iq == pres.q.end())
        bad("q[" + pair + "]", "missing");
      else if (int(iq->second.size()) != pres.n + 1)
        bad("q[" + pair + "]", "expected " + std::to_string(pres.n + 1) + " coefficients");
    }
  return out;
}

std::string CaseLabel::id() const {
  std::string s = table + "/" + case_id;
  if (row != 1) s += " row " + std::to_string(row);
  return s;
}

namespace {

// A row under construction: residual conditions accumulate; only nonzero
// residuals are kept.
struct RowBuilder {
  CaseLabel label;

  RowBuilder(std::string table, std::string case_id, int row) {
    label.table = std::move(table);
    label.case_id = std::move(case_id);
    label.row = row;
  }
  void poly(const std::string& name, const BasePoly& v) {
    if (!v.is_zero()) label.residuals.push_back({name, v});
  }
  void scalar(const std::string& name, const Rational& v, int arity) {
    if (!v.is_zero()) label.residuals.push_back({name, BasePoly::constant(arity, v)});
  }
  CaseLabel take() {
    label.matched = label.residuals.empty();
    return label;
  }
};

// Zero iff p is a scalar multiple of (a-1)t + b; this is the equation
// ((a-1)t + b) p' = (a-1) p.
BasePoly linear_shape_residual(const BasePoly& p, const Rational& a, const Rational& b) {
  BasePoly lin = BasePoly::variable(1, 0).scaled(a - Rational(1));
  lin += BasePoly::constant(1, b);
  return lin * p.derivative(0) - p.scaled(a - Rational(1));
}

// Zero iff p is a scalar multiple of t.
BasePoly multiple_of_t_residual(const BasePoly& p) {
  return p - BasePoly::variable(1, 0).scaled(p.coeff({1, 0}));
}

BasePoly nonconstant_part(const BasePoly& p) {
  return p - BasePoly::constant(p.arity(), p.constant_term());
}

std::string gen_sub(int i) { return std::to_string(i + 1); }

// ---------------------------------------------------------------------
// Table 1: base k[t], two generators.
// ---------------------------------------------------------------------
std::vector<CaseLabel> classify_table1(const ExtensionPresentation& pres) {
  const Rational a1 = pres.sigma_scale(0, 0), b1 = pres.sigma_shift(0, 0);
  const Rational a2 = pres.sigma_scale(1, 0), b2 = pres.sigma_shift(1, 0);
  const BasePoly &p1 = pres.p[0], &p2 = pres.p[1];
  const Rational cc = pres.c_of(0, 1);
  const Rational q0 = pres.q_of(0, 1, 0), q1 = pres.q_of(0, 1, 1), q2 = pres.q_of(0, 1, 2);
  const Rational one(1);

  const bool a1_one = a1 == one, a2_one = a2 == one;
  const bool b1_zero = b1.is_zero(), b2_zero = b2.is_zero();

  std::vector<CaseLabel> out;
  auto row = [&](const std::string& id, int r) { return RowBuilder("Table1", id, r); };

  auto q_all_zero = [&](RowBuilder& rb) {
    rb.scalar("q12_0 = 0", q0, 1);
    rb.scalar("q12_1 = 0", q1, 1);
    rb.scalar("q12_2 = 0", q2, 1);
  };
  auto p_both_zero = [&](RowBuilder& rb) {
    rb.poly("p1 = 0", p1);
    rb.poly("p2 = 0", p2);
  };
  auto p_both_constant = [&](RowBuilder& rb) {
    rb.poly("p1 constant", nonconstant_part(p1));
    rb.poly("p2 constant", nonconstant_part(p2));
  };

  if (a1_one && a2_one) {
    std::string id = b1_zero ? (b2_zero ? "(a)" : "(b)") : (b2_zero ? "(c)" : "(d)");
    if (id == "(a)") {
      auto r1 = row(id, 1);
      p_both_zero(r1);
      q_all_zero(r1);
      out.push_back(r1.take());
      auto r2 = row(id, 2);
      r2.scalar("c12 = 1", cc - one, 1);
      r2.scalar("q12_1 = 0", q1, 1);
      r2.scalar("q12_2 = 0", q2, 1);
      out.push_back(r2.take());
    } else {
      auto r1 = row(id, 1);
      p_both_constant(r1);
      r1.scalar("c12 = 1", cc - one, 1);
      r1.scalar("q12_1 = 0", q1, 1);
      r1.scalar("q12_2 = 0", q2, 1);
      out.push_back(r1.take());
      auto r2 = row(id, 2);
      p_both_zero(r2);
      q_all_zero(r2);
      out.push_back(r2.take());
    }
  } else if (a1_one && !a2_one) {
    if (b1_zero) {  // (e)
      auto r1 = row("(e)", 1);
      r1.poly("p1 = 0", p1);
      r1.poly("p2 ~ (a2-1)t+b2", linear_shape_residual(p2, a2, b2));
      r1.scalar("c12 = 1", cc - one, 1);
      q_all_zero(r1);
      out.push_back(r1.take());
      auto r2 = row("(e)", 2);
      r2.poly("p1 constant", nonconstant_part(p1));
      r2.poly("p2 = 0", p2);
      r2.scalar("c12*a2 = 1", cc * a2 - one, 1);
      q_all_zero(r2);
      out.push_back(r2.take());
      if (cc != one && cc * a2 != one) {
        auto r3 = row("(e)", 3);
        p_both_zero(r3);
        q_all_zero(r3);
        out.push_back(r3.take());
      }
    } else {  // (f): no solution for all relations
      auto r1 = row("(f)", 1);
      r1.poly("p1 constant", nonconstant_part(p1));
      r1.poly("p2 ~ (a2-1)t+b2", linear_shape_residual(p2, a2, b2));
      r1.scalar("no solution: c12*b1*(a2-1) = 0", cc * b1 * (a2 - one), 1);
      out.push_back(r1.take());
    }
  } else if (!a1_one && a2_one) {
    if (b2_zero) {  // (g)
      auto r1 = row("(g)", 1);
      r1.poly("p1 ~ (a1-1)t+b1", linear_shape_residual(p1, a1, b1));
      r1.poly("p2 = 0", p2);
      r1.scalar("c12 = 1", cc - one, 1);
      q_all_zero(r1);
      out.push_back(r1.take());
      // The second row pins c to a1 itself: applying the maps to the
      // x2*t relation leaves p2 (c/a1 - 1), and the x2*x1*t overlap
      // forces the same value.
      auto r2 = row("(g)", 2);
      r2.poly("p1 = 0", p1);
      r2.poly("p2 constant", nonconstant_part(p2));
      r2.scalar("c12 = a1", cc - a1, 1);
      q_all_zero(r2);
      out.push_back(r2.take());
      if (cc != one && cc != a1) {
        auto r3 = row("(g)", 3);
        p_both_zero(r3);
        q_all_zero(r3);
        out.push_back(r3.take());
      }
    } else {  // (h): no solution for all relations
      auto r1 = row("(h)", 1);
      r1.poly("p1 ~ (a1-1)t+b1", linear_shape_residual(p1, a1, b1));
      r1.poly("p2 constant", nonconstant_part(p2));
      r1.scalar("no solution: b2*(a1-1)/c12 = 0", b2 * (a1 - one), 1);
      out.push_back(r1.take());
    }
  } else {  // (i)
    auto r1 = row("(i)", 1);
    r1.scalar("b1 = 0", b1, 1);
    r1.scalar("b2 = 0", b2, 1);
    r1.poly("p1 ~ t", multiple_of_t_residual(p1));
    r1.poly("p2 ~ t", multiple_of_t_residual(p2));
    r1.scalar("c12 = 1", cc - one, 1);
    q_all_zero(r1);
    out.push_back(r1.take());
  }
  return out;
}

// ---------------------------------------------------------------------
// Tables 2 (n=3) and 3 (general n): base k[t].
// ---------------------------------------------------------------------
std::vector<CaseLabel> classify_table_n(const ExtensionPresentation& pres) {
  const std::string table = pres.n == 3 ? "Table2" : "Table3";
  const Rational one(1);
  const int n = pres.n;

  std::vector<int> scaled;  // generators with a_i != 1
  bool all_b_zero_outside = true;
  for (int i = 0; i < n; ++i) {
    if (pres.sigma_scale(i, 0) != one)
      scaled.push_back(i);
    else if (!pres.sigma_shift(i, 0).is_zero())
      all_b_zero_outside = false;
  }
  bool some_b_nonzero = false;
  for (int i = 0; i < n; ++i)
    if (!pres.sigma_shift(i, 0).is_zero()) some_b_nonzero = true;

  std::vector<CaseLabel> out;
  auto for_pairs = [&](auto&& fn) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) fn(i, j);
  };
  auto pair_name = [&](int i, int j) { return gen_sub(i) + gen_sub(j); };
  auto q_zero_from = [&](RowBuilder& rb, int kmin) {
    for_pairs([&](int i, int j) {
      for (int k = kmin; k <= n; ++k)
        rb.scalar("q" + pair_name(i, j) + "_" + std::to_string(k) + " = 0",
                  pres.q_of(i, j, k), 1);
    });
  };
  auto c_all_one = [&](RowBuilder& rb) {
    for_pairs([&](int i, int j) {
      rb.scalar("c" + pair_name(i, j) + " = 1", pres.c_of(i, j) - one, 1);
    });
  };

  if (scaled.empty() && !some_b_nonzero) {  // (a)
    auto r1 = RowBuilder(table, "(a)", 1);
    for (int i = 0; i < n; ++i) r1.poly("p" + gen_sub(i) + " = 0", pres.p[i]);
    q_zero_from(r1, 0);
    out.push_back(r1.take());
    auto r2 = RowBuilder(table, "(a)", 2);
    c_all_one(r2);
    q_zero_from(r2, 1);
    out.push_back(r2.take());
  } else if (scaled.empty()) {  // (b)
    auto r1 = RowBuilder(table, "(b)", 1);
    for (int i = 0; i < n; ++i)
      r1.poly("p" + gen_sub(i) + " constant", nonconstant_part(pres.p[i]));
    c_all_one(r1);
    q_zero_from(r1, 1);
    out.push_back(r1.take());
    auto r2 = RowBuilder(table, "(b)", 2);
    for (int i = 0; i < n; ++i) r2.poly("p" + gen_sub(i) + " = 0", pres.p[i]);
    q_zero_from(r2, 0);
    out.push_back(r2.take());
  } else if (int(scaled.size()) < n && all_b_zero_outside) {  // (c)
    auto r1 = RowBuilder(table, "(c)", 1);
    for (int i = 0; i < n; ++i) {
      Rational ai = pres.sigma_scale(i, 0), bi = pres.sigma_shift(i, 0);
      if (ai == one)
        r1.poly("p" + gen_sub(i) + " = 0", pres.p[i]);
      else
        r1.poly("p" + gen_sub(i) + " ~ (a" + gen_sub(i) + "-1)t+b" + gen_sub(i),
                linear_shape_residual(pres.p[i], ai, bi));
    }
    // The scaled sigmas must share one fixed point, or the maps nu_x do
    // not all extend; checked as b_r (a_s - 1) = b_s (a_r - 1).
    for (size_t u = 0; u + 1 < scaled.size(); ++u)
      for (size_t v = u + 1; v < scaled.size(); ++v) {
        int r = scaled[u], s = scaled[v];
        r1.scalar("b" + gen_sub(r) + "*(a" + gen_sub(s) + "-1) = b" + gen_sub(s) +
                      "*(a" + gen_sub(r) + "-1)",
                  pres.sigma_shift(r, 0) * (pres.sigma_scale(s, 0) - one) -
                      pres.sigma_shift(s, 0) * (pres.sigma_scale(r, 0) - one),
                  1);
      }
    c_all_one(r1);
    q_zero_from(r1, 0);
    out.push_back(r1.take());
  } else if (int(scaled.size()) == n) {  // (d)
    auto r1 = RowBuilder(table, "(d)", 1);
    for (int i = 0; i < n; ++i) {
      r1.scalar("b" + gen_sub(i) + " = 0", pres.sigma_shift(i, 0), 1);
      r1.poly("p" + gen_sub(i) + " ~ t", multiple_of_t_residual(pres.p[i]));
    }
    c_all_one(r1);
    q_zero_from(r1, 0);
    out.push_back(r1.take());
  }
  return out;
}

// ---------------------------------------------------------------------
// Two-variable base: the condition system that makes all standard maps
// extend and commute, with the convention c_{ji} = c_{ij}^{-1}.
// ---------------------------------------------------------------------
std::vector<CaseLabel> classify_two_var(const ExtensionPresentation& pres) {
  const Rational one(1);
  const int n = pres.n;
  RowBuilder rb("TwoVarConditions", "conditions", 1);

  auto a = [&](int i, int l) { return pres.sigma_scale(i, l); };
  auto b = [&](int i, int l) { return pres.sigma_shift(i, l); };
  auto qg = [&](int i, int j, int g) { return pres.q_of(i, j, g + 1); };
  auto nm = [&](int i) { return gen_sub(i); };
  auto var = [&](int l) { return std::to_string(l + 1); };

  for (int l = 0; l < 2; ++l) {
    for (int i = 0; i < n; ++i)
      rb.poly("p" + nm(i) + "*(a" + nm(i) + var(l) + "-1) = 0",
              pres.p[i].scaled(a(i, l) - one));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        rb.scalar("q" + nm(i) + nm(j) + "_0*(a" + nm(j) + var(l) + "*a" + nm(i) + var(l) + "-1) = 0",
                  pres.q_of(i, j, 0) * (a(j, l) * a(i, l) - one), 2);
        for (int k = 0; k < n; ++k)
          rb.scalar("q" + nm(i) + nm(j) + "_" + std::to_string(k + 1) + "*(a" + nm(j) + var(l) +
                        "*a" + nm(i) + var(l) + "-a" + nm(k) + var(l) + ") = 0",
                    qg(i, j, k) * (a(j, l) * a(i, l) - a(k, l)), 2);
      }
    for (int s = 0; s < n; ++s)
      for (int i = 0; i < n; ++i) {
        if (s == i) continue;
        if (s < i)
          rb.scalar("b" + nm(s) + var(l) + "*(a" + nm(i) + var(l) + "-1) = b" + nm(i) + var(l) +
                        "*(a" + nm(s) + var(l) + "-1)",
                    b(s, l) * (a(i, l) - one) - b(i, l) * (a(s, l) - one), 2);
        rb.scalar("q(" + nm(s) + "," + nm(i) + ")_" + nm(s) + "*(a" + nm(i) + var(l) + "-1) = 0",
                  qg(s, i, s) * (a(i, l) - one), 2);
        rb.poly("p" + nm(i) + "*(c(" + nm(s) + "," + nm(i) + ")-a" + nm(s) + var(l) + ") = b" +
                    nm(i) + var(l) + "*q(" + nm(s) + "," + nm(i) + ")_" + nm(s),
                pres.p[i].scaled(pres.c_of(s, i) - a(s, l)) -
                    BasePoly::constant(2, b(i, l) * qg(s, i, s)));
      }
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::string ij = "(" + nm(i) + "," + nm(j) + ")";
      for (int s = 0; s < n; ++s) {
        std::string si = "(" + nm(s) + "," + nm(i) + ")", sj = "(" + nm(s) + "," + nm(j) + ")";
        Rational csj = pres.c_of(s, j), csi = pres.c_of(s, i), cij = pres.c_of(i, j);
        rb.scalar("q" + ij + "_" + nm(s) + "*(c" + sj + "*c" + si + "-1) = 0",
                  qg(i, j, s) * (csj * csi - one), 2);
        rb.scalar("q" + sj + "_" + nm(s) + "*(c" + ij + "-1) = q" + ij + "_" + nm(i) + "*(c" + sj + "-1)",
                  qg(s, j, s) * (cij - one) - qg(i, j, i) * (csj - one), 2);
        rb.scalar("q" + si + "_" + nm(s) + "*(c" + ij + "-1) = q" + ij + "_" + nm(j) + "*(c" + si + "-1)",
                  qg(s, i, s) * (cij - one) - qg(i, j, j) * (csi - one), 2);
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          rb.scalar("q" + ij + "_" + nm(k) + "*(c" + sj + "*c" + si + "-c(" + nm(s) + "," + nm(k) + ")) = 0",
                    qg(i, j, k) * (csj * csi - pres.c_of(s, k)), 2);
        }
        Rational acc(0);
        for (int k = 0; k < s; ++k) acc += pres.c_of(k, s).inverse() * qg(i, j, k) * qg(k, s, s);
        for (int k = s + 1; k < n; ++k) acc -= qg(i, j, k) * qg(k, s, s);
        acc += qg(s, i, s) * qg(s, j, s) * (one - cij);
        acc += (csj * csi - one) * pres.q_of(i, j, 0);
        rb.scalar("q" + ij + " closure sum, s=" + nm(s), acc, 2);
      }
    }

  std::vector<CaseLabel> out;
  out.push_back(rb.take());
  return out;
}

}  // namespace

std::vector<CaseLabel> classify_case(const ExtensionPresentation& pres) {
  if (pres.m == 2) return classify_two_var(pres);
  if (pres.n == 2) return classify_table1(pres);
  return classify_table_n(pres);
}

}  // namespace spbw
