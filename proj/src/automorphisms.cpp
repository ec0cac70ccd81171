#include "spbw/automorphisms.hpp"

#include <optional>
#include <stdexcept>

namespace spbw {

std::vector<std::string> ResidualReport::nonzero_ids() const {
  std::vector<std::string> out;
  for (const auto& [id, r] : residuals)
    if (!r.is_zero()) out.push_back(id);
  return out;
}

GeneratorImages identity_images(const ExtensionPresentation& pres) {
  GeneratorImages nu;
  nu.name = "id";
  for (int j = 0; j < pres.m; ++j)
    nu.base_images.push_back(NormalElement::base_var(pres.m, pres.n, j));
  for (int i = 0; i < pres.n; ++i)
    nu.gen_images.push_back(NormalElement::generator(pres.m, pres.n, i));
  return nu;
}

std::vector<GeneratorImages> build_standard_autos(const ExtensionPresentation& pres) {
  const int m = pres.m, n = pres.n;
  std::vector<GeneratorImages> out;

  for (int l = 0; l < m; ++l) {
    GeneratorImages nu;
    nu.name = "nu_" + pres.base_var_name(l);
    for (int j = 0; j < m; ++j) nu.base_images.push_back(NormalElement::base_var(m, n, j));
    for (int i = 0; i < n; ++i) {
      NormalElement img = NormalElement::generator(m, n, i).scaled(pres.sigma_scale(i, l));
      if (m == 1) img += NormalElement::from_base(pres.p[i].derivative(0), n);
      nu.gen_images.push_back(std::move(img));
    }
    out.push_back(std::move(nu));
  }

  for (int i = 0; i < n; ++i) {
    GeneratorImages nu;
    nu.name = "nu_" + ExtensionPresentation::gen_name(i);
    AffineMap inv = pres.sigma[i].is_invertible() ? pres.sigma[i].inverse()
                                                  : AffineMap::identity(m);
    for (int j = 0; j < m; ++j)
      nu.base_images.push_back(NormalElement::from_base(inv.image(j), n));
    for (int j = 0; j < n; ++j) {
      if (j == i) {
        nu.gen_images.push_back(NormalElement::generator(m, n, j));
      } else if (i < j) {
        NormalElement img = NormalElement::generator(m, n, j).scaled(pres.c_of(i, j));
        img += NormalElement::scalar(m, n, pres.q_of(i, j, i + 1));
        nu.gen_images.push_back(std::move(img));
      } else {
        Rational cinv = pres.c_of(j, i).inverse();
        NormalElement img = NormalElement::generator(m, n, j).scaled(cinv);
        img -= NormalElement::scalar(m, n, cinv * pres.q_of(j, i, i + 1));
        nu.gen_images.push_back(std::move(img));
      }
    }
    out.push_back(std::move(nu));
  }
  return out;
}

NormalElement apply_auto(const ExtensionPresentation& pres, const GeneratorImages& nu,
                         const NormalElement& f) {
  const int m = pres.m, n = pres.n;
  NormalElement out(m, n);
  for (const auto& [mono, c] : f.terms()) {
    NormalElement img = NormalElement::scalar(m, n, c);
    for (int j = 0; j < m; ++j)
      for (uint32_t rep = 0; rep < mono.base[j]; ++rep)
        img = multiply(pres, img, nu.base_images.at(j));
    for (int i = 0; i < n; ++i)
      for (uint32_t rep = 0; rep < mono.gens[i]; ++rep)
        img = multiply(pres, img, nu.gen_images.at(i));
    out += img;
  }
  return out;
}

ResidualReport check_respects_relations(const ExtensionPresentation& pres,
                                        const GeneratorImages& nu) {
  const int m = pres.m, n = pres.n;
  ResidualReport report;

  // Base variables commute among themselves.
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) {
      NormalElement lhs = multiply(pres, nu.base_images[k], nu.base_images[j]);
      NormalElement rhs = multiply(pres, nu.base_images[j], nu.base_images[k]);
      report.add(pres.base_var_name(k) + "*" + pres.base_var_name(j), lhs - rhs);
    }

  // x_i t_j = sigma_i(t_j) x_i + p_i
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      NormalElement lhs = multiply(pres, nu.gen_images[i], nu.base_images[j]);
      BaseExp e{0, 0};
      e[j] = 1;
      NormalElement rhs = apply_auto(pres, nu, mul_gen_base(pres, i, e));
      report.add(ExtensionPresentation::gen_name(i) + "*" + pres.base_var_name(j), lhs - rhs);
    }

  // x_j x_i = c_ij x_i x_j + q terms, i < j
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      NormalElement lhs = multiply(pres, nu.gen_images[j], nu.gen_images[i]);
      NormalElement rhs = apply_auto(pres, nu, mul_gen_gen(pres, j, i));
      report.add(ExtensionPresentation::gen_name(j) + "*" + ExtensionPresentation::gen_name(i),
                 lhs - rhs);
    }
  return report;
}

namespace {

// The standard images are affine-triangular: nu(t_j) affine in the base,
// nu(x_i) = gamma_i x_i + eta_i(t). Extract that shape or bail out.
struct TriangularShape {
  AffineMap base = AffineMap::identity(1);
  std::vector<Rational> gamma;
  std::vector<BasePoly> eta;
};

std::optional<TriangularShape> extract_triangular(const ExtensionPresentation& pres,
                                                  const GeneratorImages& nu) {
  const int m = pres.m, n = pres.n;
  std::vector<Rational> scale(m), shift(m);
  for (int j = 0; j < m; ++j) {
    const NormalElement& img = nu.base_images.at(j);
    Monomial tj{{0, 0}, std::vector<uint32_t>(n, 0)};
    tj.base[j] = 1;
    Monomial unit{{0, 0}, std::vector<uint32_t>(n, 0)};
    scale[j] = img.coeff(tj);
    shift[j] = img.coeff(unit);
    if (scale[j].is_zero()) return std::nullopt;
    NormalElement affine = NormalElement::base_var(m, n, j).scaled(scale[j]);
    affine += NormalElement::scalar(m, n, shift[j]);
    if (affine != img) return std::nullopt;
  }
  TriangularShape shape;
  shape.base = AffineMap(m, scale, shift);
  for (int i = 0; i < n; ++i) {
    const NormalElement& img = nu.gen_images.at(i);
    Monomial xi{{0, 0}, std::vector<uint32_t>(n, 0)};
    xi.gens[i] = 1;
    Rational gamma = img.coeff(xi);
    if (gamma.is_zero()) return std::nullopt;
    BasePoly eta(m);
    NormalElement rest = img - NormalElement::generator(m, n, i).scaled(gamma);
    for (const auto& [mono, c] : rest.terms()) {
      if (mono.gen_degree() != 0) return std::nullopt;
      eta += BasePoly::monomial(m, mono.base, c);
    }
    shape.gamma.push_back(gamma);
    shape.eta.push_back(eta);
  }
  return shape;
}

}  // namespace

bool check_automorphism(const ExtensionPresentation& pres, const GeneratorImages& nu) {
  auto shape = extract_triangular(pres, nu);
  if (!shape) return false;

  GeneratorImages inv;
  inv.name = nu.name + "^-1";
  AffineMap base_inv = shape->base.inverse();
  for (int j = 0; j < pres.m; ++j)
    inv.base_images.push_back(NormalElement::from_base(base_inv.image(j), pres.n));
  for (int i = 0; i < pres.n; ++i) {
    Rational ginv = shape->gamma[i].inverse();
    NormalElement img = NormalElement::generator(pres.m, pres.n, i).scaled(ginv);
    img -= NormalElement::from_base(shape->eta[i].substitute(base_inv).scaled(ginv), pres.n);
    inv.gen_images.push_back(std::move(img));
  }

  GeneratorImages id = identity_images(pres);
  for (int j = 0; j < pres.m; ++j) {
    if (apply_auto(pres, nu, inv.base_images[j]) != id.base_images[j]) return false;
    if (apply_auto(pres, inv, nu.base_images[j]) != id.base_images[j]) return false;
  }
  for (int i = 0; i < pres.n; ++i) {
    if (apply_auto(pres, nu, inv.gen_images[i]) != id.gen_images[i]) return false;
    if (apply_auto(pres, inv, nu.gen_images[i]) != id.gen_images[i]) return false;
  }
  return true;
}

ResidualReport check_pairwise_commute(const ExtensionPresentation& pres,
                                      const std::vector<GeneratorImages>& nus) {
  ResidualReport report;
  for (size_t u = 0; u + 1 < nus.size(); ++u)
    for (size_t v = u + 1; v < nus.size(); ++v) {
      auto both = [&](const NormalElement& g, const std::string& gname) {
        NormalElement uv = apply_auto(pres, nus[u], apply_auto(pres, nus[v], g));
        NormalElement vu = apply_auto(pres, nus[v], apply_auto(pres, nus[u], g));
        report.add("(" + nus[u].name + "," + nus[v].name + ") on " + gname, uv - vu);
      };
      for (int j = 0; j < pres.m; ++j)
        both(NormalElement::base_var(pres.m, pres.n, j), pres.base_var_name(j));
      for (int i = 0; i < pres.n; ++i)
        both(NormalElement::generator(pres.m, pres.n, i), ExtensionPresentation::gen_name(i));
    }
  return report;
}

}  // namespace spbw
