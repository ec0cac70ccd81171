#pragma once

#include <string>
#include <vector>

#include "spbw/normal_form.hpp"

namespace spbw {

// A candidate algebra endomorphism, given by the images of all base
// variables and generators.
struct GeneratorImages {
  std::string name;
  std::vector<NormalElement> base_images;  // m entries
  std::vector<NormalElement> gen_images;   // n entries

  const NormalElement& image_of_letter(int m, int letter) const {
    return letter < m ? base_images.at(letter) : gen_images.at(letter - m);
  }
};

GeneratorImages identity_images(const ExtensionPresentation& pres);

// The standard maps nu_{t_1..t_m}, nu_{x_1..x_n}, in that order:
//   nu_t(t_j) = t_j,                nu_t_l(x_i) = a_i x_i + p_i'   (m=1)
//                                   nu_t_l(x_i) = a_{il} x_i       (m=2)
//   nu_x_i(t_j) = sigma_i^{-1}(t_j), nu_x_i(x_i) = x_i,
//   nu_x_i(x_j) = c_ij x_j + q_ij^(i)                  for i < j,
//   nu_x_i(x_j) = c_ji^{-1} x_j - c_ji^{-1} q_ji^(i)   for i > j.
std::vector<GeneratorImages> build_standard_autos(const ExtensionPresentation& pres);

// Image of f: replace every variable in every monomial by its image,
// multiply in monomial order, reduce to normal form. Linear in f.
NormalElement apply_auto(const ExtensionPresentation& pres, const GeneratorImages& nu,
                         const NormalElement& f);

struct ResidualReport {
  // (relation or pair id, LHS - RHS in normal form), every entry evaluated.
  std::vector<std::pair<std::string, NormalElement>> residuals;
  bool all_zero = true;

  void add(std::string id, NormalElement r) {
    if (!r.is_zero()) all_zero = false;
    residuals.push_back({std::move(id), std::move(r)});
  }
  std::vector<std::string> nonzero_ids() const;
};

// Applies nu to both sides of every defining relation of the presentation
// and reports the differences. all_zero iff nu extends to an algebra
// endomorphism.
ResidualReport check_respects_relations(const ExtensionPresentation& pres,
                                        const GeneratorImages& nu);

// Builds the explicit inverse of the affine-triangular images and verifies
// both composites are the identity on all variables. False when a leading
// scalar is not invertible or the shape is not affine-triangular.
bool check_automorphism(const ExtensionPresentation& pres, const GeneratorImages& nu);

// Residuals (nu o mu)(g) - (mu o nu)(g) over all unordered pairs and all
// variables g.
ResidualReport check_pairwise_commute(const ExtensionPresentation& pres,
                                      const std::vector<GeneratorImages>& nus);

}  // namespace spbw
