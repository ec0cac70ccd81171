#pragma once

#include <stdexcept>
#include <string>

#include "spbw/presentation.hpp"

namespace spbw {

// Malformed document: bad JSON, unknown keys, wrong shapes, bad rationals.
struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Strict reader for the presentation file format:
//   {
//     "base_arity": 1 | 2,
//     "generators": n,
//     "sigma":   [ [ {"scale": r, "shift": r} x m ] x n ],
//     "delta_p": [ coeffs ] x n     // m=1: ascending t-coefficients;
//                                   // m=2: a single rational
//     "c":       [ r x n(n-1)/2 ],  // pairs (1,2),(1,3),...,(2,3),... i<j
//     "q":       [ [ r x (n+1) ] x n(n-1)/2 ]   // same order, index 0 first
//   }
// Rationals are strings "p/q" or integers; unknown keys are rejected.
ExtensionPresentation load_presentation(const std::string& path);
ExtensionPresentation presentation_from_json_text(const std::string& text);

std::string presentation_to_json_text(const ExtensionPresentation& pres);

}  // namespace spbw
