#pragma once

#include <string>
#include <vector>

#include "spincalc/ring/element.hpp"
#include "spincalc/ring/preset.hpp"

namespace spincalc::ring {

/// H*(C x Pic^d(C)) with the Chern classes c1..c_{r+1} of the dual
/// tautological bundle and the kernel class k. Generators in order:
/// eta, gamma, theta, c1, ..., c_{r+1}, k.
PresetPtr preset_jacobian_product(int g, int d, int r);

/// H*(C x C) for a curve of genus g: F1, F2, Delta with top degree 2.
PresetPtr preset_surface_product(int g);

/// Relative calculus on a universal curve over a base of genus g curves:
/// omega (relative dualizing class) and lambda (pulled back from the base).
PresetPtr preset_universal_curve(int g);

/// A ring with no rules and no integration, for symbolic inputs.
PresetPtr preset_free(const std::string& key, std::vector<Generator> generators);

/// Builds a preset from its key string, e.g. "jac:g=11,d=14,r=4".
PresetPtr preset_from_key(const std::string& key);

/// (2g-2)(F1 + F2).
RingElem surface_canonical_class(const PresetPtr& surface);

/// 1 + (t^2 + t.K)/2 for a degree-1 class t on C x C.
long adjunction_genus(const RingElem& t);

/// Push-forward along the universal curve of a degree-2 element:
/// omega^2 -> 12 lambda, omega*lambda -> (2g-2) lambda, lambda^2 -> 0.
RingElem pushforward_relative(const RingElem& e);

/// Degree-2 part of c(J_1(eta)) / c(f^* f_* eta) for the spin bundle
/// eta = omega/2, with c_1(f_* eta) = -lambda/4.
RingElem porteous_integrand(const PresetPtr& curve);

}  // namespace spincalc::ring
