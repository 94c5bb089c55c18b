#pragma once

#include <string>
#include <vector>

#include "spincalc/bn/evaluate.hpp"
#include "spincalc/ring/element.hpp"

namespace spincalc::genus12 {

/// C x W^4_14(C) for a general curve C of genus 11.
const bn::BNContext& context();

/// Chern classes c_1, c_2, ... of a bundle; entries beyond the stored
/// range read as zero.
struct BundleChern {
  std::string name;
  std::vector<ring::RingElem> classes;

  ring::RingElem c(int i) const;
};

enum class Bundle { A2, B2 };

/// c_1..c_3 of A_2 (sections of L^2(-2y)) and B_2 (sections of L^2(-y-q)).
BundleChern bundle_chern(Bundle which);

/// c_1..c_3 of Sym^2 of a rank r+1 bundle.
BundleChern sym2_chern(const BundleChern& v, int r);

/// c_t(J_1(P)^dual)^{-1} on C x Pic^d(C), C of genus g_curve.
ring::RingElem jet_inverse_chern(int g_curve, int d);

/// [X] and [Y] as ring elements, checked against their re-derivation
/// from the inverse Chern series; a disagreement throws InvariantViolation.
ring::RingElem class_locus(bn::LocusSide side);

/// c_1 of U (X side) or V (Y side), involving the kernel class k.
ring::RingElem line_class(bn::LocusSide side);

}  // namespace spincalc::genus12
