#pragma once

#include "spincalc/bn/evaluate.hpp"
#include "spincalc/genus12/bundles.hpp"
#include "spincalc/pic/classes.hpp"
#include "spincalc/ring/element.hpp"

namespace spincalc::genus12 {

/// c_3(F - Sym^2 E) on a locus, split along the kernel class k:
/// total = kfree + k * kcoeff.
struct C3Parts {
  ring::RingElem total;
  ring::RingElem kfree;
  ring::RingElem kcoeff;
};

/// The k-free part is checked against the displayed degree-6 polynomial
/// (and, on the Y side, the k coefficient against its display).
C3Parts c3_difference_parts(bn::LocusSide side);
ring::RingElem c3_difference(bn::LocusSide side);

ring::RingElem displayed_kfree(bn::LocusSide side);
ring::RingElem displayed_kcoeff_y();

/// kfree * [locus] + k * kcoeff: the degree-7 class whose top intersection
/// number on C x W^4_14 is the test-curve total. The k-linear part is
/// already supported on the locus through the substitution.
ring::RingElem locus_integrand(bn::LocusSide side);

struct D12Coefficients {
  Scalar c1_total;  // sigma^*(C_1) . c_3(F - Sym^2 E)
  Scalar c0_total;  // sigma^*(C_0) . c_3(F - Sym^2 E)
  Scalar a;
  Scalar b0;
  Scalar b1;
};

/// a, b0, b1 of the genus-12 divisor, solved from the C1, C0, R pairings.
/// Computed once and cached.
const D12Coefficients& d12_coefficients();

struct SlopeReport {
  Scalar a, b0, b1;
  Scalar slope;
  Scalar threshold;
  bool violates_slope_conjecture = false;
};

SlopeReport slope_report(const Scalar& a, const Scalar& b0, const Scalar& b1, int g);
SlopeReport d12_slope_report();

/// 13245 lambda - 1926 delta0 - 9867 delta1 - sum b_j delta_j. Only
/// b_j >= b1 is known for j >= 2: the tail is filled with b1 when
/// conservative_tail is set and left at zero otherwise.
pic::DivisorClass d12_class(bool conservative_tail);

/// (e - 1)(e c_1(F) - (e^2 + e - 4) c_1(E)).
ring::RingElem degenerate_pencil_class(int e, const ring::RingElem& c1E, const ring::RingElem& c1F);

}  // namespace spincalc::genus12
