#pragma once

#include <utility>

#include "spincalc/kernel/scalar.hpp"
#include "spincalc/pic/classes.hpp"

namespace spincalc::numerics {

/// g - (r+1)(g-d+r).
int rho(int g, int r, int d);

struct SpinCounts {
  int g = 0;
  BigInt n_even;
  BigInt n_odd;
};

/// 2^{g-1}(2^g+1) even and 2^{g-1}(2^g-1) odd theta-characteristics.
SpinCounts theta_counts(int g);

/// (deg A_i/Delta_i, deg B_i/Delta_i).
std::pair<BigInt, BigInt> boundary_degrees(int g, int i);

struct Ramification {
  long value = 0;
  bool feasible = true;  // false when the formula goes negative
};

/// 2 g_source - 2 - degree (2 g_target - 2).
Ramification riemann_hurwitz_ram(int g_source, int g_target, int degree);

/// Genus of the Scorza curve, by adjunction on C x C.
long scorza_genus(int g);

struct ThetaPencilProfile {
  pic::TestCurve curve;
  Scalar canonical_pairing;    // P . K
  int discriminant_degree = 0;  // 6g + 18
  bool decomposition_holds = false;
};

ThetaPencilProfile theta_pencil_profile(int g);

struct MukaiProfile {
  int g = 0;
  int dim_v = 0;
  int n_g = 0;
  int max_delta_dominant = 0;
};

/// g in 7..10.
MukaiProfile mukai_profile(int g);

}  // namespace spincalc::numerics
