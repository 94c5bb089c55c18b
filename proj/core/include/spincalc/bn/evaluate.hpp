#pragma once

#include <optional>

#include "spincalc/bn/harris_tu.hpp"
#include "spincalc/ring/element.hpp"

namespace spincalc::bn {

/// The two loci in C x W^4_14(C) used for the genus-12 test curves:
/// X = {(y, L) : h^0(L(-2y)) >= r}, Y = {(y, L) : h^0(L(-y-q)) >= r}.
enum class LocusSide { X, Y };

const char* side_name(LocusSide side);

/// sum_j (deg*eta + gamma)^j, the inverse Chern series of a line bundle
/// of degree deg on C pulled back to C x Pic^d.
ring::RingElem line_inverse_series(const ring::PresetPtr& preset, int deg);

/// Inverse total Chern class of the rank-2 bundle whose kernel defines the
/// locus: J_1(P)^dual on the X side, B^dual on the Y side.
ring::RingElem inverse_chern_series(const BNContext& ctx, LocusSide side);

/// sum_i c_i, the total Chern class of M^dual.
ring::RingElem total_chern(const BNContext& ctx);

/// c_{r+1} of pi^*(M)^dual minus the rank-2 bundle: the class that replaces
/// c_1 of the kernel line bundle.
ring::RingElem virtual_top_class(const BNContext& ctx, LocusSide side);

/// Degree r part of the same difference: the class of the locus itself.
ring::RingElem locus_class(const BNContext& ctx, LocusSide side);

/// k * xi -> virtual_top_class * xi on k-linear monomials. Throws
/// PreconditionError on any monomial with k^2.
ring::RingElem ker_substitute(const BNContext& ctx, const ring::RingElem& e, LocusSide side);

/// Top intersection number on C x W^r_d(C) through the Harris-Tu formula.
/// An element involving k needs a side for the substitution.
Scalar evaluate_taut(const BNContext& ctx, const ring::RingElem& e, std::optional<LocusSide> side = std::nullopt);

/// Same number, computed by first rewriting c_2..c_{r+1} through theta and
/// c_1. Only valid when h^1 = 1 and W^{r+1}_d is empty.
Scalar evaluate_taut_recursion(const BNContext& ctx, const ring::RingElem& e,
                               std::optional<LocusSide> side = std::nullopt);

/// c_{i+1} = theta^i c_1 / i! - i theta^{i+1} / (i+1)!, for i >= 1.
ring::RingElem recursion_rewrite(const BNContext& ctx, int index);

}  // namespace spincalc::bn
