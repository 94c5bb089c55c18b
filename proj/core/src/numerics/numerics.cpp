#include "spincalc/numerics/numerics.hpp"

#include "spincalc/bn/harris_tu.hpp"
#include "spincalc/error.hpp"
#include "spincalc/ring/presets.hpp"

namespace spincalc::numerics {

int rho(int g, int r, int d) { return bn::brill_noether_number(g, r, d); }

SpinCounts theta_counts(int g) {
  if (g < 1) throw DomainError("theta counts need g >= 1");
  BigInt half, full;
  mpz_ui_pow_ui(half.get_mpz_t(), 2, static_cast<unsigned long>(g - 1));
  mpz_ui_pow_ui(full.get_mpz_t(), 2, static_cast<unsigned long>(g));
  return {g, half * (full + 1), half * (full - 1)};
}

std::pair<BigInt, BigInt> boundary_degrees(int g, int i) { return pic::boundary_cover_degrees(g, i); }

Ramification riemann_hurwitz_ram(int g_source, int g_target, int degree) {
  if (g_source < 0 || g_target < 0) throw DomainError("genera must be nonnegative");
  if (degree < 1) throw DomainError("covering degree must be >= 1");
  const long value = 2L * g_source - 2 - static_cast<long>(degree) * (2L * g_target - 2);
  return {value, value >= 0};
}

long scorza_genus(int g) {
  if (g < 3) throw DomainError("Scorza curve needs g >= 3");
  const auto surface = ring::preset_surface_product(g);
  const ring::RingElem t = Scalar(g - 1) * (ring::RingElem::generator(surface, "F1") +
                                            ring::RingElem::generator(surface, "F2")) +
                           ring::RingElem::generator(surface, "Delta");
  const long genus = ring::adjunction_genus(t);
  if (genus != 3L * g * (g - 1) + 1) {
    throw InvariantViolation("adjunction gives Scorza genus " + std::to_string(genus));
  }
  return genus;
}

ThetaPencilProfile theta_pencil_profile(int g) {
  if (g < 3) throw DomainError("theta pencil profile needs g >= 3");
  ThetaPencilProfile p{pic::test_curve("P", g), {}, 6 * g + 18, false};
  p.canonical_pairing = pic::pair(p.curve, pic::canonical_class(pic::Space::spin, g));
  const auto& b = p.curve.basis;
  // Fibres over the discriminant: g-1 double points plus the alpha_0 points.
  const Scalar split = Scalar(2) * p.curve.pairings[b.beta(0)] + p.curve.pairings[b.alpha(0)];
  p.decomposition_holds = split == Scalar(p.discriminant_degree);
  return p;
}

MukaiProfile mukai_profile(int g) {
  int dim = 0;
  switch (g) {
    case 7: dim = 10; break;  // orthogonal Grassmannian OG(5, 10) in P^15
    case 8: dim = 8; break;   // G(2, 6) in P^14
    case 9: dim = 6; break;   // Lagrangian Grassmannian LG(3, 6) in P^13
    case 10: dim = 5; break;  // G_2-variety in P^13
    default: throw DomainError("Mukai models exist for g in 7..10");
  }
  return {g, dim, g + dim - 2, dim - 1};
}

}  // namespace spincalc::numerics
