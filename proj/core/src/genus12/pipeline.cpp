#include "spincalc/genus12/pipeline.hpp"

#include "spincalc/error.hpp"
#include "spincalc/expr/parser.hpp"
#include "spincalc/kernel/matrix.hpp"

namespace spincalc::genus12 {

using bn::LocusSide;
using ring::RingElem;

namespace {

constexpr int kRankIndex = 4;

RingElem parse(const char* text) { return expr::parse_ring_elem(text, context().preset()); }

RingElem gen(const char* name) { return RingElem::generator(context().preset(), name); }

void expect_equal(const RingElem& got, const RingElem& want, const std::string& what) {
  if (!(got == want)) {
    throw InvariantViolation(what + " computes as " + got.render() + ", expected " + want.render());
  }
}

}  // namespace

RingElem displayed_kfree(LocusSide side) {
  if (side == LocusSide::X) {
    return parse(
        "28*c2*theta - 88*c1^2*theta + 440*eta*c1^2 - 53*c1*c2 - 32/3*theta^3 + 128*eta*theta^2"
        " - 432*eta*theta*c1 + 64*c1^3 - 140*eta*c2 + 48*theta^2*c1 + 9*c3");
  }
  return parse(
      "28*c2*theta - 88*c1^2*theta - 22*eta*c1^2 - 53*c1*c2 - 32/3*theta^3 - 8*eta*theta^2"
      " + 24*eta*theta*c1 + 64*c1^3 + 7*eta*c2 + 48*theta^2*c1 + 9*c3");
}

RingElem displayed_kcoeff_y() {
  const int r = kRankIndex;
  const BundleChern b2 = bundle_chern(Bundle::B2);
  const RingElem c1 = gen("c1");
  return Scalar(-2) * b2.c(2) - Scalar(2 * (r + 2) * (r + 2)) * c1 * c1 - Scalar(2 * (r + 2)) * b2.c(1) * c1 +
         Scalar(r * (r + 3)) * c1 * c1 + Scalar(2 * (r + 3)) * gen("c2");
}

C3Parts c3_difference_parts(LocusSide side) {
  const BundleChern a = bundle_chern(side == LocusSide::X ? Bundle::A2 : Bundle::B2);
  const RingElem u = line_class(side);
  expect_equal(u, side == LocusSide::X ? parse("2*gamma + 48*eta - k") : parse("13*eta + gamma - k"),
               std::string("c1 of the line bundle on ") + bn::side_name(side));

  // 0 -> A -> F -> U^2 -> 0
  const RingElem f1 = a.c(1) + Scalar(2) * u;
  const RingElem f2 = a.c(2) + Scalar(2) * a.c(1) * u;
  const RingElem f3 = a.c(3) + Scalar(2) * a.c(2) * u;

  // E = pi^*(M) and c_i(M) = (-1)^i c_i(M^dual).
  const BundleChern m{"M", {-gen("c1"), gen("c2"), -gen("c3")}};
  const BundleChern s = sym2_chern(m, kRankIndex);
  const RingElem s1 = s.c(1), s2 = s.c(2), s3 = s.c(3);

  // Degree-3 part of c(F) / c(Sym^2 E).
  const RingElem total = f3 - f2 * s1 + f1 * (s1 * s1 - s2) - s1 * s1 * s1 + Scalar(2) * s1 * s2 - s3;

  auto [kfree, kcoeff] = total.split_linear(context().preset()->index("k"));
  expect_equal(kfree, displayed_kfree(side), std::string("k-free part on ") + bn::side_name(side));
  if (side == LocusSide::Y) expect_equal(kcoeff, displayed_kcoeff_y(), "k coefficient on Y");
  return {total, kfree, kcoeff};
}

RingElem c3_difference(LocusSide side) { return c3_difference_parts(side).total; }

RingElem locus_integrand(LocusSide side) {
  const C3Parts parts = c3_difference_parts(side);
  return parts.kfree * class_locus(side) + gen("k") * parts.kcoeff;
}

const D12Coefficients& d12_coefficients() {
  static const D12Coefficients coeffs = [] {
    const auto& ctx = context();
    const Scalar t1 = bn::evaluate_taut(ctx, locus_integrand(LocusSide::X), LocusSide::X);
    const Scalar t0 = bn::evaluate_taut(ctx, locus_integrand(LocusSide::Y), LocusSide::Y);

    // Unknowns: raw lambda, delta0, delta1 coefficients of the divisor on
    // the genus-12 moduli basis. C0 and C1 pair to zero with delta_j,
    // j >= 2; R is assumed to.
    const int g = ctx.g() + 1;
    const pic::PicBasis basis = pic::PicBasis::moduli(g);
    const pic::TestCurve curves[] = {pic::test_curve("C1", g), pic::test_curve("C0", g), pic::test_curve("R", g)};
    const std::size_t cols[] = {basis.lambda(), basis.delta(0), basis.delta(1)};
    RatMatrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) m(r, c) = curves[r].pairings[cols[c]];
    }
    const Scalar rhs[] = {t1, t0, Scalar(0)};
    const LinearSolution sol = solve_linear(m, rhs);
    if (sol.status != LinearSolution::Status::unique) throw InvariantViolation("genus-12 test-curve system is singular");

    D12Coefficients out{t1, t0, sol.values[0], -sol.values[1], -sol.values[2]};
    if (!out.b0.is_integer() || !out.b1.is_integer()) {
      throw InvariantViolation("non-integral boundary coefficients b0 = " + out.b0.str() + ", b1 = " + out.b1.str());
    }
    return out;
  }();
  return coeffs;
}

SlopeReport slope_report(const Scalar& a, const Scalar& b0, const Scalar& b1, int g) {
  if (b0.is_zero()) throw DomainError("slope undefined: b0 = 0");
  SlopeReport r{a, b0, b1, a / b0, pic::slope_threshold(g), false};
  r.violates_slope_conjecture = r.slope < r.threshold;
  return r;
}

SlopeReport d12_slope_report() {
  const auto& c = d12_coefficients();
  return slope_report(c.a, c.b0, c.b1, context().g() + 1);
}

pic::DivisorClass d12_class(bool conservative_tail) {
  const auto& c = d12_coefficients();
  pic::DivisorClass d(pic::PicBasis::moduli(context().g() + 1));
  const auto& b = d.basis();
  d.set(b.lambda(), c.a);
  d.set(b.delta(0), -c.b0);
  d.set(b.delta(1), -c.b1);
  if (conservative_tail) {
    for (int j = 2; j <= b.half(); ++j) d.set(b.delta(j), -c.b1);
  }
  return d;
}

RingElem degenerate_pencil_class(int e, const RingElem& c1E, const RingElem& c1F) {
  if (e < 1) throw DomainError("degenerate pencil class needs rank e >= 1");
  return Scalar(e - 1) * (Scalar(e) * c1F - Scalar(e * e + e - 4) * c1E);
}

}  // namespace spincalc::genus12
