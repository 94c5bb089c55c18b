#include "spincalc/genus12/bundles.hpp"

#include "spincalc/error.hpp"
#include "spincalc/expr/parser.hpp"
#include "spincalc/ring/presets.hpp"

namespace spincalc::genus12 {

using ring::RingElem;

namespace {

RingElem parse(const char* text) { return expr::parse_ring_elem(text, context().preset()); }

}  // namespace

const bn::BNContext& context() {
  static const bn::BNContext ctx(11, 4, 14);
  return ctx;
}

RingElem BundleChern::c(int i) const {
  if (i < 1) throw DomainError("Chern class index starts at 1");
  if (classes.empty()) throw PreconditionError("bundle " + name + " carries no ring");
  if (static_cast<std::size_t>(i) > classes.size()) return RingElem(classes.front().preset_ptr());
  return classes[static_cast<std::size_t>(i - 1)];
}

BundleChern bundle_chern(Bundle which) {
  if (which == Bundle::A2) {
    return {"A2",
            {parse("-4*theta - 4*gamma - 76*eta"), parse("8*theta^2 + 280*eta*theta + 16*gamma*theta"),
             parse("-32/3*theta^3 - 512*eta*theta^2 - 32*theta^2*gamma")}};
  }
  return {"B2",
          {parse("-4*theta - 2*gamma - 27*eta"), parse("8*theta^2 + 100*eta*theta + 8*theta*gamma"),
           parse("-32/3*theta^3 - 184*eta*theta^2 - 16*theta^2*gamma")}};
}

BundleChern sym2_chern(const BundleChern& v, int r) {
  if (r < 0) throw DomainError("rank index must be >= 0");
  const RingElem c1 = v.c(1);
  const RingElem c2 = v.c(2);
  const RingElem c3 = v.c(3);
  return {"Sym2(" + v.name + ")",
          {Scalar(r + 2) * c1, Scalar(r * (r + 3), 2) * c1 * c1 + Scalar(r + 3) * c2,
           Scalar(r * (r + 4) * (r - 1), 6) * c1 * c1 * c1 + Scalar(r + 5) * c3 +
               Scalar(r * r + 4 * r - 1) * c1 * c2}};
}

RingElem jet_inverse_chern(int g_curve, int d) {
  if (g_curve < 1) throw DomainError("jet bundle needs a curve of genus >= 1");
  const auto preset = ring::preset_jacobian_product(g_curve, d, 4);
  return bn::line_inverse_series(preset, d) * bn::line_inverse_series(preset, 2 * g_curve - 2 + d);
}

RingElem class_locus(bn::LocusSide side) {
  const RingElem shown = side == bn::LocusSide::X ? parse("c4 - 6*eta*theta*c2 + 48*eta*c3 + 2*gamma*c3")
                                                  : parse("c4 - 2*eta*theta*c2 + 13*eta*c3 + gamma*c3");
  const RingElem derived = bn::locus_class(context(), side);
  if (!(shown == derived)) {
    throw InvariantViolation(std::string("class of ") + bn::side_name(side) + " re-derives as " + derived.render() +
                             ", expected " + shown.render());
  }
  return shown;
}

RingElem line_class(bn::LocusSide side) {
  const RingElem k = RingElem::generator(context().preset(), "k");
  const RingElem series = bn::inverse_chern_series(context(), side);
  return series.homogeneous_part(1) - k;
}

}  // namespace spincalc::genus12
