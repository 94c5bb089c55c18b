#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spincalc/bn/evaluate.hpp"
#include "spincalc/error.hpp"
#include "spincalc/ring/element.hpp"
#include "spincalc/ring/presets.hpp"

using namespace spincalc;
using ring::RingElem;

namespace {

RingElem gen(const ring::PresetPtr& p, const char* name) { return RingElem::generator(p, name); }

RingElem random_elem(const ring::PresetPtr& p, std::mt19937& rng, int max_exp, bool pure) {
  std::uniform_int_distribution<int> coeff(-6, 6), exp(0, max_exp), count(1, 4);
  RingElem e(p);
  const std::size_t vars = pure ? 3 : p->size();
  for (int t = count(rng); t > 0; --t) {
    ring::Exponents m = p->unit();
    for (std::size_t i = 0; i < vars; ++i) m[i] = exp(rng);
    e += RingElem::monomial(p, m, Scalar(coeff(rng), 1 + (t % 3)));
  }
  return e;
}

oracle::Poly as_poly(const RingElem& e) { return {e.terms().begin(), e.terms().end()}; }

// Free expansion followed by the closed-form Jacobian normal form.
oracle::Poly reference_product(const RingElem& a, const RingElem& b, int g) {
  oracle::Poly out;
  for (const auto& [m, c] : oracle::poly_mul(as_poly(a), as_poly(b))) {
    bool pure = true;
    for (std::size_t i = 3; i < m.size(); ++i) pure = pure && m[i] == 0;
    for (const auto& [t, v] : oracle::jacobian_normal_form(m[0], m[1], m[2], g, pure)) {
      auto n = m;
      n[0] = t[0];
      n[1] = t[1];
      n[2] = t[2];
      out[n] += c * v;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

TEST(JacobianPreset, Relations) {
  const auto p = ring::preset_jacobian_product(4, 3, 1);
  const RingElem eta = gen(p, "eta"), gamma = gen(p, "gamma"), theta = gen(p, "theta");
  EXPECT_TRUE((eta * eta).is_zero());
  EXPECT_TRUE((eta * gamma).is_zero());
  EXPECT_EQ((gamma * gamma).render(), "-2*eta*theta");
  EXPECT_TRUE(ring::pow(gamma, 3).is_zero());
  EXPECT_TRUE(ring::pow(theta, 6).is_zero());
  EXPECT_FALSE(ring::pow(theta, 5).is_zero());
  EXPECT_EQ(p->key(), "jac:g=4,d=3,r=1");
  EXPECT_EQ(p->size(), 6u);
  EXPECT_EQ(p->generator(4).name, "c2");
  EXPECT_EQ(p->generator(4).degree, 2);
}

TEST(JacobianPreset, TruncationSparesMixedMonomials) {
  const auto p = ring::preset_jacobian_product(2, 1, 1);
  const RingElem t = ring::pow(gen(p, "theta"), 4);
  EXPECT_TRUE(t.is_zero());
  const RingElem mixed = ring::pow(gen(p, "theta"), 3) * gen(p, "c1");
  EXPECT_FALSE(mixed.is_zero());
}

TEST(JacobianPreset, NormalFormMatchesClosedForm) {
  const int g = 5;
  const auto p = ring::preset_jacobian_product(g, 4, 1);
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 4; ++b) {
      for (int c = 0; c <= g + 2; ++c) {
        ring::Exponents m = p->unit();
        m[0] = a, m[1] = b, m[2] = c;
        const RingElem e = RingElem::monomial(p, m);
        oracle::Poly want;
        for (const auto& [t, v] : oracle::jacobian_normal_form(a, b, c, g)) {
          ring::Exponents n = p->unit();
          n[0] = t[0], n[1] = t[1], n[2] = t[2];
          want[n] = v;
        }
        EXPECT_EQ(as_poly(e), want) << a << ' ' << b << ' ' << c;
      }
    }
  }
}

// Property: normal forms are independent of how a product is grouped, and
// equal to the closed form applied after free expansion.
TEST(JacobianPreset, ConfluenceOnRandomProducts) {
  const int g = 4;
  const auto p = ring::preset_jacobian_product(g, 3, 1);
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const bool pure = trial % 2 == 0;
    const RingElem a = random_elem(p, rng, 3, pure);
    const RingElem b = random_elem(p, rng, 3, pure);
    const RingElem c = random_elem(p, rng, 2, pure);
    ASSERT_EQ((a * b) * c, a * (b * c)) << "trial " << trial;
    ASSERT_EQ(a * b, b * a) << "trial " << trial;
    ASSERT_EQ(a * (b + c), a * b + a * c) << "trial " << trial;
    ASSERT_EQ(as_poly(a * b), reference_product(a, b, g)) << "trial " << trial;
  }
}

TEST(JacobianPreset, IntegrationValues) {
  const int g = 6;
  const auto p = ring::preset_jacobian_product(g, 5, 0);
  const RingElem eta = gen(p, "eta"), gamma = gen(p, "gamma"), theta = gen(p, "theta");
  EXPECT_EQ(ring::integrate(eta * ring::pow(theta, g)), Scalar(oracle::fact(g)));
  EXPECT_EQ(ring::integrate(gamma * gamma * ring::pow(theta, g - 1)), Scalar(-2) * Scalar(oracle::fact(g)));
  EXPECT_EQ(ring::integrate(ring::pow(theta, g)), Scalar(0));
  EXPECT_THROW(ring::integrate(eta * gen(p, "c1")), PreconditionError);
  EXPECT_THROW(ring::integrate(gen(p, "k")), PreconditionError);
}

TEST(JacobianPreset, IntegrateIsLinear) {
  const int g = 3;
  const auto p = ring::preset_jacobian_product(g, 2, 0);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> s(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const RingElem a = random_elem(p, rng, 4, true);
    const RingElem b = random_elem(p, rng, 4, true);
    const Scalar x(s(rng), 1 + trial % 4), y(s(rng), 1 + trial % 5);
    EXPECT_EQ(ring::integrate(x * a + y * b), x * ring::integrate(a) + y * ring::integrate(b));
  }
}

TEST(JacobianPreset, LineInverseSeriesClosedForm) {
  const auto p = ring::preset_jacobian_product(11, 14, 4);
  for (int d : {0, 1, 13, 14, 34}) {
    const RingElem want = RingElem(p, Scalar(1)) + Scalar(d) * gen(p, "eta") + gen(p, "gamma") -
                          Scalar(2) * gen(p, "eta") * gen(p, "theta");
    EXPECT_EQ(bn::line_inverse_series(p, d), want) << d;
  }
}

TEST(RingElem, RenderOrder) {
  const auto p = ring::preset_jacobian_product(11, 14, 4);
  const RingElem e = RingElem(p, Scalar(1)) + Scalar(48) * gen(p, "eta") + Scalar(2) * gen(p, "gamma") -
                     Scalar(6) * gen(p, "eta") * gen(p, "theta");
  EXPECT_EQ(e.render(), "-6*eta*theta + 48*eta + 2*gamma + 1");
  EXPECT_EQ((Scalar(-1) * gen(p, "c2")).render(), "-1*c2");
  EXPECT_EQ(RingElem(p).render(), "0");
  EXPECT_EQ((Scalar(1, 2) * gen(p, "theta") - gen(p, "c1")).render(), "1/2*theta - c1");
}

TEST(RingElem, HomogeneousParts) {
  const auto p = ring::preset_jacobian_product(11, 14, 4);
  const RingElem e = RingElem(p, Scalar(3)) + gen(p, "c2") + gen(p, "theta") * gen(p, "c1");
  EXPECT_EQ(e.max_degree(), 2);
  EXPECT_FALSE(e.is_homogeneous(2));
  EXPECT_TRUE(e.homogeneous_part(2).is_homogeneous(2));
  EXPECT_EQ(e.homogeneous_part(0), RingElem(p, Scalar(3)));
}

TEST(RingElem, SplitAndSubstitute) {
  const auto p = ring::preset_jacobian_product(11, 14, 4);
  const std::size_t k = p->index("k");
  const RingElem e = gen(p, "theta") + gen(p, "k") * gen(p, "c1");
  const auto [free, linear] = e.split_linear(k);
  EXPECT_EQ(free, gen(p, "theta"));
  EXPECT_EQ(linear, gen(p, "c1"));
  EXPECT_THROW((gen(p, "k") * gen(p, "k")).split_linear(k), PreconditionError);
  EXPECT_EQ(e.substitute(k, gen(p, "theta")), gen(p, "theta") + gen(p, "theta") * gen(p, "c1"));
  EXPECT_EQ(e.max_exponent(k), 1);
}

TEST(RingElem, PresetMismatch) {
  const auto a = ring::preset_jacobian_product(3, 2, 0);
  const auto b = ring::preset_jacobian_product(4, 2, 0);
  EXPECT_THROW(gen(a, "eta") + gen(b, "eta"), MismatchError);
  EXPECT_THROW(gen(a, "eta") * gen(b, "eta"), MismatchError);
  // Same key means same ring.
  EXPECT_EQ(gen(a, "eta") + gen(ring::preset_jacobian_product(3, 2, 0), "eta"), Scalar(2) * gen(a, "eta"));
  EXPECT_THROW(gen(a, "lambda"), PreconditionError);
}

TEST(PresetKeys, Parse) {
  EXPECT_EQ(ring::preset_from_key("jac:g=11,d=14,r=4")->size(), 9u);
  EXPECT_EQ(ring::preset_from_key("surface:g=5")->key(), "surface:g=5");
  EXPECT_EQ(ring::preset_from_key("curve:g=7")->param("g"), 7);
  EXPECT_THROW(ring::preset_from_key("jac:g=11,d=14"), PreconditionError);
  EXPECT_THROW(ring::preset_from_key("jac:g=x,d=1,r=0"), PreconditionError);
  EXPECT_THROW(ring::preset_from_key("torus:g=1"), PreconditionError);
  EXPECT_THROW(ring::preset_from_key("nokey"), PreconditionError);
}

TEST(SurfacePreset, AdjunctionOnFibresAndDiagonal) {
  for (int g = 2; g <= 12; ++g) {
    const auto s = ring::preset_surface_product(g);
    EXPECT_EQ(ring::adjunction_genus(gen(s, "F1")), g);
    EXPECT_EQ(ring::adjunction_genus(gen(s, "Delta")), g);
    EXPECT_EQ(ring::integrate(gen(s, "Delta") * gen(s, "Delta")), Scalar(2 - 2 * g));
    EXPECT_EQ(ring::integrate(gen(s, "F1") * gen(s, "F1")), Scalar(0));
  }
  const auto s = ring::preset_surface_product(3);
  EXPECT_THROW(ring::adjunction_genus(gen(s, "F1") * gen(s, "F2")), PreconditionError);
}

TEST(UniversalCurve, PushforwardRelative) {
  const auto c = ring::preset_universal_curve(5);
  const RingElem w = gen(c, "omega"), l = gen(c, "lambda");
  EXPECT_EQ(ring::pushforward_relative(w * w), Scalar(12) * l);
  EXPECT_EQ(ring::pushforward_relative(w * l), Scalar(8) * l);
  EXPECT_TRUE(ring::pushforward_relative(l * l).is_zero());
  EXPECT_THROW(ring::pushforward_relative(w), PreconditionError);
  EXPECT_THROW(ring::integrate(w * w), PreconditionError);
}

TEST(UniversalCurve, PorteousLambdaCoefficient) {
  for (int g = 3; g <= 30; ++g) {
    const auto c = ring::preset_universal_curve(g);
    EXPECT_EQ(ring::pushforward_relative(ring::porteous_integrand(c)), Scalar(g + 8) * gen(c, "lambda")) << g;
  }
}
