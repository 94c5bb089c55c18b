#include "spincalc/bn/evaluate.hpp"

#include <map>
#include <string>

#include "spincalc/error.hpp"

namespace spincalc::bn {

using ring::RingElem;

namespace {

void require_context_preset(const BNContext& ctx, const RingElem& e) {
  if (!ring::same_preset(*ctx.preset(), e.preset())) {
    throw MismatchError("element lives in " + e.preset().key() + ", context expects " + ctx.preset()->key());
  }
}

RingElem gen(const BNContext& ctx, const std::string& name) { return RingElem::generator(ctx.preset(), name); }

// Sums ht_value over the Chern-root expansion of every surviving monomial.
// Only eta * theta^a * (c-monomial) terms can be nonzero: without eta the
// class cannot reach the top degree of C x W, and gamma is odd on C.
Scalar sum_harris_tu(const BNContext& ctx, const RingElem& e) {
  const auto& p = *ctx.preset();
  const std::size_t eta = p.index("eta");
  const std::size_t gamma = p.index("gamma");
  const std::size_t theta = p.index("theta");
  const std::size_t k = p.index("k");
  const std::size_t c1 = p.index("c1");
  const std::size_t rank = static_cast<std::size_t>(ctx.r() + 1);

  std::map<std::vector<int>, Scalar> memo;
  Scalar total(0);
  for (const auto& [m, coeff] : e.terms()) {
    if (m[k] != 0) throw PreconditionError("kernel class left unsubstituted");
    if (m[eta] != 1 || m[gamma] != 0) continue;
    std::vector<int> cexp(rank);
    for (std::size_t i = 0; i < rank; ++i) cexp[i] = m[c1 + i];
    const int a = m[theta];
    for (const auto& [x, mult] : expand_c_monomial(ctx, cexp)) {
      std::vector<int> key = x;
      key.push_back(a);
      auto it = memo.find(key);
      if (it == memo.end()) {
        it = memo.emplace(key, ht_value(ctx, HTQuery{x, a, true})).first;
      }
      if (!it->second.is_zero()) total += coeff * Scalar(mult) * it->second;
    }
  }
  return total;
}

RingElem prepare(const BNContext& ctx, const RingElem& e, std::optional<LocusSide> side) {
  require_context_preset(ctx, e);
  const std::size_t k = ctx.preset()->index("k");
  if (e.max_exponent(k) == 0) return e;
  if (!side) throw PreconditionError("element involves the kernel class k; a locus side is required");
  return ker_substitute(ctx, e, *side);
}

}  // namespace

const char* side_name(LocusSide side) { return side == LocusSide::X ? "X" : "Y"; }

RingElem line_inverse_series(const ring::PresetPtr& preset, int deg) {
  const RingElem one(preset, Scalar(1));
  const RingElem x = Scalar(deg) * RingElem::generator(preset, "eta") + RingElem::generator(preset, "gamma");
  RingElem sum = one;
  RingElem power = one;
  // x is nilpotent (x^3 = 0), so the geometric series terminates.
  for (;;) {
    power *= x;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

RingElem inverse_chern_series(const BNContext& ctx, LocusSide side) {
  const auto& p = ctx.preset();
  if (side == LocusSide::X) {
    // 0 -> K_C (x) P -> J_1(P) -> P -> 0 on C x Pic^d
    return line_inverse_series(p, ctx.d()) * line_inverse_series(p, 2 * ctx.g() - 2 + ctx.d());
  }
  // 0 -> P(-q)|_y -> B -> P|_q -> 0, and P|_q is trivial on C x Pic^d.
  return line_inverse_series(p, ctx.d() - 1);
}

RingElem total_chern(const BNContext& ctx) {
  RingElem c(ctx.preset(), Scalar(1));
  for (int i = 1; i <= ctx.r() + 1; ++i) c += gen(ctx, "c" + std::to_string(i));
  return c;
}

RingElem virtual_top_class(const BNContext& ctx, LocusSide side) {
  return (total_chern(ctx) * inverse_chern_series(ctx, side)).homogeneous_part(ctx.r() + 1);
}

RingElem locus_class(const BNContext& ctx, LocusSide side) {
  return (total_chern(ctx) * inverse_chern_series(ctx, side)).homogeneous_part(ctx.r());
}

RingElem ker_substitute(const BNContext& ctx, const RingElem& e, LocusSide side) {
  require_context_preset(ctx, e);
  const std::size_t k = ctx.preset()->index("k");
  if (e.max_exponent(k) >= 2) throw PreconditionError("kernel class appears squared; excess intersection unsupported");
  auto [free, linear] = e.split_linear(k);
  if (linear.is_zero()) return free;
  return free + linear * virtual_top_class(ctx, side);
}

Scalar evaluate_taut(const BNContext& ctx, const RingElem& e, std::optional<LocusSide> side) {
  return sum_harris_tu(ctx, prepare(ctx, e, side));
}

RingElem recursion_rewrite(const BNContext& ctx, int index) {
  if (index < 2 || index > ctx.r() + 1) throw DomainError("recursion rewrites c_2 .. c_{r+1}");
  const int i = index - 1;
  const RingElem theta = gen(ctx, "theta");
  return reciprocal_factorial(i) * ring::pow(theta, static_cast<unsigned>(i)) * gen(ctx, "c1") -
         Scalar(i) * reciprocal_factorial(i + 1) * ring::pow(theta, static_cast<unsigned>(i + 1));
}

Scalar evaluate_taut_recursion(const BNContext& ctx, const RingElem& e, std::optional<LocusSide> side) {
  if (ctx.h1() != 1) {
    throw PreconditionError("recursion evaluator needs h^1 = 1, got " + std::to_string(ctx.h1()));
  }
  if (brill_noether_number(ctx.g(), ctx.r() + 1, ctx.d()) >= 0) {
    throw PreconditionError("recursion evaluator needs W^{r+1}_d empty");
  }
  RingElem f = prepare(ctx, e, side);
  for (int i = 2; i <= ctx.r() + 1; ++i) {
    f = f.substitute(ctx.preset()->index("c" + std::to_string(i)), recursion_rewrite(ctx, i));
  }
  return sum_harris_tu(ctx, f);
}

}  // namespace spincalc::bn
