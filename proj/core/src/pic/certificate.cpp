#include "spincalc/pic/certificate.hpp"

#include <array>

#include "spincalc/error.hpp"
#include "spincalc/genus12/pipeline.hpp"
#include "spincalc/kernel/matrix.hpp"

namespace spincalc::pic {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

}  // namespace

const char* auxiliary_name(Auxiliary aux) { return aux == Auxiliary::BN ? "bn" : "d12"; }

CertificateReport certificate(int g, Auxiliary aux) {
  if (g < 12) throw PreconditionError("certificates need g >= 12");
  const PicBasis spin = PicBasis::spin(g);
  const DivisorClass z = zg_class(g);
  CertificateReport out{g, aux, {}, {}, {}, DivisorClass(spin), {}, {}, {}, false};
  DivisorClass pulled(spin);

  if (aux == Auxiliary::BN) {
    if (g == 12) throw PreconditionError("for g = 12 there is no Brill-Noether divisor");
    pulled = pullback(bn_divisor_class(g));
    out.x = Scalar(2, g - 2);
    out.y = Scalar(3 * (3 * g - 10), (g - 2) * (g + 1));
    out.assumptions.push_back("Brill-Noether class normalized to c_{g,d,r} = 1");
    if (is_prime(g + 1)) {
      out.assumptions.push_back("g+1 is prime: no Brill-Noether divisor exists; the class formula is used as given");
    }
  } else {
    if (g != 12) throw PreconditionError("the D12 certificate exists only for g = 12");
    pulled = pullback(genus12::d12_class(true));
    out.assumptions.push_back("b_j = b_1 for j >= 2 (only b_j >= b_1 is known)");
    for (const auto& name : test_curve("R", g).assumed_zero) out.assumed_zero_pairings.push_back("R." + name);
    // Match the alpha0 and beta0 coefficients of K.
    const DivisorClass k = canonical_class(Space::spin, g);
    const std::array<std::size_t, 2> rows{spin.alpha(0), spin.beta(0)};
    RatMatrix m(2, 2);
    std::vector<Scalar> rhs;
    for (std::size_t r = 0; r < 2; ++r) {
      m(r, 0) = z.raw(rows[r]);
      m(r, 1) = pulled.raw(rows[r]);
      rhs.push_back(k.raw(rows[r]));
    }
    const LinearSolution sol = solve_linear(m, rhs);
    if (sol.status != LinearSolution::Status::unique) throw InvariantViolation("D12 certificate system is singular");
    out.x = sol.values[0];
    out.y = sol.values[1];
  }

  DivisorClass zx = z;
  zx *= out.x;
  DivisorClass py = pulled;
  py *= out.y;
  out.combination = zx + py;
  if (out.combination.bar("alpha0") != Scalar(2) || out.combination.bar("beta0") != Scalar(3)) {
    throw InvariantViolation("certificate combination does not match K on alpha0, beta0");
  }

  const DivisorClass k = canonical_class(Space::spin, g);
  out.mu = k.raw(spin.lambda()) - out.combination.raw(spin.lambda());
  bool nonnegative = true;
  for (std::size_t i = 0; i < spin.size(); ++i) {
    Scalar s = k.raw(i) - out.combination.raw(i);
    if (i == spin.lambda()) s -= out.mu;
    if (s.sign() < 0) nonnegative = false;
    out.slacks.emplace_back(spin.name(i), s);
  }
  out.pass = out.mu.sign() > 0 && nonnegative;
  return out;
}

}  // namespace spincalc::pic
