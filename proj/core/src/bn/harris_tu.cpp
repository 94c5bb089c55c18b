#include "spincalc/bn/harris_tu.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "spincalc/error.hpp"
#include "spincalc/kernel/matrix.hpp"
#include "spincalc/ring/presets.hpp"

namespace spincalc::bn {

int brill_noether_number(int g, int r, int d) { return g - (r + 1) * (g - d + r); }

BNContext::BNContext(int g, int r, int d) : g_(g), r_(r), d_(d), rho_(brill_noether_number(g, r, d)) {
  if (g < 1 || r < 0 || d < 0) throw DomainError("invalid Brill-Noether data");
  if (rho_ < 0) throw DomainError("W^r_d is empty for a general curve: rho = " + std::to_string(rho_));
  if (g - d + r < 0) throw DomainError("negative h^1 in Brill-Noether data");
  preset_ = ring::preset_jacobian_product(g, d, r);
}

RatMatrix harris_tu_matrix(const BNContext& ctx, const std::vector<int>& exponents) {
  const int n = ctx.r() + 1;
  if (static_cast<int>(exponents.size()) != n) throw DimensionError("Harris-Tu query needs r+1 exponents");
  const int base = ctx.g() + ctx.r() - ctx.d();
  RatMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    for (int l = 1; l <= n; ++l) {
      m(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(l - 1)) =
          reciprocal_factorial(base + exponents[static_cast<std::size_t>(j - 1)] - j + l);
    }
  }
  return m;
}

Scalar ht_value(const BNContext& ctx, const HTQuery& q, Warnings* warnings) {
  for (int e : q.exponents) {
    if (e < 0) throw PreconditionError("negative Chern-root exponent");
  }
  if (q.theta_power < 0) throw PreconditionError("negative theta exponent");
  if (warnings != nullptr && !q.exponents.empty() &&
      std::adjacent_find(q.exponents.begin(), q.exponents.end(), std::not_equal_to<>()) != q.exponents.end()) {
    warnings->push_back("non-symmetric Chern-root monomial evaluated on its own");
  }
  const int total = (ctx.r() + 1) * (ctx.g() + ctx.r() - ctx.d()) +
                    std::accumulate(q.exponents.begin(), q.exponents.end(), 0) + q.theta_power;
  const RatMatrix m = harris_tu_matrix(ctx, q.exponents);
  if (total != ctx.g()) return Scalar(0);
  return det(m) * Scalar(factorial(ctx.g()));
}

std::vector<std::pair<std::vector<int>, BigInt>> expand_c_monomial(const BNContext& ctx,
                                                                   const std::vector<int>& c_exponents) {
  const std::size_t n = static_cast<std::size_t>(ctx.r() + 1);
  if (c_exponents.size() > n) throw DimensionError("more Chern classes than the rank");

  using Poly = std::map<std::vector<int>, BigInt>;
  auto elementary = [n](std::size_t k) {
    Poly e;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<int> m(n, 0);
      for (std::size_t i = 0; i < n; ++i) m[i] = pick[i] ? 1 : 0;
      e[m] += 1;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return e;
  };
  auto times = [n](const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) {
        std::vector<int> m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
        out[m] += ca * cb;
      }
    }
    return out;
  };

  Poly acc{{std::vector<int>(n, 0), BigInt(1)}};
  for (std::size_t k = 1; k <= c_exponents.size(); ++k) {
    if (c_exponents[k - 1] < 0) throw PreconditionError("negative Chern exponent");
    if (c_exponents[k - 1] == 0) continue;
    const Poly e = elementary(k);
    for (int t = 0; t < c_exponents[k - 1]; ++t) acc = times(acc, e);
  }
  return {acc.begin(), acc.end()};
}

}  // namespace spincalc::bn
