#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spincalc/kernel/matrix.hpp"
#include "spincalc/kernel/scalar.hpp"
#include "spincalc/ring/preset.hpp"

namespace spincalc::bn {

using Warnings = std::vector<std::string>;

/// Brill-Noether number g - (r+1)(g-d+r).
int brill_noether_number(int g, int r, int d);

/// C x W^r_d(C) for a Brill-Noether general curve, with the matching
/// jacobian-product preset.
class BNContext {
 public:
  BNContext(int g, int r, int d);

  int g() const { return g_; }
  int r() const { return r_; }
  int d() const { return d_; }
  int rho() const { return rho_; }
  /// h^1 of a line bundle in W^r_d: g - d + r.
  int h1() const { return g_ - d_ + r_; }
  const ring::PresetPtr& preset() const { return preset_; }

 private:
  int g_, r_, d_, rho_;
  ring::PresetPtr preset_;
};

/// x_1^{i_1} ... x_{r+1}^{i_{r+1}} theta^a, optionally times eta.
struct HTQuery {
  std::vector<int> exponents;
  int theta_power = 0;
  bool has_eta = false;
};

/// The reciprocal-factorial matrix 1/(g+r-d+i_j-j+l)!.
RatMatrix harris_tu_matrix(const BNContext& ctx, const std::vector<int>& exponents);

/// Intersection number of a Chern-root monomial. Returns det * g! when the
/// total theta exponent is exactly g and 0 otherwise. A query whose
/// exponents are not all equal is not symmetric and only meaningful
/// inside a symmetric sum; if warnings is given, one is recorded.
Scalar ht_value(const BNContext& ctx, const HTQuery& q, Warnings* warnings = nullptr);

/// Expands prod_k e_k(x_1..x_{r+1})^{m_k} into Chern-root monomials.
/// c_exponents[k-1] = m_k.
std::vector<std::pair<std::vector<int>, BigInt>> expand_c_monomial(const BNContext& ctx,
                                                                   const std::vector<int>& c_exponents);

}  // namespace spincalc::bn
