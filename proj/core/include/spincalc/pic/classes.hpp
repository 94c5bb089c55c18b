#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spincalc/kernel/scalar.hpp"
#include "spincalc/pic/basis.hpp"

namespace spincalc::pic {

/// Raw signed coefficients over a Picard basis. The usual presentation
/// a*lambda - sum b*boundary is available through bar().
class DivisorClass {
 public:
  explicit DivisorClass(PicBasis basis);
  DivisorClass(PicBasis basis, std::vector<Scalar> coefficients);

  const PicBasis& basis() const { return basis_; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  const Scalar& raw(std::size_t i) const { return coeffs_.at(i); }
  const Scalar& raw(std::string_view name) const { return coeffs_.at(basis_.index(name)); }
  void set(std::string_view name, const Scalar& value) { coeffs_.at(basis_.index(name)) = value; }
  void set(std::size_t i, const Scalar& value) { coeffs_.at(i) = value; }

  /// Coefficient in the a*lambda - sum b*boundary convention: the lambda
  /// entry as stored, boundary entries negated.
  Scalar bar(std::string_view name) const;

  bool is_zero() const;

  /// e.g. "308*lambda - 32*delta0 - 76*delta1"; parseable by the
  /// expression grammar.
  std::string render() const;

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass& operator*=(const Scalar& s);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Scalar& s, DivisorClass a) { return a *= s; }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  void require_same(const DivisorClass& o) const;

  PicBasis basis_;
  std::vector<Scalar> coeffs_;
};

/// A one-parameter family, as its pairing vector against a basis.
/// assumed_zero lists generators whose zero pairing is a modelling
/// assumption rather than a stated value.
struct TestCurve {
  std::string name;
  PicBasis basis;
  std::vector<Scalar> pairings;
  std::vector<std::string> assumed_zero;
};

/// deg(pi) = 2^{g-1}(2^g - 1), the number of odd theta-characteristics.
BigInt covering_degree(int g);

/// Covering degrees (deg A_i/Delta_i, deg B_i/Delta_i) for 0 <= i <= g/2.
std::pair<BigInt, BigInt> boundary_cover_degrees(int g, int i);

/// lambda -> lambda, delta_0 -> alpha_0 + 2 beta_0, delta_i -> alpha_i + beta_i.
DivisorClass pullback(const DivisorClass& c);

/// lambda -> deg(pi) lambda, alpha_i -> deg(A_i) delta_i, beta_i -> deg(B_i) delta_i.
DivisorClass pushforward(const DivisorClass& c);

/// Canonical class. The spin class is checked against pullback + beta_0.
DivisorClass canonical_class(Space space, int g);

/// (g+8) lambda - (g+2)/4 alpha_0 - 2 beta_0 - sum 2(g-i) alpha_i - sum 2i beta_i.
DivisorClass zg_class(int g);

/// (g+3) lambda - (g+1)/6 delta_0 - sum i(g-i) delta_i, normalized to c = 1.
DivisorClass bn_divisor_class(int g);

/// Names: F, G, H (index i), F0, G0, H0, C0, C1, R, P (theta pencil).
TestCurve test_curve(std::string_view name, int g, std::optional<int> i = std::nullopt);

/// Exact dot product. Throws MismatchError on a basis mismatch.
Scalar pair(const TestCurve& t, const DivisorClass& c);

DivisorClass combine(std::span<const DivisorClass> classes, std::span<const Scalar> weights);

/// a / b_0 for a class on the moduli basis; nullopt when b_0 = 0.
std::optional<Scalar> slope(const DivisorClass& c);

/// Threshold 6 + 12/(g+1).
Scalar slope_threshold(int g);

}  // namespace spincalc::pic
