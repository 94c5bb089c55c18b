#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "spincalc/kernel/scalar.hpp"
#include "spincalc/ring/preset.hpp"

namespace spincalc::ring {

/// Sparse element of a preset ring. Every stored monomial is in normal
/// form and every stored coefficient is nonzero.
class RingElem {
 public:
  explicit RingElem(PresetPtr preset);
  RingElem(PresetPtr preset, const Scalar& constant);

  static RingElem generator(PresetPtr preset, std::string_view name);
  static RingElem monomial(PresetPtr preset, const Exponents& m, const Scalar& coeff = Scalar(1));

  const PresetPtr& preset_ptr() const { return preset_; }
  const RingPreset& preset() const { return *preset_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Exponents& m) const;
  /// Degree of the highest-degree monomial; -1 for zero.
  int max_degree() const;
  bool is_homogeneous(int d) const;
  RingElem homogeneous_part(int d) const;

  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);
  RingElem& operator*=(const Scalar& s);
  RingElem operator-() const;

  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend RingElem operator*(RingElem a, const Scalar& s) { return a *= s; }
  friend RingElem operator*(const Scalar& s, RingElem a) { return a *= s; }

  friend bool operator==(const RingElem& a, const RingElem& b);

  /// Replaces generator gen by value everywhere.
  RingElem substitute(std::size_t gen, const RingElem& value) const;

  /// Writes this element as free + gen * linear where neither part
  /// involves gen. Throws PreconditionError when gen appears squared.
  std::pair<RingElem, RingElem> split_linear(std::size_t gen) const;

  /// Highest exponent of gen over all terms.
  int max_exponent(std::size_t gen) const;

  /// Canonical text form, parseable by the expression grammar.
  std::string render() const;

 private:
  void add_term(const Exponents& m, const Scalar& c);
  void add_normalized(const Exponents& m, const Scalar& c);
  void require_same(const RingElem& o) const;

  PresetPtr preset_;
  Terms terms_;
};

RingElem multiply(const RingElem& a, const RingElem& b);
RingElem pow(const RingElem& base, unsigned exponent);

/// Evaluates the preset's integration functional. Jacobian presets accept
/// only pure eta/gamma/theta elements; anything else is for bn-eval.
Scalar integrate(const RingElem& e);

/// Renders a single monomial, "1" for the unit.
std::string render_monomial(const RingPreset& preset, const Exponents& m);

}  // namespace spincalc::ring
