#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spincalc::pic {

enum class Space { spin, moduli };

/// Named generators of Pic(S_g^-) or Pic(M_g).
///   spin:   lambda, alpha0..alphaH, beta0..betaH
///   moduli: lambda, delta0..deltaH
/// with H = floor(g/2).
class PicBasis {
 public:
  static PicBasis spin(int g);
  static PicBasis moduli(int g);

  Space space() const { return space_; }
  int g() const { return g_; }
  int half() const { return g_ / 2; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws PreconditionError when the name is not a generator.
  std::size_t index(std::string_view name) const;

  std::size_t lambda() const { return 0; }
  /// alpha_i on spin, delta_i on moduli.
  std::size_t alpha(int i) const;
  std::size_t beta(int i) const;
  std::size_t delta(int i) const;

  std::string label() const;

  friend bool operator==(const PicBasis& a, const PicBasis& b) { return a.space_ == b.space_ && a.g_ == b.g_; }

 private:
  PicBasis(Space space, int g);
  std::size_t boundary(char kind, int i) const;

  Space space_;
  int g_;
  std::vector<std::string> names_;
};

}  // namespace spincalc::pic
