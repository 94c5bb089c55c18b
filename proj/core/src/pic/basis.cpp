#include "spincalc/pic/basis.hpp"

#include "spincalc/error.hpp"

namespace spincalc::pic {

PicBasis::PicBasis(Space space, int g) : space_(space), g_(g) {
  if (g < 2) throw DomainError("Picard basis needs g >= 2");
  names_.emplace_back("lambda");
  const int h = g / 2;
  if (space == Space::spin) {
    for (int i = 0; i <= h; ++i) names_.push_back("alpha" + std::to_string(i));
    for (int i = 0; i <= h; ++i) names_.push_back("beta" + std::to_string(i));
  } else {
    for (int i = 0; i <= h; ++i) names_.push_back("delta" + std::to_string(i));
  }
}

PicBasis PicBasis::spin(int g) { return PicBasis(Space::spin, g); }
PicBasis PicBasis::moduli(int g) { return PicBasis(Space::moduli, g); }

std::optional<std::size_t> PicBasis::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t PicBasis::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw PreconditionError("'" + std::string(name) + "' is not a generator of " + label());
}

std::size_t PicBasis::boundary(char kind, int i) const {
  if (i < 0 || i > half()) {
    throw DomainError("boundary index " + std::to_string(i) + " outside 0.." + std::to_string(half()));
  }
  const bool spin_kind = kind == 'a' || kind == 'b';
  if (spin_kind != (space_ == Space::spin)) {
    throw MismatchError(std::string(kind == 'd' ? "delta" : kind == 'a' ? "alpha" : "beta") + " is not in " +
                        label());
  }
  const auto offset = static_cast<std::size_t>(i) + 1;
  return kind == 'b' ? offset + static_cast<std::size_t>(half()) + 1 : offset;
}

std::size_t PicBasis::alpha(int i) const { return boundary('a', i); }
std::size_t PicBasis::beta(int i) const { return boundary('b', i); }
std::size_t PicBasis::delta(int i) const { return boundary('d', i); }

std::string PicBasis::label() const {
  return (space_ == Space::spin ? "spin(g=" : "moduli(g=") + std::to_string(g_) + ")";
}

}  // namespace spincalc::pic
