#include "spincalc/pic/classes.hpp"

#include "spincalc/error.hpp"

namespace spincalc::pic {

namespace {

BigInt two_pow(int e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

void require_g3(int g, const char* what) {
  if (g < 3) throw DomainError(std::string(what) + " needs g >= 3");
}

}  // namespace

DivisorClass::DivisorClass(PicBasis basis) : basis_(std::move(basis)), coeffs_(basis_.size(), Scalar(0)) {}

DivisorClass::DivisorClass(PicBasis basis, std::vector<Scalar> coefficients)
    : basis_(std::move(basis)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != basis_.size()) throw DimensionError("coefficient count does not match " + basis_.label());
}

Scalar DivisorClass::bar(std::string_view name) const {
  const std::size_t i = basis_.index(name);
  return i == basis_.lambda() ? coeffs_[i] : -coeffs_[i];
}

bool DivisorClass::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string DivisorClass::render() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    Scalar shown = c;
    if (out.empty()) {
      if (c == Scalar(-1)) {
        out += "-1*" + basis_.name(i);
        continue;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      shown = c.abs();
    }
    out += shown == Scalar(1) ? basis_.name(i) : shown.str() + "*" + basis_.name(i);
  }
  return out.empty() ? "0" : out;
}

void DivisorClass::require_same(const DivisorClass& o) const {
  if (!(basis_ == o.basis_)) throw MismatchError("classes on " + basis_.label() + " and " + o.basis_.label());
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  require_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  require_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

BigInt covering_degree(int g) { return two_pow(g - 1) * (two_pow(g) - 1); }

std::pair<BigInt, BigInt> boundary_cover_degrees(int g, int i) {
  if (g < 2) throw DomainError("boundary degrees need g >= 2");
  if (i < 0 || i > g / 2) throw DomainError("boundary index " + std::to_string(i) + " out of range");
  if (i == 0) {
    // B_0 covers Delta_0 through odd theta-characteristics in genus g-1.
    return {two_pow(2 * g - 2), two_pow(g - 2) * (two_pow(g - 1) - 1)};
  }
  return {two_pow(g - 2) * (two_pow(i) - 1) * (two_pow(g - i) + 1),
          two_pow(g - 2) * (two_pow(i) + 1) * (two_pow(g - i) - 1)};
}

DivisorClass pullback(const DivisorClass& c) {
  const PicBasis& mb = c.basis();
  if (mb.space() != Space::moduli) throw MismatchError("pullback needs a class on " + PicBasis::moduli(mb.g()).label());
  DivisorClass out(PicBasis::spin(mb.g()));
  const PicBasis& sb = out.basis();
  out.set(sb.lambda(), c.raw(mb.lambda()));
  for (int i = 0; i <= mb.half(); ++i) {
    const Scalar& d = c.raw(mb.delta(i));
    out.set(sb.alpha(i), d);
    out.set(sb.beta(i), i == 0 ? Scalar(2) * d : d);
  }
  return out;
}

DivisorClass pushforward(const DivisorClass& c) {
  const PicBasis& sb = c.basis();
  if (sb.space() != Space::spin) throw MismatchError("pushforward needs a class on " + PicBasis::spin(sb.g()).label());
  const int g = sb.g();
  DivisorClass out(PicBasis::moduli(g));
  const PicBasis& mb = out.basis();
  out.set(mb.lambda(), Scalar(covering_degree(g)) * c.raw(sb.lambda()));
  for (int i = 0; i <= sb.half(); ++i) {
    const auto [da, db] = boundary_cover_degrees(g, i);
    out.set(mb.delta(i), Scalar(da) * c.raw(sb.alpha(i)) + Scalar(db) * c.raw(sb.beta(i)));
  }
  return out;
}

DivisorClass canonical_class(Space space, int g) {
  require_g3(g, "canonical class");
  if (space == Space::moduli) {
    DivisorClass k(PicBasis::moduli(g));
    const PicBasis& b = k.basis();
    k.set(b.lambda(), Scalar(13));
    for (int i = 0; i <= b.half(); ++i) k.set(b.delta(i), Scalar(i == 1 ? -3 : -2));
    return k;
  }
  DivisorClass k(PicBasis::spin(g));
  const PicBasis& b = k.basis();
  k.set(b.lambda(), Scalar(13));
  k.set(b.alpha(0), Scalar(-2));
  k.set(b.beta(0), Scalar(-3));
  for (int i = 1; i <= b.half(); ++i) {
    k.set(b.alpha(i), Scalar(i == 1 ? -3 : -2));
    k.set(b.beta(i), Scalar(i == 1 ? -3 : -2));
  }
  DivisorClass expected = pullback(canonical_class(Space::moduli, g));
  expected.set(b.beta(0), expected.raw(b.beta(0)) + Scalar(1));
  if (!(expected == k)) throw InvariantViolation("spin canonical class differs from pullback + beta0");
  return k;
}

DivisorClass zg_class(int g) {
  require_g3(g, "Z_g class");
  DivisorClass z(PicBasis::spin(g));
  const PicBasis& b = z.basis();
  z.set(b.lambda(), Scalar(g + 8));
  z.set(b.alpha(0), -Scalar(g + 2, 4));
  z.set(b.beta(0), Scalar(-2));
  for (int i = 1; i <= b.half(); ++i) {
    z.set(b.alpha(i), Scalar(-2 * (g - i)));
    z.set(b.beta(i), Scalar(-2 * i));
  }
  return z;
}

DivisorClass bn_divisor_class(int g) {
  require_g3(g, "Brill-Noether class");
  DivisorClass c(PicBasis::moduli(g));
  const PicBasis& b = c.basis();
  c.set(b.lambda(), Scalar(g + 3));
  c.set(b.delta(0), -Scalar(g + 1, 6));
  for (int i = 1; i <= b.half(); ++i) c.set(b.delta(i), Scalar(-i * (g - i)));
  return c;
}

TestCurve test_curve(std::string_view name_in, int g, std::optional<int> index) {
  std::string name(name_in);
  bool has_index = index.has_value();
  const int i = index.value_or(0);
  if ((name == "F" || name == "G" || name == "H") && has_index && i == 0) {
    name += "0";
    has_index = false;
  }
  if (name == "H") name = "H0";

  auto fill = [](TestCurve& t, std::initializer_list<std::pair<std::size_t, Scalar>> entries,
                 bool zero_fill_is_assumption) {
    std::vector<bool> set(t.basis.size(), false);
    for (const auto& [at, v] : entries) {
      t.pairings[at] = v;
      set[at] = true;
    }
    if (!zero_fill_is_assumption) return;
    for (std::size_t at = 0; at < set.size(); ++at) {
      if (!set[at]) t.assumed_zero.push_back(t.basis.name(at));
    }
  };

  if (name == "F" || name == "G") {
    if (!has_index) throw PreconditionError("test curve " + name + " needs an index");
    PicBasis b = PicBasis::spin(g);
    if (i < 1 || i > b.half()) {
      throw DomainError("test curve index " + std::to_string(i) + " outside 1.." + std::to_string(b.half()));
    }
    TestCurve t{name + std::to_string(i), b, std::vector<Scalar>(b.size(), Scalar(0)), {}};
    // Zero against every other generator is stated, not assumed.
    fill(t, {{name == "F" ? b.alpha(i) : b.beta(i), Scalar(2 - 2 * i)}}, false);
    return t;
  }
  if (has_index) throw PreconditionError("test curve " + name + " takes no index");

  if (name == "F0" || name == "G0" || name == "H0" || name == "P") {
    require_g3(g, "spin test curves");
    PicBasis b = PicBasis::spin(g);
    TestCurve t{name, b, std::vector<Scalar>(b.size(), Scalar(0)), {}};
    if (name == "F0") {
      fill(t, {{b.lambda(), 1}, {b.alpha(0), 12}, {b.beta(0), 0}, {b.alpha(1), -1}}, true);
    } else if (name == "G0") {
      fill(t, {{b.lambda(), 3}, {b.alpha(0), 12}, {b.beta(0), 12}, {b.beta(1), -3}}, true);
    } else if (name == "H0") {
      fill(t, {{b.lambda(), 0}, {b.alpha(0), 0}, {b.beta(0), 1 - g}, {b.alpha(1), 0}, {b.beta(1), 1}}, true);
    } else {
      fill(t, {{b.lambda(), g + 1}, {b.alpha(0), 4 * g + 20}, {b.beta(0), g - 1}}, true);
    }
    return t;
  }

  if (name == "C0" || name == "C1" || name == "R") {
    require_g3(g, "moduli test curves");
    PicBasis b = PicBasis::moduli(g);
    TestCurve t{name, b, std::vector<Scalar>(b.size(), Scalar(0)), {}};
    if (name == "C1") {
      // Elliptic tail attached at a moving point of a genus g-1 curve.
      t.pairings[b.delta(1)] = Scalar(4 - 2 * g);
    } else if (name == "C0") {
      // A fixed point glued to a moving point of a genus g-1 curve.
      t.pairings[b.delta(0)] = Scalar(2 - 2 * g);
      t.pairings[b.delta(1)] = Scalar(1);
    } else {
      fill(t, {{b.lambda(), 1}, {b.delta(0), 12}, {b.delta(1), -1}}, true);
    }
    return t;
  }
  throw PreconditionError("unknown test curve '" + name + "'");
}

Scalar pair(const TestCurve& t, const DivisorClass& c) {
  if (!(t.basis == c.basis())) {
    throw MismatchError("test curve " + t.name + " lives on " + t.basis.label() + ", class on " + c.basis().label());
  }
  Scalar s(0);
  for (std::size_t i = 0; i < t.pairings.size(); ++i) s += t.pairings[i] * c.raw(i);
  return s;
}

DivisorClass combine(std::span<const DivisorClass> classes, std::span<const Scalar> weights) {
  if (classes.size() != weights.size()) throw DimensionError("class and weight counts differ");
  if (classes.empty()) throw PreconditionError("empty combination has no basis");
  DivisorClass out(classes.front().basis());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    DivisorClass term = classes[i];
    term *= weights[i];
    out += term;
  }
  return out;
}

std::optional<Scalar> slope(const DivisorClass& c) {
  if (c.basis().space() != Space::moduli) throw MismatchError("slope is defined on the moduli basis");
  const Scalar b0 = c.bar("delta0");
  if (b0.is_zero()) return std::nullopt;
  return c.bar("lambda") / b0;
}

Scalar slope_threshold(int g) { return Scalar(6) + Scalar(12, g + 1); }

}  // namespace spincalc::pic
