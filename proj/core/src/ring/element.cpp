#include "spincalc/ring/element.hpp"

#include <algorithm>
#include <map>
#include <type_traits>
#include <variant>
#include <vector>

#include "spincalc/error.hpp"

namespace spincalc::ring {

RingElem::RingElem(PresetPtr preset) : preset_(std::move(preset)) {
  if (!preset_) throw PreconditionError("ring element without a preset");
}

RingElem::RingElem(PresetPtr preset, const Scalar& constant) : RingElem(std::move(preset)) {
  if (!constant.is_zero()) terms_.emplace(preset_->unit(), constant);
}

RingElem RingElem::generator(PresetPtr preset, std::string_view name) {
  const std::size_t i = preset->index(name);
  Exponents m = preset->unit();
  m[i] = 1;
  return monomial(std::move(preset), m);
}

RingElem RingElem::monomial(PresetPtr preset, const Exponents& m, const Scalar& coeff) {
  RingElem out(std::move(preset));
  if (m.size() != out.preset_->size()) throw DimensionError("exponent vector length does not match preset");
  for (int e : m) {
    if (e < 0) throw PreconditionError("negative exponent");
  }
  out.add_normalized(m, coeff);
  return out;
}

Scalar RingElem::coefficient(const Exponents& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int RingElem::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, preset_->degree(m));
  return d;
}

bool RingElem::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return preset_->degree(t.first) == d; });
}

RingElem RingElem::homogeneous_part(int d) const {
  RingElem out(preset_);
  for (const auto& [m, c] : terms_) {
    if (preset_->degree(m) == d) out.terms_.emplace(m, c);
  }
  return out;
}

void RingElem::add_term(const Exponents& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void RingElem::add_normalized(const Exponents& m, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [nm, nc] : preset_->normalize(m)) add_term(nm, c * nc);
}

void RingElem::require_same(const RingElem& o) const {
  if (!same_preset(*preset_, *o.preset_)) {
    throw MismatchError("ring elements from different presets: " + preset_->key() + " and " + o.preset_->key());
  }
}

RingElem& RingElem::operator+=(const RingElem& o) {
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& o) { return *this = *this * o; }

RingElem& RingElem::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

RingElem RingElem::operator-() const {
  RingElem out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  a.require_same(b);
  RingElem out(a.preset_);
  // Products of normal monomials are collected first so each distinct
  // product is normalized once.
  Terms raw;
  Exponents m(a.preset_->size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      auto [it, inserted] = raw.try_emplace(m, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  for (const auto& [mono, c] : raw) out.add_normalized(mono, c);
  return out;
}

bool operator==(const RingElem& a, const RingElem& b) {
  return same_preset(*a.preset_, *b.preset_) && a.terms_ == b.terms_;
}

RingElem RingElem::substitute(std::size_t gen, const RingElem& value) const {
  require_same(value);
  if (gen >= preset_->size()) throw DimensionError("generator index out of range");
  std::vector<RingElem> powers{RingElem(preset_, Scalar(1))};
  RingElem out(preset_);
  for (const auto& [m, c] : terms_) {
    const int e = m[gen];
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    Exponents rest = m;
    rest[gen] = 0;
    out += monomial(preset_, rest, c) * powers[static_cast<std::size_t>(e)];
  }
  return out;
}

std::pair<RingElem, RingElem> RingElem::split_linear(std::size_t gen) const {
  if (gen >= preset_->size()) throw DimensionError("generator index out of range");
  RingElem free(preset_);
  RingElem linear(preset_);
  for (const auto& [m, c] : terms_) {
    if (m[gen] == 0) {
      free.terms_.emplace(m, c);
    } else if (m[gen] == 1) {
      Exponents rest = m;
      rest[gen] = 0;
      linear.terms_.emplace(rest, c);
    } else {
      throw PreconditionError("generator " + preset_->generator(gen).name + " appears with exponent " +
                              std::to_string(m[gen]));
    }
  }
  return {free, linear};
}

int RingElem::max_exponent(std::size_t gen) const {
  int e = 0;
  for (const auto& [m, c] : terms_) e = std::max(e, m.at(gen));
  return e;
}

std::string render_monomial(const RingPreset& preset, const Exponents& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += preset.generator(i).name;
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string RingElem::render() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [&](const auto* x, const auto* y) {
    const int dx = preset_->degree(x->first);
    const int dy = preset_->degree(y->first);
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });

  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [m, c] = *t;
    const bool unit = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    Scalar shown = c;
    if (first) {
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      shown = c.abs();
    }
    if (unit) {
      out += shown.str();
    } else if (shown == Scalar(1)) {
      out += render_monomial(*preset_, m);
    } else {
      // A leading -1 stays explicit: the grammar has no unary minus.
      out += shown.str() + '*' + render_monomial(*preset_, m);
    }
  }
  return out;
}

RingElem multiply(const RingElem& a, const RingElem& b) { return a * b; }

RingElem pow(const RingElem& base, unsigned exponent) {
  RingElem out(base.preset_ptr(), Scalar(1));
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

Scalar integrate(const RingElem& e) {
  const RingPreset& p = e.preset();
  return std::visit(
      [&](const auto& rule) -> Scalar {
        using Rule = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<Rule, std::monostate>) {
          throw PreconditionError("preset " + p.key() + " has no integration functional");
        } else if constexpr (std::is_same_v<Rule, JacobianIntegral>) {
          const auto gamma = p.find("gamma");
          for (const auto& [m, c] : e.terms()) {
            for (std::size_t i = 0; i < m.size(); ++i) {
              if (m[i] != 0 && i != rule.eta && i != rule.theta && (!gamma || i != *gamma)) {
                throw PreconditionError("integrand involves " + p.generator(i).name + "; use bn-eval");
              }
            }
          }
          Exponents top = p.unit();
          top[rule.eta] = 1;
          top[rule.theta] = rule.g;
          return e.coefficient(top) * Scalar(factorial(rule.g));
        } else {
          Scalar total(0);
          for (const auto& [m, c] : e.terms()) {
            auto it = rule.values.find(m);
            if (it != rule.values.end()) total += c * it->second;
          }
          return total;
        }
      },
      p.integration());
}

}  // namespace spincalc::ring
