#include "spincalc/ring/preset.hpp"

#include <numeric>
#include <utility>

#include "spincalc/error.hpp"

namespace spincalc::ring {

namespace {

constexpr int kMaxRewriteSteps = 100000;

bool divides(const Exponents& lhs, const Exponents& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (lhs[i] > m[i]) return false;
  }
  return true;
}

}  // namespace

RingPreset::RingPreset(std::string key, std::vector<Generator> generators, std::vector<RewriteRule> rules,
                       std::optional<Truncation> truncation, IntegrationRule integration,
                       std::map<std::string, int> params)
    : key_(std::move(key)),
      generators_(std::move(generators)),
      rules_(std::move(rules)),
      truncation_(std::move(truncation)),
      integration_(std::move(integration)),
      params_(std::move(params)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].degree < 0) throw PreconditionError("negative generator degree");
    for (std::size_t j = 0; j < i; ++j) {
      if (generators_[i].name == generators_[j].name) {
        throw PreconditionError("duplicate generator name '" + generators_[i].name + "'");
      }
    }
  }
  for (const auto& rule : rules_) {
    if (rule.lhs.size() != generators_.size()) throw DimensionError("rewrite rule arity mismatch");
    const int d = degree(rule.lhs);
    for (const auto& [m, c] : rule.rhs) {
      if (m.size() != generators_.size()) throw DimensionError("rewrite rule arity mismatch");
      if (degree(m) != d) throw PreconditionError("rewrite rule is not degree preserving");
    }
  }
  if (truncation_ && truncation_->mask.size() != generators_.size()) {
    throw DimensionError("truncation mask arity mismatch");
  }
}

std::optional<std::size_t> RingPreset::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t RingPreset::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw PreconditionError("preset " + key_ + " has no generator '" + std::string(name) + "'");
}

bool RingPreset::has_param(std::string_view name) const { return params_.find(std::string(name)) != params_.end(); }

int RingPreset::param(std::string_view name) const {
  auto it = params_.find(std::string(name));
  if (it == params_.end()) throw PreconditionError("preset " + key_ + " has no parameter '" + std::string(name) + "'");
  return it->second;
}

int RingPreset::degree(const Exponents& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * generators_[i].degree;
  return d;
}

bool RingPreset::truncated(const Exponents& m) const {
  if (!truncation_) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0 && !truncation_->mask[i]) return false;
  }
  return degree(m) > truncation_->top_degree;
}

Terms RingPreset::normalize(const Exponents& m) const {
  Terms done;
  std::vector<std::pair<Exponents, Scalar>> work{{m, Scalar(1)}};
  int steps = 0;
  while (!work.empty()) {
    if (++steps > kMaxRewriteSteps) throw InvariantViolation("rewrite system of " + key_ + " did not terminate");
    auto [mono, coeff] = std::move(work.back());
    work.pop_back();
    if (truncated(mono)) continue;
    const RewriteRule* hit = nullptr;
    for (const auto& rule : rules_) {
      if (divides(rule.lhs, mono)) {
        hit = &rule;
        break;
      }
    }
    if (hit == nullptr) {
      auto [it, inserted] = done.try_emplace(std::move(mono), coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) done.erase(it);
      }
      continue;
    }
    Exponents quotient = mono;
    for (std::size_t i = 0; i < quotient.size(); ++i) quotient[i] -= hit->lhs[i];
    for (const auto& [rm, rc] : hit->rhs) {
      Exponents next = quotient;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] += rm[i];
      work.emplace_back(std::move(next), coeff * rc);
    }
  }
  return done;
}

bool same_preset(const RingPreset& a, const RingPreset& b) { return &a == &b || a.key() == b.key(); }

}  // namespace spincalc::ring
