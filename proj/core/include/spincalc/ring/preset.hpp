#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spincalc/kernel/scalar.hpp"

namespace spincalc::ring {

/// Exponent vector, one entry per generator of the owning preset.
using Exponents = std::vector<int>;
using Terms = std::map<Exponents, Scalar>;

struct Generator {
  std::string name;
  int degree = 1;
};

/// lhs -> rhs. The rhs must be homogeneous of the lhs degree.
struct RewriteRule {
  Exponents lhs;
  Terms rhs;
};

/// A monomial supported only on the masked generators whose degree
/// exceeds top_degree normalizes to zero.
struct Truncation {
  std::vector<bool> mask;
  int top_degree = 0;
};

/// Integral over C x Pic^d(C): coefficient of eta*theta^g times g!.
struct JacobianIntegral {
  int g = 0;
  std::size_t eta = 0;
  std::size_t theta = 0;
};

/// Integral given by a table of top-degree monomial values.
struct TableIntegral {
  Terms values;
};

using IntegrationRule = std::variant<std::monostate, JacobianIntegral, TableIntegral>;

/// Generators, rewrite rules, truncation and integration functional of a
/// graded-commutative ring. Presets are identified by their key, so two
/// separately built presets with the same key are interchangeable.
class RingPreset {
 public:
  RingPreset(std::string key, std::vector<Generator> generators, std::vector<RewriteRule> rules,
             std::optional<Truncation> truncation, IntegrationRule integration,
             std::map<std::string, int> params);

  const std::string& key() const { return key_; }
  std::size_t size() const { return generators_.size(); }
  const std::vector<Generator>& generators() const { return generators_; }
  const Generator& generator(std::size_t i) const { return generators_.at(i); }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const std::optional<Truncation>& truncation() const { return truncation_; }
  const IntegrationRule& integration() const { return integration_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws PreconditionError for an unknown generator name.
  std::size_t index(std::string_view name) const;

  bool has_param(std::string_view name) const;
  int param(std::string_view name) const;

  int degree(const Exponents& m) const;
  Exponents unit() const { return Exponents(generators_.size(), 0); }

  /// Normal form of a single monomial with coefficient 1.
  Terms normalize(const Exponents& m) const;

 private:
  bool truncated(const Exponents& m) const;

  std::string key_;
  std::vector<Generator> generators_;
  std::vector<RewriteRule> rules_;
  std::optional<Truncation> truncation_;
  IntegrationRule integration_;
  std::map<std::string, int> params_;
};

using PresetPtr = std::shared_ptr<const RingPreset>;

bool same_preset(const RingPreset& a, const RingPreset& b);

}  // namespace spincalc::ring
