#include "spincalc/ring/presets.hpp"

#include <charconv>
#include <memory>
#include <sstream>

#include "spincalc/error.hpp"

namespace spincalc::ring {

namespace {

Exponents mono(std::size_t n, std::initializer_list<std::pair<std::size_t, int>> entries) {
  Exponents m(n, 0);
  for (const auto& [i, e] : entries) m[i] = e;
  return m;
}

}  // namespace

PresetPtr preset_jacobian_product(int g, int d, int r) {
  if (g < 1) throw DomainError("jacobian preset needs g >= 1");
  if (d < 0 || r < 0) throw DomainError("jacobian preset needs d >= 0 and r >= 0");

  std::vector<Generator> gens{{"eta", 1}, {"gamma", 1}, {"theta", 1}};
  for (int i = 1; i <= r + 1; ++i) gens.push_back({"c" + std::to_string(i), i});
  gens.push_back({"k", 1});
  const std::size_t n = gens.size();
  constexpr std::size_t eta = 0, gamma = 1, theta = 2;

  std::vector<RewriteRule> rules;
  rules.push_back({mono(n, {{eta, 2}}), {}});
  rules.push_back({mono(n, {{eta, 1}, {gamma, 1}}), {}});
  rules.push_back({mono(n, {{gamma, 2}}), {{mono(n, {{eta, 1}, {theta, 1}}), Scalar(-2)}}});

  Truncation trunc{std::vector<bool>(n, false), g + 1};
  trunc.mask[eta] = trunc.mask[gamma] = trunc.mask[theta] = true;

  std::ostringstream key;
  key << "jac:g=" << g << ",d=" << d << ",r=" << r;
  return std::make_shared<const RingPreset>(key.str(), std::move(gens), std::move(rules), trunc,
                                            JacobianIntegral{g, eta, theta},
                                            std::map<std::string, int>{{"g", g}, {"d", d}, {"r", r}});
}

PresetPtr preset_surface_product(int g) {
  if (g < 2) throw DomainError("surface preset needs g >= 2");
  std::vector<Generator> gens{{"F1", 1}, {"F2", 1}, {"Delta", 1}};
  constexpr std::size_t f1 = 0, f2 = 1, delta = 2;
  TableIntegral table;
  table.values[mono(3, {{f1, 1}, {f2, 1}})] = Scalar(1);
  table.values[mono(3, {{f1, 1}, {delta, 1}})] = Scalar(1);
  table.values[mono(3, {{f2, 1}, {delta, 1}})] = Scalar(1);
  table.values[mono(3, {{delta, 2}})] = Scalar(2 - 2 * g);
  return std::make_shared<const RingPreset>("surface:g=" + std::to_string(g), std::move(gens),
                                            std::vector<RewriteRule>{}, Truncation{{true, true, true}, 2},
                                            std::move(table), std::map<std::string, int>{{"g", g}});
}

PresetPtr preset_universal_curve(int g) {
  if (g < 2) throw DomainError("universal curve preset needs g >= 2");
  return std::make_shared<const RingPreset>("curve:g=" + std::to_string(g),
                                            std::vector<Generator>{{"omega", 1}, {"lambda", 1}},
                                            std::vector<RewriteRule>{}, std::nullopt, std::monostate{},
                                            std::map<std::string, int>{{"g", g}});
}

PresetPtr preset_free(const std::string& key, std::vector<Generator> generators) {
  return std::make_shared<const RingPreset>(key, std::move(generators), std::vector<RewriteRule>{}, std::nullopt,
                                            std::monostate{}, std::map<std::string, int>{});
}

PresetPtr preset_from_key(const std::string& key) {
  const auto colon = key.find(':');
  if (colon == std::string::npos) throw PreconditionError("malformed preset key '" + key + "'");
  const std::string kind = key.substr(0, colon);
  std::map<std::string, int> params;
  std::istringstream rest(key.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw PreconditionError("malformed preset parameter '" + item + "'");
    int value = 0;
    const char* first = item.data() + eq + 1;
    const char* last = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw PreconditionError("malformed preset parameter '" + item + "'");
    }
    params[item.substr(0, eq)] = value;
  }
  auto need = [&](const char* name) {
    auto it = params.find(name);
    if (it == params.end()) throw PreconditionError("preset key '" + key + "' lacks " + name);
    return it->second;
  };
  if (kind == "jac") return preset_jacobian_product(need("g"), need("d"), need("r"));
  if (kind == "surface") return preset_surface_product(need("g"));
  if (kind == "curve") return preset_universal_curve(need("g"));
  throw PreconditionError("unknown preset kind '" + kind + "'");
}

RingElem surface_canonical_class(const PresetPtr& surface) {
  const int g = surface->param("g");
  return Scalar(2 * g - 2) * (RingElem::generator(surface, "F1") + RingElem::generator(surface, "F2"));
}

long adjunction_genus(const RingElem& t) {
  if (!t.is_homogeneous(1)) throw PreconditionError("adjunction needs a degree-1 curve class");
  const Scalar twice = integrate(t * t) + integrate(t * surface_canonical_class(t.preset_ptr()));
  const Scalar genus = Scalar(1) + twice / Scalar(2);
  if (!genus.is_integer()) throw DomainError("non-integral arithmetic genus " + genus.str());
  return genus.numerator().get_si();
}

RingElem pushforward_relative(const RingElem& e) {
  const RingPreset& p = e.preset();
  const auto omega = p.find("omega");
  const auto lambda = p.find("lambda");
  if (!omega || !lambda || p.size() != 2) throw PreconditionError("push-forward needs the universal curve preset");
  if (!e.is_homogeneous(2)) throw PreconditionError("push-forward needs fiber degree 2");
  const int g = p.param("g");
  Scalar coeff(0);
  for (const auto& [m, c] : e.terms()) {
    if (m[*omega] == 2) coeff += c * Scalar(12);
    if (m[*omega] == 1) coeff += c * Scalar(2 * g - 2);
  }
  return coeff * RingElem::generator(e.preset_ptr(), "lambda");
}

RingElem porteous_integrand(const PresetPtr& curve) {
  const RingElem one(curve, Scalar(1));
  const RingElem omega = RingElem::generator(curve, "omega");
  const RingElem lambda = RingElem::generator(curve, "lambda");
  const RingElem spin = Scalar(1, 2) * omega;
  // 0 -> eta (x) omega -> J_1(eta) -> eta -> 0
  const RingElem jet = (one + spin + omega) * (one + spin);
  const RingElem pushed_c1 = Scalar(-1, 4) * lambda;
  RingElem inverse = one;
  RingElem power = one;
  for (int i = 1; i <= 2; ++i) {
    power *= -pushed_c1;
    inverse += power;
  }
  return (jet * inverse).homogeneous_part(2);
}

}  // namespace spincalc::ring
