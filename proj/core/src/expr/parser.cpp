#include "spincalc/expr/parser.hpp"

#include <cctype>
#include <optional>

#include "spincalc/error.hpp"

namespace spincalc::expr {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

class Parser {
 public:
  Parser(std::string_view text, const Context& context) : text_(text), context_(context) {}

  Expr run() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') fail("unbalanced ')'", pos_);
      fail("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t at) const { throw ParseError(message, at); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char ch) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  Expr expr() {
    Expr left = term();
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) return left;
      const std::size_t at = pos_;
      const Expr::Kind kind = text_[pos_] == '+' ? Expr::Kind::add : Expr::Kind::sub;
      ++pos_;
      Expr node{kind, at, {}, {}, 0, {}};
      node.children.push_back(std::move(left));
      node.children.push_back(term());
      left = std::move(node);
    }
  }

  Expr term() {
    Expr left = factor();
    while (peek('*')) {
      const std::size_t at = pos_++;
      Expr node{Expr::Kind::mul, at, {}, {}, 0, {}};
      node.children.push_back(std::move(left));
      node.children.push_back(factor());
      left = std::move(node);
    }
    return left;
  }

  Expr factor() {
    Expr base = atom();
    if (!peek('^')) return base;
    const std::size_t at = pos_++;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number after '^'", start);
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large", start);
    Expr node{Expr::Kind::pow, at, {}, {}, static_cast<unsigned>(std::stoul(digits)), {}};
    node.children.push_back(std::move(base));
    return node;
  }

  Expr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input", pos_);
    const char ch = text_[pos_];
    if (ch == '(') {
      const std::size_t open = pos_++;
      Expr inner = expr();
      if (!peek(')')) fail("unbalanced '(' opened here", open);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') return rational();
    if (std::isalpha(static_cast<unsigned char>(ch))) return name();
    if (ch == ')') fail("unbalanced ')'", pos_);
    fail("unexpected '" + std::string(1, ch) + "'", pos_);
  }

  Expr rational() {
    const std::size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) fail("malformed rational: expected digits", start);
    std::string num(text_.substr(start, pos_ - start));
    std::optional<std::string> den;
    // A '/' directly after the integer belongs to the rational.
    if (pos_ < text_.size() && text_[pos_] == '/') {
      const std::size_t slash = pos_++;
      const std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (dstart == pos_) fail("malformed rational: expected a denominator", slash);
      den = std::string(text_.substr(dstart, pos_ - dstart));
      if (BigInt(*den, 10) == 0) fail("malformed rational: zero denominator", dstart);
    }
    const BigInt n(num, 10);
    Expr node{Expr::Kind::number, start, den ? Scalar(n, BigInt(*den, 10)) : Scalar(n), {}, 0, {}};
    return node;
  }

  Expr name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string id(text_.substr(start, pos_ - start));
    if (!is_grammar_name(id)) fail("unknown name '" + id + "'", start);
    const bool known = std::visit(
        [&](const auto& ctx) {
          using T = std::decay_t<decltype(ctx)>;
          if constexpr (std::is_same_v<T, ring::PresetPtr>) {
            return ctx->find(id).has_value();
          } else {
            return ctx.find(id).has_value();
          }
        },
        context_);
    if (!known) fail("name '" + id + "' is not in this context", start);
    return Expr{Expr::Kind::name, start, {}, id, 0, {}};
  }

  std::string_view text_;
  const Context& context_;
  std::size_t pos_ = 0;
};

// Linear form over a Picard basis plus a constant part.
struct Linear {
  Scalar constant;
  std::vector<Scalar> coeffs;
  bool is_constant() const {
    for (const auto& c : coeffs) {
      if (!c.is_zero()) return false;
    }
    return true;
  }
};

Linear linearize(const Expr& e, const pic::PicBasis& basis) {
  const std::size_t n = basis.size();
  switch (e.kind) {
    case Expr::Kind::number:
      return {e.value, std::vector<Scalar>(n, Scalar(0))};
    case Expr::Kind::name: {
      Linear l{Scalar(0), std::vector<Scalar>(n, Scalar(0))};
      l.coeffs[basis.index(e.name)] = Scalar(1);
      return l;
    }
    case Expr::Kind::add:
    case Expr::Kind::sub: {
      Linear a = linearize(e.children[0], basis);
      const Linear b = linearize(e.children[1], basis);
      const Scalar s = e.kind == Expr::Kind::add ? Scalar(1) : Scalar(-1);
      a.constant += s * b.constant;
      for (std::size_t i = 0; i < n; ++i) a.coeffs[i] += s * b.coeffs[i];
      return a;
    }
    case Expr::Kind::mul: {
      Linear a = linearize(e.children[0], basis);
      Linear b = linearize(e.children[1], basis);
      if (!a.is_constant() && !b.is_constant()) throw ParseError("product of two divisor classes", e.offset);
      if (!a.is_constant()) std::swap(a, b);
      for (auto& c : b.coeffs) c *= a.constant;
      b.constant *= a.constant;
      return b;
    }
    case Expr::Kind::pow: {
      Linear base = linearize(e.children[0], basis);
      if (e.exponent == 1) return base;
      if (!base.is_constant()) throw ParseError("power of a divisor class", e.offset);
      base.constant = pow(base.constant, e.exponent);
      return base;
    }
  }
  throw InvariantViolation("unhandled expression node");
}

}  // namespace

bool is_grammar_name(std::string_view name) {
  static const char* fixed[] = {"eta", "gamma", "theta", "k", "lambda", "F1", "F2", "Delta", "omega"};
  for (const char* f : fixed) {
    if (name == f) return true;
  }
  for (std::string_view prefix : {"c", "alpha", "beta", "delta"}) {
    if (name.size() > prefix.size() && name.substr(0, prefix.size()) == prefix &&
        all_digits(name.substr(prefix.size()))) {
      return true;
    }
  }
  return false;
}

Expr parse_expression(std::string_view text, const Context& context) { return Parser(text, context).run(); }

ring::RingElem to_ring_elem(const Expr& e, const ring::PresetPtr& preset) {
  using ring::RingElem;
  switch (e.kind) {
    case Expr::Kind::number:
      return RingElem(preset, e.value);
    case Expr::Kind::name:
      if (!preset->find(e.name)) throw ParseError("name '" + e.name + "' is not in " + preset->key(), e.offset);
      return RingElem::generator(preset, e.name);
    case Expr::Kind::add:
      return to_ring_elem(e.children[0], preset) + to_ring_elem(e.children[1], preset);
    case Expr::Kind::sub:
      return to_ring_elem(e.children[0], preset) - to_ring_elem(e.children[1], preset);
    case Expr::Kind::mul:
      return to_ring_elem(e.children[0], preset) * to_ring_elem(e.children[1], preset);
    case Expr::Kind::pow:
      return ring::pow(to_ring_elem(e.children[0], preset), e.exponent);
  }
  throw InvariantViolation("unhandled expression node");
}

pic::DivisorClass to_divisor_class(const Expr& e, const pic::PicBasis& basis) {
  const Linear l = linearize(e, basis);
  if (!l.constant.is_zero()) throw ParseError("constant term in a divisor class", e.offset);
  return pic::DivisorClass(basis, l.coeffs);
}

ring::RingElem parse_ring_elem(std::string_view text, const ring::PresetPtr& preset) {
  return to_ring_elem(parse_expression(text, preset), preset);
}

pic::DivisorClass parse_divisor_class(std::string_view text, const pic::PicBasis& basis) {
  return to_divisor_class(parse_expression(text, basis), basis);
}

}  // namespace spincalc::expr
