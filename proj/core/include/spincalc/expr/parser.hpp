#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spincalc/kernel/scalar.hpp"
#include "spincalc/pic/classes.hpp"
#include "spincalc/ring/element.hpp"

namespace spincalc::expr {

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := atom ('^' nat)?
// atom   := rational | name | '(' expr ')'
// rational := int ('/' nat)?
// name   := eta | gamma | theta | c<nat> | k | lambda | alpha<nat> | beta<nat>
//         | delta<nat> | F1 | F2 | Delta | omega

struct Expr {
  enum class Kind { number, name, add, sub, mul, pow };

  Kind kind = Kind::number;
  std::size_t offset = 0;  // byte offset of the token that produced the node
  Scalar value;            // number
  std::string name;        // name
  unsigned exponent = 0;   // pow
  std::vector<Expr> children;
};

/// Names resolve against either a ring preset or a Picard basis.
using Context = std::variant<ring::PresetPtr, pic::PicBasis>;

/// True when the identifier is spelled as the grammar allows.
bool is_grammar_name(std::string_view name);

/// Throws ParseError (with byte offset) on malformed input or a name that
/// is not in the context.
Expr parse_expression(std::string_view text, const Context& context);

ring::RingElem to_ring_elem(const Expr& e, const ring::PresetPtr& preset);

/// The expression must be linear in the basis generators with no constant
/// term; violations throw ParseError at the offending node.
pic::DivisorClass to_divisor_class(const Expr& e, const pic::PicBasis& basis);

ring::RingElem parse_ring_elem(std::string_view text, const ring::PresetPtr& preset);
pic::DivisorClass parse_divisor_class(std::string_view text, const pic::PicBasis& basis);

}  // namespace spincalc::expr
