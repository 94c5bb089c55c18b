#include "spincalc/kernel/scalar.hpp"

#include <cctype>
#include <ostream>

#include "spincalc/error.hpp"

namespace spincalc {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long num, long den) : Scalar(BigInt(num), BigInt(den)) {}

Scalar::Scalar(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  BigInt num(std::string(num_text), 10);
  if (slash == std::string_view::npos) return Scalar(num);
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text) || den_text[0] == '-') {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  return Scalar(num, BigInt(std::string(den_text), 10));
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

std::string Scalar::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Scalar reciprocal_factorial(int n) {
  if (n < 0) return Scalar(0L);
  return Scalar(BigInt(1), factorial(n));
}

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar r(1L);
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace spincalc
