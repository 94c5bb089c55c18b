#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace spincalc {

using BigInt = mpz_class;

/// Exact rational number. Always held in lowest terms with a positive
/// denominator; this is the only number type the engine computes with.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  Scalar(const BigInt& value) : q_(value) {}  // NOLINT
  Scalar(long num, long den);
  Scalar(const BigInt& num, const BigInt& den);

  /// Accepts "p", "-p" and "p/q" (q > 0).
  static Scalar parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  Scalar abs() const;

  /// "p/q", or "p" when q = 1.
  std::string str() const;

  Scalar& operator+=(const Scalar& o) {
    q_ += o.q_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    q_ -= o.q_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    q_ *= o.q_;
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  Scalar operator-() const {
    Scalar r;
    r.q_ = -q_;
    return r;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// n! for n >= 0.
BigInt factorial(int n);

/// 1/n!, extended by 0 for negative n.
Scalar reciprocal_factorial(int n);

/// Integer power of a scalar, exponent >= 0.
Scalar pow(const Scalar& base, unsigned exponent);

}  // namespace spincalc
