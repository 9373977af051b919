#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace skewchar {

/// Exact fraction num/den with den > 0 and gcd(|num|, den) = 1.
///
/// Every constructor and arithmetic operator leaves the value in this
/// canonical form, so structural equality is value equality.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(static_cast<long>(v)) {}  // NOLINT: implicit by design of a scalar
  Rational(long v) : v_(v) {}                    // NOLINT
  explicit Rational(const mpz_class& integer) : v_(integer) {}
  /// Throws std::domain_error when den == 0.
  Rational(const mpz_class& num, const mpz_class& den);

  /// Accepts "p" or "p/q" with optional sign and surrounding whitespace.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;

  /// Largest integer <= value.
  mpz_class floor() const;

  /// Exact square root when the value is the square of a rational.
  std::optional<Rational> exact_sqrt() const;

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  double to_double() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Power by repeated squaring; exponent >= 0.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace skewchar
