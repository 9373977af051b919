#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewchar/rational.hpp"

namespace skewchar {

/// Variable lambda_{i,j} with 1 <= i < j, printed as "l<i>_<j>".
///
/// Only the strict upper triangle is ever named; a lower-triangle entry is
/// written as the negated upper variable where it is used.
struct VarId {
  int i = 0;
  int j = 0;

  VarId() = default;
  /// Throws InputError unless 1 <= i < j.
  VarId(int i_, int j_);

  friend auto operator<=>(const VarId&, const VarId&) = default;
  friend bool operator==(const VarId&, const VarId&) = default;

  std::string str() const;
};

/// All variables for dimension n in canonical order l1_2 < l1_3 < ... < l{n-1}_n.
std::vector<VarId> variables_for(int n);

/// Product of variables with positive exponents, kept sorted by VarId.
class Monomial {
 public:
  using Factor = std::pair<VarId, unsigned>;

  Monomial() = default;
  static Monomial of(VarId v, unsigned exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  unsigned degree() const;
  unsigned exponent(VarId v) const;
  unsigned max_exponent() const;

  Monomial operator*(const Monomial& o) const;
  /// True when every exponent of `divisor` is <= the matching one here.
  bool divisible_by(const Monomial& divisor) const;
  /// Precondition: divisible_by(divisor).
  Monomial operator/(const Monomial& divisor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded order: lower total degree first; within a degree, the monomial
/// with the larger exponent on the earliest differing variable comes first
/// (so l1_2^2 < l1_2*l1_3 < l1_3^2). Compatible with multiplication, hence
/// usable for leading-term division.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using Assignment = std::map<VarId, Rational>;

/// Sparse polynomial over the rationals in the variables lambda_{ij}.
/// No zero coefficient is ever stored, so term-map equality is polynomial
/// equality.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT: constants promote implicitly
  MultiPoly(int constant) : MultiPoly(Rational(constant)) {}  // NOLINT
  static MultiPoly variable(VarId v);
  static MultiPoly term(const Monomial& m, const Rational& c);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Largest exponent of any single variable in any term.
  unsigned max_var_exponent() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Largest term under MonomialOrder. Precondition: nonzero.
  const std::pair<const Monomial, Rational>& leading_term() const;

  /// Adds c*m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Substitutes exact values; throws MissingVariable if a variable of the
  /// polynomial is absent from the assignment.
  Rational eval(const Assignment& values) const;

 private:
  TermMap terms_;
};

/// Exact quotient p / q. Throws NonExactDivision when q does not divide p,
/// std::domain_error when q is zero.
MultiPoly divexact(const MultiPoly& p, const MultiPoly& q);

/// Canonical text, e.g. "1 + 1/2*l1_3 - l1_2^2". Zero prints as "0".
std::string to_string(const MultiPoly& p);

/// Inverse of to_string. Also accepts factors in any order, repeated
/// variables and surrounding whitespace. Throws ParseError.
MultiPoly parse_poly(std::string_view text);

}  // namespace skewchar
