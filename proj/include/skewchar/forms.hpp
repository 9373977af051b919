#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "skewchar/poly.hpp"
#include "skewchar/rational.hpp"

namespace skewchar {

/// Dense square matrix of rationals, row-major, 0-based indexing.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  RatMatrix(int n, std::vector<Rational> row_major);

  static RatMatrix identity(int n);
  static RatMatrix diagonal(const std::vector<Rational>& d);

  int size() const { return n_; }
  Rational& operator()(int r, int c) { return a_[idx(r, c)]; }
  const Rational& operator()(int r, int c) const { return a_[idx(r, c)]; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator-() const;
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * n_ + c; }

  int n_ = 0;
  std::vector<Rational> a_;
};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
Rational determinant(const RatMatrix& m);

/// Gauss-Jordan inverse; throws SingularTransition for singular input.
RatMatrix inverse(const RatMatrix& m);

/// Matrix A of a quadratic form. Symmetry is checked on construction.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  /// Throws NotSymmetric.
  explicit SymmetricMatrix(RatMatrix m);

  static SymmetricMatrix identity(int n) { return SymmetricMatrix(RatMatrix::identity(n)); }
  static SymmetricMatrix diagonal(const std::vector<Rational>& d) {
    return SymmetricMatrix(RatMatrix::diagonal(d));
  }

  int size() const { return m_.size(); }
  const Rational& operator()(int r, int c) const { return m_(r, c); }
  const RatMatrix& matrix() const { return m_; }
  SymmetricMatrix operator-() const { return SymmetricMatrix(-m_); }
  bool is_diagonal() const;

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  RatMatrix m_;
};

/// Skew-symmetric Lambda stored by its strict upper triangle; zero entries
/// are not stored.
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(int n) : n_(n) {}
  /// Throws InputError if a key lies outside dimension n.
  SkewMatrix(int n, const std::map<VarId, Rational>& upper);
  /// Throws InputError unless m is skew-symmetric with zero diagonal.
  static SkewMatrix from_full(const RatMatrix& m);

  int size() const { return n_; }
  /// Value of lambda_{ij}, i < j (zero when unset).
  Rational get(VarId v) const;
  void set(VarId v, const Rational& value);
  /// Entry of the full matrix, 0-based; the lower triangle holds -lambda_{ij}.
  Rational at(int r, int c) const;
  RatMatrix full() const;
  const std::map<VarId, Rational>& upper() const { return upper_; }
  /// Value for every variable of dimension n (zeros included).
  Assignment assignment() const;
  SkewMatrix operator-() const;

  friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

 private:
  int n_ = 0;
  std::map<VarId, Rational> upper_;
};

/// Change-of-basis matrix S with its determinant cached; det S != 0.
class TransitionMatrix {
 public:
  /// Throws SingularTransition.
  explicit TransitionMatrix(RatMatrix s);
  static TransitionMatrix identity(int n) { return TransitionMatrix(RatMatrix::identity(n)); }

  int size() const { return s_.size(); }
  const RatMatrix& matrix() const { return s_; }
  const Rational& det() const { return det_; }

 private:
  RatMatrix s_;
  Rational det_;
};

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// S^T A S. Throws DimensionMismatch.
SymmetricMatrix congruence_sym(const SymmetricMatrix& a, const TransitionMatrix& s);
/// S^T Lambda S. Throws DimensionMismatch.
SkewMatrix congruence_skew(const SkewMatrix& l, const TransitionMatrix& s);

struct Diagonalization {
  TransitionMatrix transition;
  SymmetricMatrix diagonal;
};

/// Rational congruence diagonalization (Lagrange reduction): returns S and
/// D with S^T A S = D. D is not normalized; its entries keep whatever
/// rational magnitudes the reduction produced.
Diagonalization lagrange_diagonalize(const SymmetricMatrix& a);

Signature signature(const SymmetricMatrix& a);

/// Deterministic random skew matrix: each lambda_{ij} = p/q with
/// |p| <= bound and 1 <= q <= bound. Throws InputError if bound < 1.
SkewMatrix random_skew(int n, std::uint64_t seed, int bound);

// Text formats. Symmetric: "n" then n rows of n rationals. Skew: "n" then
// one "i j value" line per strict-upper entry (1-based). Lines starting
// with '#' and blank lines are ignored.
SymmetricMatrix parse_symmetric(std::istream& in);
SymmetricMatrix parse_symmetric(const std::string& text);
SkewMatrix parse_skew(std::istream& in);
SkewMatrix parse_skew(const std::string& text);
std::string format_symmetric(const SymmetricMatrix& a);
/// Writes only nonzero entries, in variable order.
std::string format_skew(const SkewMatrix& l);

}  // namespace skewchar
