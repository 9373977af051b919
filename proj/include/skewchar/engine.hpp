#pragma once

#include <functional>
#include <string>
#include <vector>

#include "skewchar/forms.hpp"
#include "skewchar/poly.hpp"

namespace skewchar {

/// n x n matrix of polynomials, row-major, 0-based.
class SymbolicMatrix {
 public:
  SymbolicMatrix() = default;
  explicit SymbolicMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  int size() const { return n_; }
  MultiPoly& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const MultiPoly& operator()(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * n_ + c];
  }
  const std::vector<MultiPoly>& entries() const { return a_; }

 private:
  int n_ = 0;
  std::vector<MultiPoly> a_;
};

struct EngineConfig {
  /// Largest n accepted by expand_skewchar (n = 7 means 21 variables).
  int max_dimension = 7;
};

/// A - Lambda with symbolic Lambda: entry (i,j) = a_ij - l_ij above the
/// diagonal and a_ij + l_ij below it.
SymbolicMatrix build_symbolic(const SymmetricMatrix& a);

/// Bareiss elimination over the polynomial ring.
MultiPoly symbolic_determinant(const SymbolicMatrix& m);

/// P(Lambda) = det(A - Lambda) as a canonical polynomial.
/// Throws ExpansionTooLarge when n > config.max_dimension.
MultiPoly expand_skewchar(const SymmetricMatrix& a, const EngineConfig& config = {});

/// det(A - Lambda) at a concrete Lambda. Throws DimensionMismatch.
Rational eval_skewchar(const SymmetricMatrix& a, const SkewMatrix& l);

struct CovarianceSides {
  Rational lhs;  // P_{S^T A S}(S^T Lambda S)
  Rational rhs;  // (det S)^2 P_A(Lambda)
};

CovarianceSides covariance_check(const SymmetricMatrix& a, const SkewMatrix& l,
                                 const TransitionMatrix& s);

/// Pfaffian by first-row expansion; zero for odd n, one for n = 0.
Rational pfaffian(const SkewMatrix& l);

/// Symbolic Pfaffian of the principal submatrix of Lambda on `subset`
/// (1-based, strictly increasing, even length). Throws OddSubset /
/// InputError.
MultiPoly sub_pfaffian_poly(int n, const std::vector<int>& subset);

/// Pfaffian of the principal submatrix on `subset` (0-based) of a skew
/// matrix whose entries are supplied by `entry(r, c)` for r < c.
MultiPoly pfaffian_of(const std::vector<int>& subset,
                      const std::function<MultiPoly(int, int)>& entry);

struct CertificateTerm {
  std::vector<int> subset;  // 1-based indices of the principal block
  Rational weight;          // > 0
  MultiPoly square_root;
};

/// P_A(Lambda) = scale * sum_k weight_k * square_root_k^2 with scale and
/// every weight strictly positive.
struct Certificate {
  int n = 0;
  Rational scale;
  std::vector<CertificateTerm> terms;

  /// The sum of squares multiplied out.
  MultiPoly replay() const;
  /// The sum of squares evaluated at a concrete Lambda.
  Rational evaluate(const SkewMatrix& l) const;
};

/// Sum-of-squares certificate for a positive-definite A. The identity is
/// checked symbolically for n <= 5 and at 100 sampled Lambda above that;
/// a failed check throws std::logic_error. Throws NotPositiveDefinite.
Certificate certify_positive(const SymmetricMatrix& a, const EngineConfig& config = {});

/// "n: <dim>", "scale: p/q", then one "weight: p/q ; sqroot: <poly>" per term.
std::string format_certificate(const Certificate& c);

/// Even subsets of {1..n} ordered by size, then lexicographically.
std::vector<std::vector<int>> even_subsets(int n);

}  // namespace skewchar
