#pragma once

// Reference implementations used only by the tests. Each one takes a
// different route from the library code it is compared against.

#include <cstdlib>
#include <optional>
#include <vector>

#include "skewchar/engine.hpp"
#include "skewchar/forms.hpp"

namespace oracle {

using skewchar::MultiPoly;
using skewchar::RatMatrix;
using skewchar::Rational;
using skewchar::SymbolicMatrix;

// Laplace expansion along the first row of the submatrix on `rows` x `cols`.
inline MultiPoly cofactor_det(const SymbolicMatrix& m, const std::vector<int>& rows,
                              const std::vector<int>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return MultiPoly(1);
  if (k == 1) return m(rows[0], cols[0]);
  MultiPoly total;
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < k; ++c) {
    const MultiPoly& entry = m(rows[0], cols[c]);
    if (entry.is_zero()) continue;
    std::vector<int> sub_cols;
    for (std::size_t t = 0; t < k; ++t) {
      if (t != c) sub_cols.push_back(cols[t]);
    }
    MultiPoly term = entry * cofactor_det(m, sub_rows, sub_cols);
    if (c % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

inline MultiPoly cofactor_det(const SymbolicMatrix& m) {
  std::vector<int> idx(static_cast<std::size_t>(m.size()));
  for (int k = 0; k < m.size(); ++k) idx[k] = k;
  return cofactor_det(m, idx, idx);
}

// Leibniz formula over all permutations (Heap's algorithm keeps the sign).
inline Rational leibniz_det(const RatMatrix& m) {
  const int n = m.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) perm[k] = k;
  auto term = [&](int sign) {
    Rational t(sign);
    for (int r = 0; r < n; ++r) t *= m(r, perm[r]);
    return t;
  };
  Rational total = term(1);
  int sign = 1;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  int i = 1;
  while (i < n) {
    if (c[i] < i) {
      std::swap(perm[i % 2 == 0 ? 0 : c[i]], perm[i]);
      sign = -sign;
      total += term(sign);
      ++c[i];
      i = 1;
    } else {
      c[i] = 0;
      ++i;
    }
  }
  return total;
}

// Characteristic polynomial det(xI - A), coefficients from x^n down to x^0,
// via the Faddeev-LeVerrier recursion.
inline std::vector<Rational> charpoly(const RatMatrix& a) {
  const int n = a.size();
  std::vector<Rational> coeff(static_cast<std::size_t>(n) + 1);
  coeff[0] = 1;
  RatMatrix mk(n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    RatMatrix next = a * mk;
    for (int d = 0; d < n; ++d) next(d, d) += coeff[k - 1];
    mk = next;
    RatMatrix am = a * mk;
    Rational trace(0);
    for (int d = 0; d < n; ++d) trace += am(d, d);
    coeff[k] = -trace / Rational(k);
  }
  return coeff;
}

// Signature of a symmetric matrix from Descartes' rule, exact because the
// characteristic polynomial of a symmetric matrix has only real roots.
inline skewchar::Signature descartes_signature(const RatMatrix& a) {
  auto coeff = charpoly(a);
  const int n = a.size();
  int zero = 0;
  while (zero < n && coeff[n - zero].is_zero()) ++zero;
  auto sign_changes = [](const std::vector<Rational>& c) {
    int changes = 0;
    int last = 0;
    for (const auto& x : c) {
      if (x.sign() == 0) continue;
      if (last != 0 && x.sign() != last) ++changes;
      last = x.sign();
    }
    return changes;
  };
  std::vector<Rational> neg = coeff;
  for (int k = 0; k <= n; ++k) {
    if ((n - k) % 2 == 1) neg[k] = -neg[k];
  }
  return {sign_changes(coeff), sign_changes(neg), zero};
}

// Exhaustive search for a nontrivial integer zero of a x^2 + b y^2 + c z^2
// inside |x|,|y|,|z| <= box. With box at Holzer's bound this is complete.
inline bool ternary_has_zero(long a, long b, long c, long box) {
  for (long x = 0; x <= box; ++x) {
    for (long y = -box; y <= box; ++y) {
      for (long z = -box; z <= box; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        if (a * x * x + b * y * y + c * z * z == 0) return true;
      }
    }
  }
  return false;
}

}  // namespace oracle
