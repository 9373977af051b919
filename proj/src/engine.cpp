#include "skewchar/engine.hpp"

#include <sstream>
#include <stdexcept>

#include "skewchar/bareiss.hpp"
#include "skewchar/errors.hpp"

namespace skewchar {

namespace {

// Pf of the principal block on `idx`, expanding along its first index:
// Pf = sum_k (-1)^(k+1) m(idx0, idxk) Pf(idx without idx0, idxk).
template <class T, class Entry>
T pfaffian_rec(const std::vector<int>& idx, const Entry& entry) {
  const std::size_t m = idx.size();
  if (m == 0) return T(1);
  if (m % 2 != 0) return T(0);
  if (m == 2) return entry(idx[0], idx[1]);
  T total(0);
  std::vector<int> rest;
  rest.reserve(m - 2);
  for (std::size_t k = 1; k < m; ++k) {
    T a = entry(idx[0], idx[k]);
    if (a == T(0)) continue;
    rest.clear();
    for (std::size_t t = 1; t < m; ++t) {
      if (t != k) rest.push_back(idx[t]);
    }
    T sub = pfaffian_rec<T>(rest, entry);
    if (k % 2 == 1) {
      total += a * sub;
    } else {
      total -= a * sub;
    }
  }
  return total;
}

void check_subset(int n, const std::vector<int>& subset) {
  if (subset.size() % 2 != 0) throw OddSubset("sub_pfaffian_poly: odd subset size");
  int prev = 0;
  for (int i : subset) {
    if (i <= prev || i > n) {
      throw InputError("sub_pfaffian_poly: subset must be strictly increasing within 1..n");
    }
    prev = i;
  }
}

}  // namespace

SymbolicMatrix build_symbolic(const SymmetricMatrix& a) {
  const int n = a.size();
  SymbolicMatrix m(n);
  for (int r = 0; r < n; ++r) {
    m(r, r) = MultiPoly(a(r, r));
    for (int c = r + 1; c < n; ++c) {
      const MultiPoly lam = MultiPoly::variable(VarId(r + 1, c + 1));
      m(r, c) = MultiPoly(a(r, c)) - lam;
      m(c, r) = MultiPoly(a(c, r)) + lam;
    }
  }
  return m;
}

MultiPoly symbolic_determinant(const SymbolicMatrix& m) {
  return bareiss_determinant(
      m.entries(), m.size(), [](const MultiPoly& p) { return p.is_zero(); },
      [](const MultiPoly& p, const MultiPoly& q) { return divexact(p, q); });
}

MultiPoly expand_skewchar(const SymmetricMatrix& a, const EngineConfig& config) {
  if (a.size() > config.max_dimension) {
    throw ExpansionTooLarge("expansion of n = " + std::to_string(a.size()) +
                            " exceeds the dimension cap " + std::to_string(config.max_dimension));
  }
  return symbolic_determinant(build_symbolic(a));
}

Rational eval_skewchar(const SymmetricMatrix& a, const SkewMatrix& l) {
  if (a.size() != l.size()) throw DimensionMismatch("eval_skewchar: dimension mismatch");
  RatMatrix m = a.matrix();
  for (const auto& [v, x] : l.upper()) {
    m(v.i - 1, v.j - 1) -= x;
    m(v.j - 1, v.i - 1) += x;
  }
  return determinant(m);
}

CovarianceSides covariance_check(const SymmetricMatrix& a, const SkewMatrix& l,
                                 const TransitionMatrix& s) {
  if (a.size() != l.size() || a.size() != s.size()) {
    throw DimensionMismatch("covariance_check: dimension mismatch");
  }
  CovarianceSides sides;
  sides.lhs = eval_skewchar(congruence_sym(a, s), congruence_skew(l, s));
  sides.rhs = s.det() * s.det() * eval_skewchar(a, l);
  return sides;
}

Rational pfaffian(const SkewMatrix& l) {
  std::vector<int> idx(static_cast<std::size_t>(l.size()));
  for (int k = 0; k < l.size(); ++k) idx[k] = k;
  return pfaffian_rec<Rational>(idx, [&](int r, int c) { return l.at(r, c); });
}

MultiPoly pfaffian_of(const std::vector<int>& subset,
                      const std::function<MultiPoly(int, int)>& entry) {
  return pfaffian_rec<MultiPoly>(subset, entry);
}

MultiPoly sub_pfaffian_poly(int n, const std::vector<int>& subset) {
  check_subset(n, subset);
  std::vector<int> idx;
  idx.reserve(subset.size());
  for (int i : subset) idx.push_back(i - 1);
  return pfaffian_of(idx, [](int r, int c) { return MultiPoly::variable(VarId(r + 1, c + 1)); });
}

std::vector<std::vector<int>> even_subsets(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Lexicographic combinations of each even size.
  for (int size = 0; size <= n; size += 2) {
    cur.resize(static_cast<std::size_t>(size));
    for (int k = 0; k < size; ++k) cur[k] = k + 1;
    for (;;) {
      out.push_back(cur);
      int pos = size - 1;
      while (pos >= 0 && cur[pos] == n - size + pos + 1) --pos;
      if (pos < 0) break;
      ++cur[pos];
      for (int k = pos + 1; k < size; ++k) cur[k] = cur[k - 1] + 1;
    }
  }
  return out;
}

MultiPoly Certificate::replay() const {
  MultiPoly sum;
  for (const auto& t : terms) sum += (t.square_root * t.square_root) * t.weight;
  return sum * scale;
}

Rational Certificate::evaluate(const SkewMatrix& l) const {
  if (l.size() != n) throw DimensionMismatch("certificate evaluated at wrong dimension");
  const Assignment values = l.assignment();
  Rational sum(0);
  for (const auto& t : terms) {
    const Rational r = t.square_root.eval(values);
    sum += t.weight * r * r;
  }
  return sum * scale;
}

Certificate certify_positive(const SymmetricMatrix& a, const EngineConfig& config) {
  const int n = a.size();
  if (n > config.max_dimension) {
    throw ExpansionTooLarge("certificate of n = " + std::to_string(n) +
                            " exceeds the dimension cap " + std::to_string(config.max_dimension));
  }
  const auto diag = lagrange_diagonalize(a);
  std::vector<Rational> d(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    d[k] = diag.diagonal(k, k);
    if (d[k].sign() <= 0) throw NotPositiveDefinite("certify_positive: form is not positive definite");
  }
  const RatMatrix& s = diag.transition.matrix();

  // Entries of S^T Lambda S as linear forms in the original variables:
  // tilde(r,c) = sum_{k<l} l_kl (s_kr s_lc - s_lr s_kc).
  std::vector<MultiPoly> tilde(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) {
      MultiPoly e;
      for (const VarId v : variables_for(n)) {
        const int k = v.i - 1;
        const int l = v.j - 1;
        const Rational coef = s(k, r) * s(l, c) - s(l, r) * s(k, c);
        e.add_term(Monomial::of(v), coef);
      }
      tilde[static_cast<std::size_t>(r) * n + c] = std::move(e);
    }
  }
  auto entry = [&](int r, int c) { return tilde[static_cast<std::size_t>(r) * n + c]; };

  Certificate cert;
  cert.n = n;
  const Rational det_s = diag.transition.det();
  cert.scale = (det_s * det_s).inverse();
  for (const auto& subset : even_subsets(n)) {
    Rational weight(1);
    std::vector<int> idx;
    std::size_t next = 0;
    for (int k = 0; k < n; ++k) {
      if (next < subset.size() && subset[next] == k + 1) {
        idx.push_back(k);
        ++next;
      } else {
        weight *= d[k];
      }
    }
    MultiPoly root = pfaffian_of(idx, entry);
    if (root.is_zero()) continue;
    cert.terms.push_back({subset, weight, std::move(root)});
  }

  if (n <= 5) {
    if (cert.replay() != expand_skewchar(a, config)) {
      throw std::logic_error("certify_positive: symbolic replay does not match P");
    }
  } else {
    for (std::uint64_t k = 1; k <= 100; ++k) {
      const SkewMatrix l = random_skew(n, k, 5);
      if (cert.evaluate(l) != eval_skewchar(a, l)) {
        throw std::logic_error("certify_positive: sampled value does not match P");
      }
    }
  }
  return cert;
}

std::string format_certificate(const Certificate& c) {
  std::ostringstream out;
  out << "n: " << c.n << "\n";
  out << "scale: " << c.scale << "\n";
  for (const auto& t : c.terms) {
    out << "weight: " << t.weight << " ; sqroot: " << to_string(t.square_root) << "\n";
  }
  return out.str();
}

}  // namespace skewchar
