#include "skewchar/random_forms.hpp"

namespace skewchar {

Rational random_rational(std::mt19937_64& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<long> numer(-num_bound, num_bound);
  std::uniform_int_distribution<long> denom(1, den_bound);
  const long p = numer(rng);
  const long q = denom(rng);
  return Rational(mpz_class(p), mpz_class(q));
}

SymmetricMatrix random_symmetric(int n, std::mt19937_64& rng, int num_bound, int den_bound) {
  RatMatrix m(n);
  for (int r = 0; r < n; ++r) {
    for (int c = r; c < n; ++c) {
      m(r, c) = random_rational(rng, num_bound, den_bound);
      m(c, r) = m(r, c);
    }
  }
  return SymmetricMatrix(std::move(m));
}

TransitionMatrix random_transition(int n, std::mt19937_64& rng, int bound) {
  for (;;) {
    RatMatrix s(n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) s(r, c) = random_rational(rng, bound);
    }
    if (!determinant(s).is_zero()) return TransitionMatrix(std::move(s));
  }
}

SymmetricMatrix random_positive_definite(int n, std::mt19937_64& rng, int bound) {
  RatMatrix b(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) b(r, c) = random_rational(rng, bound);
  }
  RatMatrix a = b.transpose() * b;
  std::uniform_int_distribution<long> shift_num(1, 3);
  std::uniform_int_distribution<long> shift_den(1, 4);
  for (int k = 0; k < n; ++k) {
    const long p = shift_num(rng);
    const long q = shift_den(rng);
    a(k, k) += Rational(mpz_class(p), mpz_class(q));
  }
  return SymmetricMatrix(std::move(a));
}

SymmetricMatrix random_singular(int n, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> rank_dist(0, n - 1);
  std::bernoulli_distribution coin(0.5);
  const int r = rank_dist(rng);
  // C is r x n; embed it in an n x n matrix whose last n - r rows are zero.
  RatMatrix c(n);
  RatMatrix e(n);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) c(i, j) = random_rational(rng, bound);
    e(i, i) = coin(rng) ? 1 : -1;
  }
  return SymmetricMatrix(c.transpose() * e * c);
}

SymmetricMatrix random_indefinite(int n, std::mt19937_64& rng, int bound) {
  for (;;) {
    SymmetricMatrix a = random_symmetric(n, rng, bound);
    const Signature sig = signature(a);
    if (sig.zero == 0 && sig.positive > 0 && sig.negative > 0) return a;
  }
}

}  // namespace skewchar
