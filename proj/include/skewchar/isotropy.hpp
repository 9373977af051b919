#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace skewchar {

// Rational isotropy of diagonal forms e_1 x_1^2 + ... + e_k x_k^2 with
// nonzero integer coefficients. A nonzero rational solution exists iff the
// form is isotropic over the reals and over every p-adic field; for k >= 5
// the real condition alone suffices.

using Factorization = std::vector<std::pair<mpz_class, int>>;

/// Prime factorization of |n| by trial division with a primality test on
/// the cofactor. nullopt when a composite cofactor is beyond reach.
std::optional<Factorization> factorize(const mpz_class& n);

/// Square-free part with sign: n = core * s^2. nullopt if factoring fails.
std::optional<std::pair<mpz_class, mpz_class>> squarefree_split(const mpz_class& n);

/// Hilbert symbol (a, b)_p for nonzero integers a, b and prime p; p = 0
/// denotes the real place.
int hilbert_symbol(const mpz_class& a, const mpz_class& b, const mpz_class& p);

/// Nontrivial integer (x, y, z) with x^2 = a y^2 + b z^2, for square-free
/// nonzero a, b; nullopt when no such triple exists (or factoring fails).
std::optional<std::vector<mpz_class>> solve_legendre(const mpz_class& a, const mpz_class& b);

enum class Isotropy { Isotropic, Anisotropic, Unknown };

struct IsotropyResult {
  Isotropy status = Isotropy::Unknown;
  std::vector<mpq_class> vector;  // nonzero solution when Isotropic
};

/// Decides isotropy of the diagonal form exactly and, when isotropic,
/// produces a solution. `split_candidates` bounds the auxiliary values tried
/// when a form of rank >= 4 is split into two smaller ones.
IsotropyResult solve_diagonal(const std::vector<mpz_class>& e, long split_candidates = 20000);

/// Exact decision only (Hasse-Minkowski); Unknown if factoring fails.
Isotropy diagonal_isotropy(const std::vector<mpz_class>& e);

}  // namespace skewchar
