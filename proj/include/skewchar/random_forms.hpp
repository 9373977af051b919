#pragma once

#include <random>

#include "skewchar/forms.hpp"

namespace skewchar {

// Generators for randomized checks. All draws come from the caller's
// engine, so a fixed seed reproduces the same sequence.

/// Uniform rational p/q with |p| <= num_bound, 1 <= q <= den_bound.
Rational random_rational(std::mt19937_64& rng, int num_bound, int den_bound = 1);

/// Symmetric matrix with independent entries from random_rational.
SymmetricMatrix random_symmetric(int n, std::mt19937_64& rng, int num_bound, int den_bound = 1);

/// Invertible matrix with integer entries in [-bound, bound] (redrawn until
/// the determinant is nonzero).
TransitionMatrix random_transition(int n, std::mt19937_64& rng, int bound = 3);

/// B^T B + diag(shift) with B integer in [-bound, bound] and each shift a
/// positive rational; always positive definite.
SymmetricMatrix random_positive_definite(int n, std::mt19937_64& rng, int bound = 3);

/// C^T E C with C of shape r x n, r < n, and E = diag(+-1): rank <= r < n.
SymmetricMatrix random_singular(int n, std::mt19937_64& rng, int bound = 3);

/// Integer symmetric matrix in [-bound, bound], redrawn until it is
/// nondegenerate with both positive and negative directions.
SymmetricMatrix random_indefinite(int n, std::mt19937_64& rng, int bound = 5);

}  // namespace skewchar
