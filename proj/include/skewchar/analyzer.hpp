#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewchar/forms.hpp"
#include "skewchar/isotropy.hpp"

namespace skewchar {

enum class Verdict { PositiveDefinite, NegativeDefinite, Degenerate, Indefinite };
enum class SignPrediction { AlwaysPositive, AlwaysNegative, NotSignDefinite };

std::string to_string(Verdict v);
std::string to_string(SignPrediction s);

struct WitnessPoint {
  SkewMatrix lambda;
  Rational value;  // exact P(lambda) on the original A
};

/// Whether an exact zero of P was produced.
///   Found     - lambda_zero is set.
///   Absent    - no rational Lambda gives P = 0 (proved; happens for
///               anisotropic forms, e.g. n = 2 with -det A not a square).
///   NotFound  - undecided: factoring or the split search ran out of reach.
enum class ZeroStatus { Found, Absent, NotFound };
std::string to_string(ZeroStatus z);

struct Witness {
  std::optional<WitnessPoint> zero;
  std::optional<WitnessPoint> plus;
  std::optional<WitnessPoint> minus;
  ZeroStatus zero_status = ZeroStatus::NotFound;
};

struct ClassificationReport {
  Verdict verdict = Verdict::Degenerate;
  Signature signature;
  std::optional<Witness> witness;
  SignPrediction predicted_sign = SignPrediction::NotSignDefinite;
};

struct WitnessOptions {
  /// Auxiliary values tried when splitting a rank >= 4 form while building
  /// an isotropic vector.
  long split_candidates = 20000;
};

ClassificationReport classify(const SymmetricMatrix& a, const WitnessOptions& options = {});

/// Sign-change witnesses for a nondegenerate indefinite form. plus and minus
/// are always produced; zero whenever a rational zero of P can be found.
/// Throws NotIndefinite.
Witness witness_indefinite(const SymmetricMatrix& a, const WitnessOptions& options = {});

struct IsotropicVector {
  Isotropy status = Isotropy::Unknown;
  std::optional<std::vector<Rational>> vector;  // x != 0 with x^T A x = 0
};

/// Decides rational isotropy of A and, when isotropic, returns a vector.
/// Degenerate forms yield a kernel direction.
IsotropicVector find_isotropic_vector(const SymmetricMatrix& a, const WitnessOptions& options = {});

/// Skew Lambda with (A - Lambda) x = 0 for an isotropic x, hence P(Lambda) = 0.
SkewMatrix zero_from_isotropic(const SymmetricMatrix& a, const std::vector<Rational>& x);

struct ProbeReport {
  int trials = 0;
  std::uint64_t seed = 0;
  int bound = 0;
  int positives = 0;
  int negatives = 0;
  int zeros = 0;
};

/// Tallies sign(P) over random_skew(n, seed + k, bound), k = 1..trials.
ProbeReport sign_probe(const SymmetricMatrix& a, int trials, std::uint64_t seed, int bound);

struct CrossCheck {
  bool pass = false;
  std::string detail;
};

/// Consistency of the exact classification with the behaviour of P:
/// definite forms must show a single strict sign under sampling, the others
/// must carry witnesses that re-evaluate correctly.
CrossCheck crosscheck_theorem31(const SymmetricMatrix& a, int trials, std::uint64_t seed,
                                int bound);

/// True when every witness point present re-evaluates to its recorded value
/// with the sign its slot demands.
bool witness_valid(const SymmetricMatrix& a, const Witness& w);

std::string format_witness(const Witness& w);
std::string format_report(const ClassificationReport& r);
std::string format_probe(const ProbeReport& p);

}  // namespace skewchar
