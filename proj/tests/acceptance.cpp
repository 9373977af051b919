// Acceptance suite: one line per criterion, nonzero exit if any fails.
// All comparisons are exact; the only tolerances are the wall-clock limits.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "skewchar/analyzer.hpp"
#include "skewchar/engine.hpp"
#include "skewchar/random_forms.hpp"

using namespace skewchar;

namespace {

constexpr double kGoldenSeconds = 1.0;
constexpr double kOracleSeconds = 30.0;
constexpr double kPositivitySeconds = 120.0;
constexpr double kCertificateSeconds = 180.0;

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Polynomials expanded by criteria 1 and 2, inspected again by criterion 10.
std::vector<MultiPoly> expanded;

MultiPoly lam(int i, int j) { return MultiPoly::variable(VarId(i, j)); }

MultiPoly sum_of_squares_plus_one(int n) {
  MultiPoly p(1);
  for (const VarId v : variables_for(n)) p += MultiPoly::variable(v) * MultiPoly::variable(v);
  return p;
}

Outcome golden() {
  Outcome o;
  const MultiPoly inner = lam(1, 2) * lam(3, 4) + lam(2, 3) * lam(1, 4) - lam(1, 3) * lam(2, 4);
  const MultiPoly expected[] = {sum_of_squares_plus_one(2), sum_of_squares_plus_one(3),
                                sum_of_squares_plus_one(4) + inner * inner};
  for (int n = 2; n <= 4; ++n) {
    const MultiPoly p = expand_skewchar(SymmetricMatrix::identity(n));
    expanded.push_back(p);
    if (p != expected[n - 2]) {
      o.pass = false;
      o.detail += " n=" + std::to_string(n) + " mismatch";
    }
  }
  if (o.pass) o.detail = "n=2,3,4 exact";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 2);
  int mismatches = 0;
  for (int k = 0; k < 50; ++k) {
    const int n = 1 + k % 4;
    const SymmetricMatrix a = random_symmetric(n, rng, 5, k % 2 == 0 ? 1 : 5);
    const MultiPoly p = expand_skewchar(a);
    expanded.push_back(p);
    if (p != oracle::cofactor_det(build_symbolic(a))) ++mismatches;
  }
  o.pass = mismatches == 0;
  o.detail = std::to_string(50 - mismatches) + "/50 identical";
  return o;
}

Outcome positivity() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 3);
  int violations = 0;
  int evaluations = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k < 25; ++k) {
      const SymmetricMatrix a = random_positive_definite(n, rng);
      for (int s = 0; s < 200; ++s) {
        const SkewMatrix l = random_skew(n, kSeed + 100000ULL * n + 1000ULL * k + s, 10);
        ++evaluations;
        if (eval_skewchar(a, l).sign() <= 0) ++violations;
      }
    }
  }
  o.pass = violations == 0;
  o.detail = std::to_string(evaluations) + " evaluations, " + std::to_string(violations) +
             " non-positive";
  return o;
}

Outcome covariance() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 4);
  int failures = 0;
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + k % 5;
    const SymmetricMatrix a = random_symmetric(n, rng, 5, 3);
    const TransitionMatrix s = random_transition(n, rng);
    const SkewMatrix l = random_skew(n, kSeed + 4000 + k, 5);
    const auto sides = covariance_check(a, l, s);
    if (sides.lhs != sides.rhs) ++failures;
  }
  o.pass = failures == 0;
  o.detail = std::to_string(200 - failures) + "/200 exact";
  return o;
}

Outcome parity() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 5);
  int failures = 0;
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + k % 4;
    const SymmetricMatrix a = random_symmetric(n, rng, 5, 3);
    const SkewMatrix l = random_skew(n, kSeed + 5000 + k, 5);
    const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
    if (eval_skewchar(-a, -l) != sign * eval_skewchar(a, l)) ++failures;
  }
  o.pass = failures == 0;
  o.detail = std::to_string(200 - failures) + "/200 exact";
  return o;
}

Outcome witnesses() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 6);
  int complete = 0;
  int signs_ok = 0;
  int absent = 0;
  int not_found = 0;
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 4;
    const SymmetricMatrix a = random_indefinite(n, rng);
    const Witness w = witness_indefinite(a);
    const bool plus = w.plus && eval_skewchar(a, w.plus->lambda).sign() > 0;
    const bool minus = w.minus && eval_skewchar(a, w.minus->lambda).sign() < 0;
    const bool zero = w.zero && eval_skewchar(a, w.zero->lambda).is_zero();
    if (plus && minus) ++signs_ok;
    if (plus && minus && zero) ++complete;
    if (w.zero_status == ZeroStatus::Absent) ++absent;
    if (w.zero_status == ZeroStatus::NotFound) ++not_found;
  }
  o.pass = complete == 50;
  std::ostringstream d;
  d << complete << "/50 with exact 0, >0, <0; plus/minus valid " << signs_ok
    << "/50; rational zero provably absent " << absent << "; undecided " << not_found;
  o.detail = d.str();
  return o;
}

Outcome degenerate() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 7);
  int ok = 0;
  for (int k = 0; k < 20; ++k) {
    const int n = 2 + k % 4;
    const SymmetricMatrix a = random_singular(n, rng);
    const ClassificationReport r = classify(a);
    if (r.verdict == Verdict::Degenerate && eval_skewchar(a, SkewMatrix(n)).is_zero()) ++ok;
  }
  o.pass = ok == 20;
  o.detail = std::to_string(ok) + "/20 degenerate with P(0) = 0";
  return o;
}

Outcome certificates() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 8);
  int symbolic_ok = 0;
  for (int k = 0; k < 25; ++k) {
    const int n = 2 + k % 4;
    const SymmetricMatrix a = random_positive_definite(n, rng);
    const Certificate c = certify_positive(a);
    bool ok = c.scale.sign() > 0 && c.replay() == expand_skewchar(a);
    for (const auto& t : c.terms) ok = ok && t.weight.sign() > 0;
    if (ok) ++symbolic_ok;
  }
  int numeric_ok = 0;
  constexpr int kSixes = 5;
  for (int k = 0; k < kSixes; ++k) {
    const SymmetricMatrix a = random_positive_definite(6, rng);
    const Certificate c = certify_positive(a);
    bool ok = c.scale.sign() > 0;
    for (const auto& t : c.terms) ok = ok && t.weight.sign() > 0;
    for (int s = 0; s < 100 && ok; ++s) {
      const SkewMatrix l = random_skew(6, kSeed + 8000 + 100 * k + s, 7);
      ok = c.evaluate(l) == eval_skewchar(a, l);
    }
    if (ok) ++numeric_ok;
  }
  o.pass = symbolic_ok == 25 && numeric_ok == kSixes;
  o.detail = std::to_string(symbolic_ok) + "/25 symbolic (n<=5), " + std::to_string(numeric_ok) +
             "/" + std::to_string(kSixes) + " numeric at 100 points (n=6)";
  return o;
}

Outcome pfaffians() {
  Outcome o;
  int ok = 0;
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + 2 * (k % 4);
    const SkewMatrix l = random_skew(n, kSeed + 9000 + k, 6);
    const Rational pf = pfaffian(l);
    if (pf * pf == oracle::leibniz_det(l.full())) ++ok;
  }
  int odd_ok = 0;
  for (int n = 1; n <= 7; n += 2) {
    if (pfaffian(random_skew(n, kSeed + n, 6)).is_zero()) ++odd_ok;
  }
  o.pass = ok == 100 && odd_ok == 4;
  o.detail = std::to_string(ok) + "/100 even, " + std::to_string(odd_ok) + "/4 odd zero";
  return o;
}

Outcome degree_bound() {
  Outcome o;
  unsigned worst = 0;
  for (const MultiPoly& p : expanded) worst = std::max(worst, p.max_var_exponent());
  o.pass = !expanded.empty() && worst <= 2;
  o.detail = std::to_string(expanded.size()) + " polynomials, max exponent " + std::to_string(worst);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit_seconds;  // 0: no limit
  };
  const std::vector<Criterion> criteria = {
      {1, "golden expansions", golden, kGoldenSeconds},
      {2, "oracle equivalence", oracle_equivalence, kOracleSeconds},
      {3, "positive-definite forms give positive P", positivity, kPositivitySeconds},
      {4, "covariance law", covariance, 0},
      {5, "parity law", parity, 0},
      {6, "indefinite witnesses", witnesses, 0},
      {7, "degenerate branch", degenerate, 0},
      {8, "certificate soundness", certificates, kCertificateSeconds},
      {9, "pfaffian identity", pfaffians, 0},
      {10, "per-variable degree bound", degree_bound, 0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail += " (over time limit)";
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s [%s] %.2fs\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
