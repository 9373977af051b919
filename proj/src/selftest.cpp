#include "skewchar/selftest.hpp"

#include <random>

#include "skewchar/analyzer.hpp"
#include "skewchar/random_forms.hpp"

namespace skewchar {

namespace {

MultiPoly sum_of_squares_of_vars(int n) {
  MultiPoly p(1);
  for (const VarId v : variables_for(n)) p.add_term(Monomial::of(v, 2), Rational(1));
  return p;
}

// 1 + sum of squares + (l12 l34 + l23 l14 - l13 l24)^2, assembled from its
// displayed shape rather than by any determinant routine.
MultiPoly golden_identity4() {
  const MultiPoly inner = parse_poly("l1_2*l3_4 + l2_3*l1_4 - l1_3*l2_4");
  return sum_of_squares_of_vars(4) + inner * inner;
}

SelftestCheck check(std::string name, bool pass, std::string detail = {}) {
  return {std::move(name), pass, std::move(detail)};
}

}  // namespace

std::vector<SelftestCheck> run_selftest(const SelftestHooks& hooks) {
  std::vector<SelftestCheck> out;
  auto expand = [&](const SymmetricMatrix& a) { return symbolic_determinant(hooks.build(a)); };

  out.push_back(check("golden n=2", to_string(expand(SymmetricMatrix::identity(2))) == "1 + l1_2^2"));
  out.push_back(check("golden n=3", to_string(expand(SymmetricMatrix::identity(3))) ==
                                        "1 + l1_2^2 + l1_3^2 + l2_3^2"));
  out.push_back(check("golden n=4", expand(SymmetricMatrix::identity(4)) == golden_identity4()));

  std::mt19937_64 rng(20240601);

  {
    bool ok = true;
    for (int trial = 0; trial < 10 && ok; ++trial) {
      const int n = 2 + trial % 3;
      const auto a = random_symmetric(n, rng, 4, 3);
      const auto p = expand(a);
      ok = p.max_var_exponent() <= 2;
      for (std::uint64_t k = 0; k < 3 && ok; ++k) {
        const auto l = random_skew(n, 1000 + trial * 10 + k, 5);
        ok = p.eval(l.assignment()) == eval_skewchar(a, l);
      }
    }
    out.push_back(check("expand/eval agreement", ok));
  }

  {
    bool ok = true;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      const int n = 1 + trial % 5;
      const auto a = random_symmetric(n, rng, 5, 3);
      const auto l = random_skew(n, 2000 + trial, 5);
      const auto sides = covariance_check(a, l, random_transition(n, rng));
      ok = sides.lhs == sides.rhs;
    }
    out.push_back(check("covariance law", ok));
  }

  {
    bool ok = true;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      const int n = 2 + trial % 4;
      const auto a = random_symmetric(n, rng, 5, 3);
      const auto l = random_skew(n, 3000 + trial, 5);
      const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
      ok = eval_skewchar(-a, -l) == sign * eval_skewchar(a, l);
    }
    out.push_back(check("parity law", ok));
  }

  {
    const auto w = witness_indefinite(SymmetricMatrix::diagonal({1, -1}));
    bool ok = w.zero && w.plus && w.minus && w.zero->value == Rational(0) &&
              w.minus->value == Rational(-1) && w.plus->value == Rational(3);
    for (const auto& a : {SymmetricMatrix(RatMatrix(2, {0, 1, 1, 0})),
                          SymmetricMatrix::diagonal({1, 1, -1, -1}),
                          SymmetricMatrix::diagonal({2, -3, 5})}) {
      ok = ok && witness_valid(a, witness_indefinite(a)) && crosscheck_theorem31(a, 10, 0, 5).pass;
    }
    out.push_back(check("indefinite witnesses", ok));
  }

  {
    const auto r = classify(SymmetricMatrix(RatMatrix(2, {1, 2, 2, 4})));
    out.push_back(check("degenerate branch", r.verdict == Verdict::Degenerate && r.witness &&
                                                 r.witness->zero &&
                                                 r.witness->zero->value.is_zero()));
  }

  {
    bool ok = true;
    for (int trial = 0; trial < 4 && ok; ++trial) {
      const auto a = trial == 0 ? SymmetricMatrix::identity(4)
                                : random_positive_definite(2 + trial, rng);
      const auto cert = certify_positive(a);
      ok = cert.scale.sign() > 0 && cert.replay() == symbolic_determinant(hooks.build(a));
      for (const auto& t : cert.terms) ok = ok && t.weight.sign() > 0;
    }
    out.push_back(check("positivity certificate", ok));
  }

  {
    bool ok = true;
    for (int trial = 0; trial < 10 && ok; ++trial) {
      const int n = 2 * (1 + trial % 3);
      const auto l = random_skew(n, 4000 + trial, 5);
      const Rational pf = pfaffian(l);
      ok = pf * pf == determinant(l.full()) && pfaffian(random_skew(n + 1, trial, 5)).is_zero();
    }
    out.push_back(check("pfaffian identity", ok));
  }

  {
    bool ok = true;
    for (int n = 2; n <= 5 && ok; ++n) {
      const auto a = -SymmetricMatrix::identity(n);
      const auto probe = sign_probe(a, 25, 7, 5);
      ok = n % 2 == 0 ? probe.positives == 25 : probe.negatives == 25;
    }
    out.push_back(check("negative definite parity", ok));
  }
  return out;
}

}  // namespace skewchar
