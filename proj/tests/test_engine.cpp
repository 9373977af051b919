#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "skewchar/engine.hpp"
#include "skewchar/errors.hpp"
#include "skewchar/random_forms.hpp"

using namespace skewchar;

namespace {

MultiPoly lam(int i, int j) { return MultiPoly::variable(VarId(i, j)); }

SymmetricMatrix sym(int n, std::vector<Rational> v) { return SymmetricMatrix(RatMatrix(n, std::move(v))); }

// Pf(L)^2 = det(L) checked through the Leibniz oracle.
Rational det_by_leibniz(const SkewMatrix& l) { return oracle::leibniz_det(l.full()); }

}  // namespace

TEST_CASE("build_symbolic") {
  const SymbolicMatrix m = build_symbolic(SymmetricMatrix::identity(2));
  CHECK(m(0, 0) == MultiPoly(1));
  CHECK(m(0, 1) == -lam(1, 2));
  CHECK(m(1, 0) == lam(1, 2));
  CHECK(m(1, 1) == MultiPoly(1));

  const SymbolicMatrix m3 = build_symbolic(SymmetricMatrix::identity(3));
  CHECK(m3(0, 2) == -lam(1, 3));
  CHECK(m3(2, 1) == lam(2, 3));
  CHECK(m3(2, 2) == MultiPoly(1));

  const SymbolicMatrix z = build_symbolic(sym(2, {0, 0, 0, 0}));
  CHECK(z(0, 0).is_zero());
  CHECK(z(0, 1) == -lam(1, 2));
  CHECK(z(1, 0) == lam(1, 2));
}

TEST_CASE("expand_skewchar: identities") {
  CHECK(to_string(expand_skewchar(SymmetricMatrix::identity(2))) == "1 + l1_2^2");
  CHECK(to_string(expand_skewchar(SymmetricMatrix::identity(3))) ==
        "1 + l1_2^2 + l1_3^2 + l2_3^2");
  const MultiPoly inner = lam(1, 2) * lam(3, 4) + lam(2, 3) * lam(1, 4) - lam(1, 3) * lam(2, 4);
  MultiPoly squares(1);
  for (const VarId v : variables_for(4)) squares += MultiPoly::variable(v) * MultiPoly::variable(v);
  const MultiPoly p4 = expand_skewchar(SymmetricMatrix::identity(4));
  CHECK(p4 == squares + inner * inner);
  const std::string text = to_string(p4);
  CHECK(text.find("2*l1_2*l1_4*l2_3*l3_4") != std::string::npos);
  // The same term written in another factor order names the same monomial.
  CHECK(parse_poly("2*l1_2*l2_3*l1_4*l3_4") == parse_poly("2*l1_2*l1_4*l2_3*l3_4"));
  CHECK(parse_poly(text) == p4);
}

TEST_CASE("expand_skewchar: general 2x2") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 20; ++k) {
    const SymmetricMatrix a = random_symmetric(2, rng, 6, 5);
    const Rational det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    REQUIRE(expand_skewchar(a) == MultiPoly(det) + lam(1, 2) * lam(1, 2));
  }
}

TEST_CASE("expand_skewchar: dimension cap") {
  CHECK_THROWS_AS(expand_skewchar(SymmetricMatrix::identity(8)), ExpansionTooLarge);
  CHECK_THROWS_AS(expand_skewchar(SymmetricMatrix::identity(4), EngineConfig{3}), ExpansionTooLarge);
  CHECK_NOTHROW(expand_skewchar(SymmetricMatrix::identity(3), EngineConfig{3}));
}

TEST_CASE("eval_skewchar") {
  for (int n = 1; n <= 6; ++n) CHECK(eval_skewchar(SymmetricMatrix::identity(n), SkewMatrix(n)) == Rational(1));
  const SkewMatrix l(3, {{VarId(1, 2), 1}, {VarId(1, 3), 2}, {VarId(2, 3), 3}});
  CHECK(eval_skewchar(SymmetricMatrix::identity(3), l) == Rational(15));
  CHECK(eval_skewchar(SymmetricMatrix::diagonal({1, -1}), SkewMatrix(2, {{VarId(1, 2), 1}})) ==
        Rational(0));
  CHECK_THROWS_AS(eval_skewchar(SymmetricMatrix::identity(3), SkewMatrix(2)), DimensionMismatch);
}

TEST_CASE("symbolic determinant matches the cofactor oracle") {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 40; ++k) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const SymmetricMatrix a = random_symmetric(n, rng, 5, k % 2 ? 3 : 1);
    const SymbolicMatrix m = build_symbolic(a);
    const MultiPoly p = symbolic_determinant(m);
    REQUIRE(p == oracle::cofactor_det(m));
    REQUIRE(p.max_var_exponent() <= 2);
    // Expansion and direct evaluation agree at random points.
    const SkewMatrix l = random_skew(n, 500 + k, 4);
    REQUIRE(p.eval(l.assignment()) == eval_skewchar(a, l));
  }
}

TEST_CASE("covariance_check") {
  const SymmetricMatrix a = sym(3, {2, 1, 0, 1, -1, 3, 0, 3, 4});
  const SkewMatrix l = random_skew(3, 9, 5);
  const auto same = covariance_check(a, l, TransitionMatrix::identity(3));
  CHECK(same.lhs == same.rhs);
  CHECK(same.lhs == eval_skewchar(a, l));

  const auto scaled = covariance_check(a, SkewMatrix(3), TransitionMatrix(RatMatrix::diagonal({2, 1, 1})));
  CHECK(scaled.lhs == Rational(4) * determinant(a.matrix()));
  CHECK(scaled.lhs == scaled.rhs);

  std::mt19937_64 rng(23);
  for (int k = 0; k < 50; ++k) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const SymmetricMatrix b = random_symmetric(n, rng, 5, 3);
    const TransitionMatrix s = random_transition(n, rng);
    const SkewMatrix m = random_skew(n, 900 + k, 5);
    const auto sides = covariance_check(b, m, s);
    REQUIRE(sides.lhs == sides.rhs);
    // Independent route for the left side: Leibniz determinant of S^T (A - L) S.
    const RatMatrix st = s.matrix().transpose();
    RatMatrix diff = b.matrix();
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) diff(r, c) -= m.at(r, c);
    }
    REQUIRE(sides.lhs == oracle::leibniz_det(st * diff * s.matrix()));
  }
}

TEST_CASE("parity law") {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const SymmetricMatrix a = random_symmetric(n, rng, 5, 2);
    const SkewMatrix l = random_skew(n, 300 + k, 5);
    const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
    REQUIRE(eval_skewchar(-a, -l) == sign * eval_skewchar(a, l));
  }
}

TEST_CASE("pfaffian") {
  CHECK(pfaffian(SkewMatrix(0)) == Rational(1));
  CHECK(pfaffian(SkewMatrix(2, {{VarId(1, 2), 7}})) == Rational(7));
  CHECK(pfaffian(random_skew(3, 1, 5)) == Rational(0));
  const SkewMatrix l = random_skew(4, 2, 5);
  auto g = [&](int i, int j) { return l.get(VarId(i, j)); };
  CHECK(pfaffian(l) == g(1, 2) * g(3, 4) - g(1, 3) * g(2, 4) + g(1, 4) * g(2, 3));
  for (int n = 2; n <= 8; n += 2) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const SkewMatrix m = random_skew(n, seed, 5);
      const Rational pf = pfaffian(m);
      REQUIRE(pf * pf == det_by_leibniz(m));
    }
  }
}

TEST_CASE("sub_pfaffian_poly") {
  CHECK(sub_pfaffian_poly(4, {}) == MultiPoly(1));
  CHECK(sub_pfaffian_poly(4, {1, 2}) == lam(1, 2));
  CHECK(sub_pfaffian_poly(4, {1, 2, 3, 4}) ==
        lam(1, 2) * lam(3, 4) - lam(1, 3) * lam(2, 4) + lam(1, 4) * lam(2, 3));
  CHECK(sub_pfaffian_poly(5, {2, 5}) == lam(2, 5));
  CHECK_THROWS_AS(sub_pfaffian_poly(4, {1, 2, 3}), OddSubset);
  CHECK_THROWS_AS(sub_pfaffian_poly(4, {2, 1}), InputError);
  CHECK_THROWS_AS(sub_pfaffian_poly(4, {1, 5}), InputError);
  // Symbolic Pf^2 equals the symbolic determinant of Lambda.
  const MultiPoly pf = sub_pfaffian_poly(4, {1, 2, 3, 4});
  CHECK(pf * pf == expand_skewchar(sym(4, std::vector<Rational>(16, 0))));
}

TEST_CASE("even_subsets") {
  const auto s = even_subsets(4);
  REQUIRE(s.size() == 8);
  CHECK(s.front().empty());
  CHECK(s[1] == std::vector<int>{1, 2});
  CHECK(s[6] == std::vector<int>{3, 4});
  CHECK(s[7] == std::vector<int>{1, 2, 3, 4});
  CHECK(even_subsets(5).size() == 16);
}

TEST_CASE("certify_positive: examples") {
  SUBCASE("identity 2") {
    const Certificate c = certify_positive(SymmetricMatrix::identity(2));
    REQUIRE(c.terms.size() == 2);
    CHECK(c.terms[0].weight == Rational(1));
    CHECK(c.terms[0].square_root == MultiPoly(1));
    CHECK(c.terms[1].weight == Rational(1));
    CHECK(c.terms[1].square_root == lam(1, 2));
    CHECK(c.replay() == expand_skewchar(SymmetricMatrix::identity(2)));
  }
  SUBCASE("identity 4") {
    const Certificate c = certify_positive(SymmetricMatrix::identity(4));
    REQUIRE(c.terms.size() == 8);
    CHECK(c.terms.front().subset.empty());
    CHECK(c.terms.back().subset == std::vector<int>{1, 2, 3, 4});
    CHECK(c.replay() == expand_skewchar(SymmetricMatrix::identity(4)));
  }
  SUBCASE("diag(2,3)") {
    const Certificate c = certify_positive(SymmetricMatrix::diagonal({2, 3}));
    REQUIRE(c.terms.size() == 2);
    CHECK(c.terms[0].weight * c.scale == Rational(6));
    CHECK(c.terms[1].weight * c.scale == Rational(1));
    CHECK(c.replay() == MultiPoly(6) + lam(1, 2) * lam(1, 2));
  }
  CHECK_THROWS_AS(certify_positive(SymmetricMatrix::diagonal({1, -1})), NotPositiveDefinite);
  CHECK_THROWS_AS(certify_positive(SymmetricMatrix::diagonal({1, 0})), NotPositiveDefinite);
}

TEST_CASE("certify_positive: random positive-definite forms") {
  std::mt19937_64 rng(25);
  for (int k = 0; k < 10; ++k) {
    const int n = 2 + k % 3;
    const SymmetricMatrix a = random_positive_definite(n, rng);
    const Certificate c = certify_positive(a);
    REQUIRE(c.scale > Rational(0));
    for (const auto& t : c.terms) REQUIRE(t.weight > Rational(0));
    REQUIRE(c.replay() == oracle::cofactor_det(build_symbolic(a)));
    const SkewMatrix l = random_skew(n, 40 + k, 5);
    REQUIRE(c.evaluate(l) == eval_skewchar(a, l));
  }
}

TEST_CASE("format_certificate") {
  const std::string text = format_certificate(certify_positive(SymmetricMatrix::identity(2)));
  CHECK(text == "n: 2\nscale: 1\nweight: 1 ; sqroot: 1\nweight: 1 ; sqroot: l1_2\n");
}
