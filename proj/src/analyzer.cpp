#include "skewchar/analyzer.hpp"

#include <sstream>
#include <stdexcept>

#include "skewchar/engine.hpp"
#include "skewchar/errors.hpp"
#include "skewchar/isotropy.hpp"

namespace skewchar {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PositiveDefinite: return "PositiveDefinite";
    case Verdict::NegativeDefinite: return "NegativeDefinite";
    case Verdict::Degenerate: return "Degenerate";
    case Verdict::Indefinite: return "Indefinite";
  }
  return "?";
}

std::string to_string(SignPrediction s) {
  switch (s) {
    case SignPrediction::AlwaysPositive: return "AlwaysPositive";
    case SignPrediction::AlwaysNegative: return "AlwaysNegative";
    case SignPrediction::NotSignDefinite: return "NotSignDefinite";
  }
  return "?";
}

std::string to_string(ZeroStatus z) {
  switch (z) {
    case ZeroStatus::Found: return "Found";
    case ZeroStatus::Absent: return "Absent";
    case ZeroStatus::NotFound: return "NotFound";
  }
  return "?";
}

namespace {

std::vector<Rational> mat_vec(const RatMatrix& m, const std::vector<Rational>& x) {
  std::vector<Rational> y(x.size());
  for (int r = 0; r < m.size(); ++r) {
    for (int c = 0; c < m.size(); ++c) y[r] += m(r, c) * x[c];
  }
  return y;
}

SkewMatrix single_entry(int n, VarId v, const Rational& t) {
  SkewMatrix l(n);
  l.set(v, t);
  return l;
}

}  // namespace

IsotropicVector find_isotropic_vector(const SymmetricMatrix& a, const WitnessOptions& options) {
  const int n = a.size();
  if (n == 0) return {Isotropy::Anisotropic, {}};
  const auto diag = lagrange_diagonalize(a);
  const RatMatrix& s = diag.transition.matrix();
  std::vector<Rational> y(static_cast<std::size_t>(n));

  for (int k = 0; k < n; ++k) {
    if (diag.diagonal(k, k).is_zero()) {
      y[k] = 1;
      return {Isotropy::Isotropic, mat_vec(s, y)};
    }
  }
  // d_k y_k^2 = (num_k den_k) (y_k / den_k)^2 puts the form over the integers.
  std::vector<mpz_class> e;
  for (int k = 0; k < n; ++k) {
    const Rational& dk = diag.diagonal(k, k);
    e.push_back(dk.numerator() * dk.denominator());
  }
  const auto solved = solve_diagonal(e, options.split_candidates);
  if (solved.status != Isotropy::Isotropic) return {solved.status, {}};
  for (int k = 0; k < n; ++k) {
    const mpq_class& w = solved.vector[k];
    y[k] = Rational(w.get_num() * diag.diagonal(k, k).denominator(), w.get_den());
  }
  return {Isotropy::Isotropic, mat_vec(s, y)};
}

SkewMatrix zero_from_isotropic(const SymmetricMatrix& a, const std::vector<Rational>& x) {
  const int n = a.size();
  if (static_cast<int>(x.size()) != n) throw DimensionMismatch("isotropic vector size");
  const std::vector<Rational> v = mat_vec(a.matrix(), x);
  Rational xx(0);
  Rational xax(0);
  for (int k = 0; k < n; ++k) {
    xx += x[k] * x[k];
    xax += x[k] * v[k];
  }
  if (xx.is_zero()) throw InputError("zero_from_isotropic: zero vector");
  if (!xax.is_zero()) throw InputError("zero_from_isotropic: vector is not isotropic");
  // Lambda = (v x^T - x v^T) / (x^T x) maps x to v = A x.
  SkewMatrix l(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) l.set(VarId(i + 1, j + 1), (v[i] * x[j] - x[i] * v[j]) / xx);
  }
  return l;
}

Witness witness_indefinite(const SymmetricMatrix& a, const WitnessOptions& options) {
  const int n = a.size();
  const auto diag = lagrange_diagonalize(a);
  std::vector<int> order;
  for (int k = 0; k < n; ++k) {
    if (diag.diagonal(k, k).sign() > 0) order.push_back(k);
  }
  const int m = static_cast<int>(order.size());
  for (int k = 0; k < n; ++k) {
    if (diag.diagonal(k, k).sign() < 0) order.push_back(k);
  }
  if (static_cast<int>(order.size()) != n || m == 0 || m == n) {
    throw NotIndefinite("witness_indefinite: form is not nondegenerate indefinite");
  }

  // Permute so positive entries come first: S' = S P.
  RatMatrix perm(n);
  for (int k = 0; k < n; ++k) perm(order[k], k) = 1;
  const RatMatrix s = diag.transition.matrix() * perm;
  std::vector<Rational> d(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) d[k] = diag.diagonal(order[k], order[k]);

  const Rational& d_pos = d[m - 1];
  const Rational& d_neg = d[m];
  Rational others(1);
  for (int k = 0; k < n; ++k) {
    if (k != m - 1 && k != m) others *= d[k];
  }
  const Rational target = -(d_pos * d_neg);  // t^2 = target zeroes the 2x2 block
  const RatMatrix s_inv = inverse(s);
  const RatMatrix s_inv_t = s_inv.transpose();
  const Rational det_s2 = [&] {
    const Rational ds = determinant(s);
    return ds * ds;
  }();
  const VarId coupling(m, m + 1);

  auto pulled_back = [&](const Rational& t) {
    const SkewMatrix tilde = single_entry(n, coupling, t);
    const SkewMatrix lam = SkewMatrix::from_full(s_inv_t * tilde.full() * s_inv);
    const Rational value = eval_skewchar(a, lam);
    // P_D(tilde) = others * (d_pos d_neg + t^2), and P_A = P_D / (det S')^2.
    if (value != others * (d_pos * d_neg + t * t) / det_s2) {
      throw std::logic_error("witness_indefinite: pulled-back value disagrees with diagonal form");
    }
    return WitnessPoint{lam, value};
  };

  Witness w;
  WitnessPoint small = pulled_back(Rational(0));
  WitnessPoint large = pulled_back(Rational(mpz_class(target.floor() + 1)));
  if (small.value.sign() > 0) {
    w.plus = std::move(small);
    w.minus = std::move(large);
  } else {
    w.minus = std::move(small);
    w.plus = std::move(large);
  }

  if (auto t = target.exact_sqrt()) {
    w.zero = pulled_back(*t);
    w.zero_status = ZeroStatus::Found;
  } else {
    // A rational zero exists iff the form is isotropic over Q: a kernel
    // vector x of A - Lambda has x^T A x = x^T Lambda x = 0, and conversely
    // zero_from_isotropic builds Lambda from any isotropic x.
    const auto iso = find_isotropic_vector(a, options);
    if (iso.vector) {
      const SkewMatrix lam = zero_from_isotropic(a, *iso.vector);
      w.zero = WitnessPoint{lam, eval_skewchar(a, lam)};
      w.zero_status = ZeroStatus::Found;
    } else {
      w.zero_status =
          iso.status == Isotropy::Anisotropic ? ZeroStatus::Absent : ZeroStatus::NotFound;
    }
  }
  return w;
}

ClassificationReport classify(const SymmetricMatrix& a, const WitnessOptions& options) {
  const int n = a.size();
  ClassificationReport r;
  r.signature = signature(a);
  if (r.signature.positive == n) {
    r.verdict = Verdict::PositiveDefinite;
    r.predicted_sign = SignPrediction::AlwaysPositive;
  } else if (r.signature.negative == n) {
    r.verdict = Verdict::NegativeDefinite;
    r.predicted_sign = n % 2 == 0 ? SignPrediction::AlwaysPositive : SignPrediction::AlwaysNegative;
  } else if (r.signature.zero > 0) {
    r.verdict = Verdict::Degenerate;
    r.predicted_sign = SignPrediction::NotSignDefinite;
    Witness w;
    w.zero = WitnessPoint{SkewMatrix(n), eval_skewchar(a, SkewMatrix(n))};
    w.zero_status = ZeroStatus::Found;
    r.witness = std::move(w);
  } else {
    r.verdict = Verdict::Indefinite;
    r.predicted_sign = SignPrediction::NotSignDefinite;
    r.witness = witness_indefinite(a, options);
  }
  return r;
}

ProbeReport sign_probe(const SymmetricMatrix& a, int trials, std::uint64_t seed, int bound) {
  if (trials < 1) throw InputError("sign_probe: trials must be >= 1");
  ProbeReport p;
  p.trials = trials;
  p.seed = seed;
  p.bound = bound;
  for (int k = 1; k <= trials; ++k) {
    const int sg = eval_skewchar(a, random_skew(a.size(), seed + static_cast<std::uint64_t>(k), bound)).sign();
    if (sg > 0) {
      ++p.positives;
    } else if (sg < 0) {
      ++p.negatives;
    } else {
      ++p.zeros;
    }
  }
  return p;
}

bool witness_valid(const SymmetricMatrix& a, const Witness& w) {
  auto check = [&](const std::optional<WitnessPoint>& pt, int want) {
    if (!pt) return true;
    const Rational v = eval_skewchar(a, pt->lambda);
    return v == pt->value && v.sign() == want;
  };
  if (w.zero_status == ZeroStatus::Found && !w.zero) return false;
  return check(w.zero, 0) && check(w.plus, 1) && check(w.minus, -1);
}

CrossCheck crosscheck_theorem31(const SymmetricMatrix& a, int trials, std::uint64_t seed,
                                int bound) {
  const auto report = classify(a);
  CrossCheck cc;
  std::ostringstream detail;
  detail << "verdict " << to_string(report.verdict) << "; ";
  if (report.verdict == Verdict::PositiveDefinite || report.verdict == Verdict::NegativeDefinite) {
    const auto probe = sign_probe(a, trials, seed, bound);
    const bool want_positive = report.predicted_sign == SignPrediction::AlwaysPositive;
    const int matching = want_positive ? probe.positives : probe.negatives;
    cc.pass = probe.zeros == 0 && matching == probe.trials;
    detail << "probe +" << probe.positives << " -" << probe.negatives << " 0:" << probe.zeros;
  } else {
    const Witness& w = *report.witness;
    if (report.verdict == Verdict::Degenerate) {
      cc.pass = w.zero && w.zero->lambda.upper().empty() && witness_valid(a, w);
    } else {
      // Opposite strict signs already refute sign-definiteness; a zero,
      // when present, must also check out.
      cc.pass = w.plus && w.minus && witness_valid(a, w);
    }
    detail << "witness zero " << to_string(w.zero_status);
  }
  cc.detail = detail.str();
  return cc;
}

namespace {

void write_point(std::ostringstream& out, const std::string& name,
                 const std::optional<WitnessPoint>& pt) {
  if (!pt) return;
  out << name << ": P = " << pt->value << "\n" << format_skew(pt->lambda);
}

}  // namespace

std::string format_witness(const Witness& w) {
  std::ostringstream out;
  out << "witness:\n";
  out << "zero_status: " << to_string(w.zero_status) << "\n";
  write_point(out, "lambda_zero", w.zero);
  write_point(out, "lambda_plus", w.plus);
  write_point(out, "lambda_minus", w.minus);
  return out.str();
}

std::string format_report(const ClassificationReport& r) {
  std::ostringstream out;
  out << "verdict: " << to_string(r.verdict) << "\n";
  out << "signature: " << r.signature.positive << " " << r.signature.negative << " "
      << r.signature.zero << "\n";
  out << "predicted_sign: " << to_string(r.predicted_sign) << "\n";
  if (r.witness) out << format_witness(*r.witness);
  return out.str();
}

std::string format_probe(const ProbeReport& p) {
  std::ostringstream out;
  out << "seed: " << p.seed << "\n";
  out << "trials: " << p.trials << "\n";
  out << "bound: " << p.bound << "\n";
  out << "positives: " << p.positives << "\n";
  out << "negatives: " << p.negatives << "\n";
  out << "zeros: " << p.zeros << "\n";
  return out.str();
}

}  // namespace skewchar
