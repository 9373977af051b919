#include "skewchar/isotropy.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewchar {

namespace {

const mpz_class kTrialLimit = 10'000'000;

int valuation(mpz_class& n, const mpz_class& p) {
  int v = 0;
  while (n != 0 && mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_square_integer(const mpz_class& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

// n is a square in Q_p (p prime) or in R (p = 0). n != 0.
bool is_local_square(mpz_class n, const mpz_class& p) {
  if (p == 0) return n > 0;
  if (valuation(n, p) % 2 != 0) return false;
  if (p == 2) return mpz_fdiv_ui(n.get_mpz_t(), 8) == 1;
  return mpz_jacobi(n.get_mpz_t(), p.get_mpz_t()) == 1;
}

// Square root of a modulo an odd prime p (Tonelli-Shanks); also p = 2.
std::optional<mpz_class> sqrt_mod_prime(const mpz_class& a_in, const mpz_class& p) {
  mpz_class a;
  mpz_fdiv_r(a.get_mpz_t(), a_in.get_mpz_t(), p.get_mpz_t());
  if (p == 2 || a == 0) return a;
  if (mpz_jacobi(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
  mpz_class q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  mpz_class z = 2;
  while (mpz_jacobi(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  mpz_class c, r, t, e;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    mpz_class tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    mpz_class b = c;
    for (unsigned long k = 0; k + i + 1 < m; ++k) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

// Root of t^2 = a modulo a square-free modulus, combined by CRT.
std::optional<mpz_class> sqrt_mod_squarefree(const mpz_class& a, const mpz_class& modulus) {
  const auto f = factorize(modulus);
  if (!f) return std::nullopt;
  mpz_class t = 0;
  mpz_class m = 1;
  for (const auto& [p, e] : *f) {
    if (e != 1) throw std::logic_error("sqrt_mod_squarefree: modulus not square-free");
    const auto r = sqrt_mod_prime(a, p);
    if (!r) return std::nullopt;
    // t += m * ((r - t) * m^{-1} mod p)
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    mpz_class k = (*r - t) * inv;
    mpz_fdiv_r(k.get_mpz_t(), k.get_mpz_t(), p.get_mpz_t());
    t += m * k;
    m *= p;
  }
  return t;
}

std::optional<std::vector<mpz_class>> legendre_rec(const mpz_class& a, const mpz_class& b, int depth) {
  if (depth > 4000) return std::nullopt;
  if (a < 0 && b < 0) return std::nullopt;
  if (a == 1) return std::vector<mpz_class>{1, 1, 0};
  if (b == 1) return std::vector<mpz_class>{1, 0, 1};
  if (a == -b) return std::vector<mpz_class>{0, 1, 1};
  if (abs(a) > abs(b)) {
    auto r = legendre_rec(b, a, depth + 1);
    if (!r) return std::nullopt;
    return std::vector<mpz_class>{(*r)[0], (*r)[2], (*r)[1]};
  }
  const mpz_class mod = abs(b);
  auto root = sqrt_mod_squarefree(a, mod);
  if (!root) return std::nullopt;
  mpz_class t = *root;
  if (2 * t > mod) t -= mod;
  const mpz_class num = t * t - a;
  if (!mpz_divisible_p(num.get_mpz_t(), b.get_mpz_t())) {
    throw std::logic_error("solve_legendre: modular root is wrong");
  }
  const mpz_class kk = num / b;
  if (kk == 0) return std::nullopt;  // a would be a square other than 1
  const auto split = squarefree_split(kk);
  if (!split) return std::nullopt;
  const auto& [k, m] = *split;
  auto r = legendre_rec(a, k, depth + 1);
  if (!r) return std::nullopt;
  const mpz_class& x1 = (*r)[0];
  const mpz_class& y1 = (*r)[1];
  const mpz_class& z1 = (*r)[2];
  // (x1^2 - a y1^2)(t^2 - a) = (t x1 + a y1)^2 - a (x1 + t y1)^2.
  std::vector<mpz_class> out{t * x1 + a * y1, x1 + t * y1, k * m * z1};
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), out[0].get_mpz_t(), out[1].get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[2].get_mpz_t());
  if (g > 1) {
    for (auto& v : out) v /= g;
  }
  return out;
}

// Primes at which a form with these coefficients can fail local isotropy.
std::optional<std::vector<mpz_class>> bad_primes(const std::vector<mpz_class>& e) {
  std::vector<mpz_class> primes{2};
  for (const auto& c : e) {
    const auto f = factorize(c);
    if (!f) return std::nullopt;
    for (const auto& [p, k] : *f) {
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    }
  }
  return primes;
}

bool locally_isotropic(const std::vector<mpz_class>& e, const mpz_class& p) {
  const std::size_t k = e.size();
  mpz_class d = 1;
  for (const auto& c : e) d *= c;
  int eps = 1;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) eps *= hilbert_symbol(e[i], e[j], p);
  }
  if (k == 2) return is_local_square(-d, p);
  if (k == 3) return hilbert_symbol(-1, -d, p) == eps;
  if (k == 4) return !(is_local_square(d, p) && eps == -hilbert_symbol(-1, -1, p));
  return true;
}

std::vector<mpq_class> unit(std::size_t n, std::size_t k) {
  std::vector<mpq_class> v(n, 0);
  v[k] = 1;
  return v;
}

std::vector<mpq_class> embed(std::size_t n, const std::vector<std::size_t>& at,
                             const std::vector<mpq_class>& sub) {
  std::vector<mpq_class> v(n, 0);
  for (std::size_t k = 0; k < at.size(); ++k) v[at[k]] = sub[k];
  return v;
}

// Solution for square-free coefficients c, already known (or hoped) to be
// isotropic. nullopt when construction fails.
std::optional<std::vector<mpq_class>> construct(const std::vector<mpz_class>& c, long candidates);

std::optional<std::vector<mpq_class>> construct_ternary(const std::vector<mpz_class>& c) {
  // (c2 w2)^2 = -c0 c2 w0^2 - c1 c2 w1^2.
  const auto sa = squarefree_split(-c[0] * c[2]);
  const auto sb = squarefree_split(-c[1] * c[2]);
  if (!sa || !sb) return std::nullopt;
  const auto r = solve_legendre(sa->first, sb->first);
  if (!r) return std::nullopt;
  std::vector<mpq_class> w{mpq_class((*r)[1], sa->second), mpq_class((*r)[2], sb->second),
                           mpq_class((*r)[0], c[2])};
  for (auto& x : w) x.canonicalize();
  return w;
}

std::optional<std::vector<mpq_class>> construct(const std::vector<mpz_class>& c, long candidates) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (c[i] == -c[j]) {
        auto v = unit(n, i);
        v[j] = 1;
        return v;
      }
    }
  }
  if (n < 3) return std::nullopt;
  if (n == 3) return construct_ternary(c);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::vector<mpz_class> sub{c[i], c[j], c[k]};
        if (diagonal_isotropy(sub) != Isotropy::Isotropic) continue;
        if (auto w = construct_ternary(sub)) return embed(n, {i, j, k}, *w);
      }
    }
  }

  // Split c = g + h with g = <c0, c1>: find square-free s represented by g
  // and -s represented by h.
  const std::vector<mpz_class> tail(c.begin() + 2, c.end());
  for (long step = 1; step <= candidates; ++step) {
    const mpz_class s = (step % 2 == 1) ? mpz_class((step + 1) / 2) : mpz_class(-(step / 2));
    const auto split = squarefree_split(s);
    if (!split || split->second != 1) continue;
    std::vector<mpz_class> g{c[0], c[1], -s};
    std::vector<mpz_class> h = tail;
    h.push_back(s);
    if (diagonal_isotropy(g) != Isotropy::Isotropic) continue;
    if (diagonal_isotropy(h) != Isotropy::Isotropic) continue;
    const auto x = construct_ternary(g);
    const auto y = construct(h, candidates);
    if (!x || !y) continue;
    if ((*x)[2] == 0) return embed(n, {0, 1}, {(*x)[0], (*x)[1]});
    if (y->back() == 0) {
      std::vector<std::size_t> at;
      for (std::size_t k = 2; k < n; ++k) at.push_back(k);
      return embed(n, at, std::vector<mpq_class>(y->begin(), y->end() - 1));
    }
    std::vector<mpq_class> v(n);
    v[0] = (*x)[0] / (*x)[2];
    v[1] = (*x)[1] / (*x)[2];
    for (std::size_t k = 2; k < n; ++k) v[k] = (*y)[k - 2] / y->back();
    return v;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Factorization> factorize(const mpz_class& n_in) {
  if (n_in == 0) return std::nullopt;
  mpz_class n = abs(n_in);
  Factorization out;
  auto take = [&](const mpz_class& p) {
    const int v = valuation(n, p);
    if (v > 0) out.emplace_back(p, v);
  };
  take(2);
  take(3);
  for (mpz_class d = 5; d * d <= n && d <= kTrialLimit; d += 6) {
    take(d);
    take(d + 2);
  }
  if (n > 1) {
    if (n > kTrialLimit * kTrialLimit && mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) {
      return std::nullopt;
    }
    out.emplace_back(n, 1);
  }
  return out;
}

std::optional<std::pair<mpz_class, mpz_class>> squarefree_split(const mpz_class& n) {
  const auto f = factorize(n);
  if (!f) return std::nullopt;
  mpz_class core = n < 0 ? -1 : 1;
  mpz_class root = 1;
  for (const auto& [p, e] : *f) {
    if (e % 2 == 1) core *= p;
    for (int k = 0; k < e / 2; ++k) root *= p;
  }
  return std::make_pair(core, root);
}

int hilbert_symbol(const mpz_class& a_in, const mpz_class& b_in, const mpz_class& p) {
  if (a_in == 0 || b_in == 0) throw std::invalid_argument("hilbert_symbol of zero");
  if (p == 0) return (a_in < 0 && b_in < 0) ? -1 : 1;
  mpz_class u = a_in;
  mpz_class v = b_in;
  const int alpha = valuation(u, p);
  const int beta = valuation(v, p);
  if (p == 2) {
    auto eps = [](const mpz_class& x) { return mpz_fdiv_ui(x.get_mpz_t(), 4) == 3 ? 1 : 0; };
    auto omega = [](const mpz_class& x) {
      const unsigned long r = mpz_fdiv_ui(x.get_mpz_t(), 8);
      return (r == 3 || r == 5) ? 1 : 0;
    };
    const int exponent = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
    return exponent % 2 == 0 ? 1 : -1;
  }
  int result = 1;
  const mpz_class half = (p - 1) / 2;
  if ((alpha * beta) % 2 == 1 && mpz_odd_p(half.get_mpz_t())) result = -result;
  if (beta % 2 == 1) result *= mpz_jacobi(u.get_mpz_t(), p.get_mpz_t());
  if (alpha % 2 == 1) result *= mpz_jacobi(v.get_mpz_t(), p.get_mpz_t());
  return result;
}

std::optional<std::vector<mpz_class>> solve_legendre(const mpz_class& a, const mpz_class& b) {
  if (a == 0 || b == 0) throw std::invalid_argument("solve_legendre: zero coefficient");
  return legendre_rec(a, b, 0);
}

Isotropy diagonal_isotropy(const std::vector<mpz_class>& e) {
  const std::size_t n = e.size();
  for (const auto& c : e) {
    if (c == 0) return Isotropy::Isotropic;
  }
  bool has_pos = false;
  bool has_neg = false;
  for (const auto& c : e) {
    (c > 0 ? has_pos : has_neg) = true;
  }
  if (!has_pos || !has_neg) return Isotropy::Anisotropic;
  if (n == 2) return is_square_integer(-e[0] * e[1]) ? Isotropy::Isotropic : Isotropy::Anisotropic;
  if (n >= 5) return Isotropy::Isotropic;
  const auto primes = bad_primes(e);
  if (!primes) return Isotropy::Unknown;
  for (const auto& p : *primes) {
    if (!locally_isotropic(e, p)) return Isotropy::Anisotropic;
  }
  return Isotropy::Isotropic;
}

IsotropyResult solve_diagonal(const std::vector<mpz_class>& e, long split_candidates) {
  const std::size_t n = e.size();
  IsotropyResult result;
  for (std::size_t k = 0; k < n; ++k) {
    if (e[k] == 0) {
      result.status = Isotropy::Isotropic;
      result.vector = unit(n, k);
      return result;
    }
  }
  const Isotropy decision = diagonal_isotropy(e);
  if (decision == Isotropy::Anisotropic) {
    result.status = Isotropy::Anisotropic;
    return result;
  }
  // e_k = core_k * root_k^2; solve in the cores and rescale.
  std::vector<mpz_class> core(n);
  std::vector<mpz_class> root(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto split = squarefree_split(e[k]);
    if (!split) return result;
    core[k] = split->first;
    root[k] = split->second;
  }
  const auto w = construct(core, split_candidates);
  if (!w) return result;
  mpq_class check = 0;
  result.vector.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    result.vector[k] = (*w)[k] / root[k];
    result.vector[k].canonicalize();
    check += e[k] * result.vector[k] * result.vector[k];
  }
  if (check != 0) throw std::logic_error("solve_diagonal: constructed vector is not isotropic");
  result.status = Isotropy::Isotropic;
  return result;
}

}  // namespace skewchar
