#include "skewchar/forms.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "skewchar/bareiss.hpp"
#include "skewchar/errors.hpp"

namespace skewchar {

// --- RatMatrix ------------------------------------------------------------

RatMatrix::RatMatrix(int n, std::vector<Rational> row_major) : n_(n), a_(std::move(row_major)) {
  if (a_.size() != static_cast<std::size_t>(n) * n) {
    throw DimensionMismatch("matrix needs " + std::to_string(n * n) + " entries, got " +
                            std::to_string(a_.size()));
  }
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n);
  for (int k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& d) {
  RatMatrix m(static_cast<int>(d.size()));
  for (int k = 0; k < m.size(); ++k) m(k, k) = d[k];
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(n_);
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (o.n_ != n_) throw DimensionMismatch("matrix product of different sizes");
  RatMatrix p(n_);
  for (int r = 0; r < n_; ++r) {
    for (int k = 0; k < n_; ++k) {
      const Rational& x = (*this)(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < n_; ++c) p(r, c) += x * o(k, c);
    }
  }
  return p;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

Rational determinant(const RatMatrix& m) {
  std::vector<Rational> entries;
  entries.reserve(static_cast<std::size_t>(m.size()) * m.size());
  for (int r = 0; r < m.size(); ++r) {
    for (int c = 0; c < m.size(); ++c) entries.push_back(m(r, c));
  }
  return bareiss_determinant(
      std::move(entries), m.size(), [](const Rational& x) { return x.is_zero(); },
      [](const Rational& a, const Rational& b) { return a / b; });
}

RatMatrix inverse(const RatMatrix& m) {
  const int n = m.size();
  RatMatrix work = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    while (pivot < n && work(pivot, k).is_zero()) ++pivot;
    if (pivot == n) throw SingularTransition("matrix is singular");
    if (pivot != k) {
      for (int c = 0; c < n; ++c) {
        std::swap(work(k, c), work(pivot, c));
        std::swap(inv(k, c), inv(pivot, c));
      }
    }
    const Rational scale = work(k, k).inverse();
    for (int c = 0; c < n; ++c) {
      work(k, c) *= scale;
      inv(k, c) *= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == k || work(r, k).is_zero()) continue;
      const Rational f = work(r, k);
      for (int c = 0; c < n; ++c) {
        work(r, c) -= f * work(k, c);
        inv(r, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

// --- SymmetricMatrix / SkewMatrix / TransitionMatrix ------------------------

SymmetricMatrix::SymmetricMatrix(RatMatrix m) : m_(std::move(m)) {
  for (int r = 0; r < m_.size(); ++r) {
    for (int c = r + 1; c < m_.size(); ++c) {
      if (m_(r, c) != m_(c, r)) {
        throw NotSymmetric("matrix is not symmetric at (" + std::to_string(r + 1) + "," +
                           std::to_string(c + 1) + ")");
      }
    }
  }
}

bool SymmetricMatrix::is_diagonal() const {
  for (int r = 0; r < size(); ++r) {
    for (int c = r + 1; c < size(); ++c) {
      if (!m_(r, c).is_zero()) return false;
    }
  }
  return true;
}

SkewMatrix::SkewMatrix(int n, const std::map<VarId, Rational>& upper) : n_(n) {
  for (const auto& [v, x] : upper) set(v, x);
}

SkewMatrix SkewMatrix::from_full(const RatMatrix& m) {
  SkewMatrix l(m.size());
  for (int r = 0; r < m.size(); ++r) {
    if (!m(r, r).is_zero()) throw InputError("skew matrix has nonzero diagonal");
    for (int c = r + 1; c < m.size(); ++c) {
      if (m(r, c) != -m(c, r)) throw InputError("matrix is not skew-symmetric");
      l.set(VarId(r + 1, c + 1), m(r, c));
    }
  }
  return l;
}

Rational SkewMatrix::get(VarId v) const {
  auto it = upper_.find(v);
  return it == upper_.end() ? Rational(0) : it->second;
}

void SkewMatrix::set(VarId v, const Rational& value) {
  if (v.j > n_) {
    throw InputError("variable " + v.str() + " outside dimension " + std::to_string(n_));
  }
  if (value.is_zero()) {
    upper_.erase(v);
  } else {
    upper_[v] = value;
  }
}

Rational SkewMatrix::at(int r, int c) const {
  if (r == c) return Rational(0);
  if (r < c) return get(VarId(r + 1, c + 1));
  return -get(VarId(c + 1, r + 1));
}

RatMatrix SkewMatrix::full() const {
  RatMatrix m(n_);
  for (const auto& [v, x] : upper_) {
    m(v.i - 1, v.j - 1) = x;
    m(v.j - 1, v.i - 1) = -x;
  }
  return m;
}

Assignment SkewMatrix::assignment() const {
  Assignment a;
  for (const VarId v : variables_for(n_)) a.emplace(v, get(v));
  return a;
}

SkewMatrix SkewMatrix::operator-() const {
  SkewMatrix l(n_);
  for (const auto& [v, x] : upper_) l.upper_.emplace(v, -x);
  return l;
}

TransitionMatrix::TransitionMatrix(RatMatrix s) : s_(std::move(s)), det_(determinant(s_)) {
  if (det_.is_zero()) throw SingularTransition("transition matrix is singular");
}

// --- congruences ----------------------------------------------------------

SymmetricMatrix congruence_sym(const SymmetricMatrix& a, const TransitionMatrix& s) {
  if (a.size() != s.size()) throw DimensionMismatch("congruence_sym: dimension mismatch");
  return SymmetricMatrix(s.matrix().transpose() * a.matrix() * s.matrix());
}

SkewMatrix congruence_skew(const SkewMatrix& l, const TransitionMatrix& s) {
  if (l.size() != s.size()) throw DimensionMismatch("congruence_skew: dimension mismatch");
  return SkewMatrix::from_full(s.matrix().transpose() * l.full() * s.matrix());
}

namespace {

// Congruence by the elementary column operation col_j += f * col_k, applied
// to both the running form m and the accumulated transition s.
void add_multiple(RatMatrix& m, RatMatrix& s, int j, int k, const Rational& f) {
  const int n = m.size();
  for (int r = 0; r < n; ++r) s(r, j) += f * s(r, k);
  for (int c = 0; c < n; ++c) m(j, c) += f * m(k, c);
  for (int r = 0; r < n; ++r) m(r, j) += f * m(r, k);
}

void swap_indices(RatMatrix& m, RatMatrix& s, int a, int b) {
  const int n = m.size();
  for (int r = 0; r < n; ++r) std::swap(s(r, a), s(r, b));
  for (int c = 0; c < n; ++c) std::swap(m(a, c), m(b, c));
  for (int r = 0; r < n; ++r) std::swap(m(r, a), m(r, b));
}

}  // namespace

Diagonalization lagrange_diagonalize(const SymmetricMatrix& a) {
  const int n = a.size();
  RatMatrix m = a.matrix();
  RatMatrix s = RatMatrix::identity(n);

  for (int k = 0; k < n; ++k) {
    if (m(k, k).is_zero()) {
      int diag = -1;
      for (int j = k + 1; j < n && diag < 0; ++j) {
        if (!m(j, j).is_zero()) diag = j;
      }
      if (diag >= 0) {
        swap_indices(m, s, k, diag);
      } else {
        int off = -1;
        for (int j = k + 1; j < n && off < 0; ++j) {
          if (!m(k, j).is_zero()) off = j;
        }
        if (off < 0) continue;  // row k already zero
        // With m(j,j) = m(k,k) = 0 this makes m(k,k) = 2 m(k,j) != 0.
        add_multiple(m, s, k, off, Rational(1));
      }
    }
    for (int j = k + 1; j < n; ++j) {
      if (m(k, j).is_zero()) continue;
      add_multiple(m, s, j, k, -(m(k, j) / m(k, k)));
    }
  }

  SymmetricMatrix d(m);
  if (!d.is_diagonal() || s.transpose() * a.matrix() * s != m) {
    throw std::logic_error("lagrange_diagonalize: postcondition violated");
  }
  return {TransitionMatrix(std::move(s)), std::move(d)};
}

Signature signature(const SymmetricMatrix& a) {
  const auto diag = lagrange_diagonalize(a);
  Signature sig;
  for (int k = 0; k < a.size(); ++k) {
    const int sg = diag.diagonal(k, k).sign();
    if (sg > 0) {
      ++sig.positive;
    } else if (sg < 0) {
      ++sig.negative;
    } else {
      ++sig.zero;
    }
  }
  return sig;
}

SkewMatrix random_skew(int n, std::uint64_t seed, int bound) {
  if (bound < 1) throw InputError("random_skew: bound must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> numer(-bound, bound);
  std::uniform_int_distribution<long> denom(1, bound);
  SkewMatrix l(n);
  for (const VarId v : variables_for(n)) {
    const long p = numer(rng);
    const long q = denom(rng);
    l.set(v, Rational(mpz_class(p), mpz_class(q)));
  }
  return l;
}

// --- text formats ---------------------------------------------------------

namespace {

// Next line that is neither blank nor a '#' comment; false at EOF.
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

int parse_dimension(std::istream& in, int& line_no) {
  std::string line;
  if (!next_content_line(in, line, line_no)) parse_fail(line_no, "missing dimension line");
  const auto toks = split_ws(line);
  if (toks.size() != 1) parse_fail(line_no, "dimension line must hold a single integer");
  const Rational n = Rational::parse(toks[0]);
  if (!n.is_integer() || n.sign() < 0 || n > Rational(64)) {
    parse_fail(line_no, "dimension must be an integer in [0, 64]");
  }
  return static_cast<int>(n.numerator().get_si());
}

int parse_index(const std::string& tok, int line_no) {
  Rational v;
  try {
    v = Rational::parse(tok);
  } catch (const ParseError&) {
    parse_fail(line_no, "bad index '" + tok + "'");
  }
  if (!v.is_integer() || v < Rational(1) || v > Rational(64)) {
    parse_fail(line_no, "bad index '" + tok + "'");
  }
  return static_cast<int>(v.numerator().get_si());
}

Rational parse_value(const std::string& tok, int line_no) {
  try {
    return Rational::parse(tok);
  } catch (const ParseError& e) {
    parse_fail(line_no, e.what());
  }
}

}  // namespace

SymmetricMatrix parse_symmetric(std::istream& in) {
  int line_no = 0;
  const int n = parse_dimension(in, line_no);
  RatMatrix m(n);
  std::string line;
  for (int r = 0; r < n; ++r) {
    if (!next_content_line(in, line, line_no)) parse_fail(line_no, "missing matrix row");
    const auto toks = split_ws(line);
    if (static_cast<int>(toks.size()) != n) {
      parse_fail(line_no, "expected " + std::to_string(n) + " entries, got " +
                              std::to_string(toks.size()));
    }
    for (int c = 0; c < n; ++c) m(r, c) = parse_value(toks[c], line_no);
  }
  if (next_content_line(in, line, line_no)) parse_fail(line_no, "trailing content");
  try {
    return SymmetricMatrix(std::move(m));
  } catch (const NotSymmetric& e) {
    throw ParseError(e.what());
  }
}

SymmetricMatrix parse_symmetric(const std::string& text) {
  std::istringstream in(text);
  return parse_symmetric(in);
}

SkewMatrix parse_skew(std::istream& in) {
  int line_no = 0;
  const int n = parse_dimension(in, line_no);
  SkewMatrix l(n);
  std::map<VarId, bool> seen;
  std::string line;
  while (next_content_line(in, line, line_no)) {
    const auto toks = split_ws(line);
    if (toks.size() != 3) parse_fail(line_no, "expected 'i j value'");
    const int i = parse_index(toks[0], line_no);
    const int j = parse_index(toks[1], line_no);
    if (i >= j || j > n) parse_fail(line_no, "entry must satisfy 1 <= i < j <= n");
    const VarId v(i, j);
    if (seen[v]) parse_fail(line_no, "duplicate entry " + v.str());
    seen[v] = true;
    l.set(v, parse_value(toks[2], line_no));
  }
  return l;
}

SkewMatrix parse_skew(const std::string& text) {
  std::istringstream in(text);
  return parse_skew(in);
}

std::string format_symmetric(const SymmetricMatrix& a) {
  std::string out = std::to_string(a.size()) + "\n";
  for (int r = 0; r < a.size(); ++r) {
    for (int c = 0; c < a.size(); ++c) {
      if (c != 0) out += ' ';
      out += a(r, c).str();
    }
    out += '\n';
  }
  return out;
}

std::string format_skew(const SkewMatrix& l) {
  std::string out = std::to_string(l.size()) + "\n";
  for (const auto& [v, x] : l.upper()) {
    out += std::to_string(v.i) + " " + std::to_string(v.j) + " " + x.str() + "\n";
  }
  return out;
}

}  // namespace skewchar
