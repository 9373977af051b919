#include "skewchar/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "skewchar/errors.hpp"

namespace skewchar {

VarId::VarId(int i_, int j_) : i(i_), j(j_) {
  if (i < 1 || j <= i) {
    throw InputError("invalid variable index (" + std::to_string(i_) + "," +
                     std::to_string(j_) + "): need 1 <= i < j");
  }
}

std::string VarId::str() const { return "l" + std::to_string(i) + "_" + std::to_string(j); }

std::vector<VarId> variables_for(int n) {
  std::vector<VarId> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  }
  return out;
}

// --- Monomial -------------------------------------------------------------

Monomial Monomial::of(VarId v, unsigned exponent) {
  Monomial m;
  if (exponent != 0) m.factors_.emplace_back(v, exponent);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, VarId key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0U;
}

unsigned Monomial::max_exponent() const {
  unsigned e = 0;
  for (const auto& f : factors_) e = std::max(e, f.second);
  return e;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

bool Monomial::divisible_by(const Monomial& divisor) const {
  for (const auto& [v, e] : divisor.factors_) {
    if (exponent(v) < e) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (const auto& [v, e] : factors_) {
    const unsigned remaining = e - divisor.exponent(v);
    if (remaining != 0) r.factors_.emplace_back(v, remaining);
  }
  return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t k = 0;
  for (; k < fa.size() && k < fb.size(); ++k) {
    if (fa[k].first != fb[k].first) return fa[k].first < fb[k].first;
    if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
  }
  // Equal degree and equal common prefix means equal monomials.
  return false;
}

// --- MultiPoly ------------------------------------------------------------

MultiPoly::MultiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

MultiPoly MultiPoly::variable(VarId v) { return term(Monomial::of(v), Rational(1)); }

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
  MultiPoly p;
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

unsigned MultiPoly::max_var_exponent() const {
  unsigned e = 0;
  for (const auto& [m, c] : terms_) e = std::max(e, m.max_exponent());
  return e;
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial{}); }

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Rational MultiPoly::eval(const Assignment& values) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) throw MissingVariable("no value for variable " + v.str());
      t *= pow(it->second, e);
    }
    total += t;
  }
  return total;
}

MultiPoly divexact(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw std::domain_error("polynomial division by zero");
  if (q.is_constant()) return p * q.constant_term().inverse();

  const auto& [lead_m, lead_c] = q.leading_term();
  const Rational lead_inv = lead_c.inverse();
  MultiPoly remainder = p;
  MultiPoly quotient;
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = remainder.leading_term();
    if (!rm.divisible_by(lead_m)) {
      throw NonExactDivision("divexact: remainder term " + to_string(MultiPoly::term(rm, rc)) +
                             " not divisible by " + to_string(MultiPoly::term(lead_m, lead_c)));
    }
    const Monomial qm = rm / lead_m;
    const Rational qc = rc * lead_inv;
    quotient.add_term(qm, qc);
    for (const auto& [m, c] : q.terms()) remainder.add_term(qm * m, -(qc * c));
  }
  return quotient;
}

// --- text -----------------------------------------------------------------

namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += v.str();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  MultiPoly parse() {
    MultiPoly result;
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip_ws();
    }
    for (;;) {
      auto [m, c] = parse_term();
      result.add_term(m, negative ? -c : c);
      skip_ws();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      skip_ws();
    }
    return result;
  }

 private:
  std::pair<Monomial, Rational> parse_term() {
    Monomial m;
    Rational c(1);
    for (;;) {
      skip_ws();
      if (peek() == 'l') {
        ++pos_;
        const int i = parse_int();
        if (get() != '_') fail("expected '_' in variable");
        const int j = parse_int();
        unsigned e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          e = static_cast<unsigned>(parse_int());
          if (e == 0) fail("zero exponent");
        }
        if (i < 1 || j <= i) fail("variable index out of order");
        m = m * Monomial::of(VarId(i, j), e);
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '/') {
          ++pos_;
          if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
          while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        c *= Rational::parse(s_.substr(start, pos_ - start));
      } else {
        fail("expected coefficient or variable");
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return {m, c};
  }

  int parse_int() {
    const std::size_t start = pos_;
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > 1000000) fail("integer too large");
    }
    if (pos_ == start) fail("expected integer");
    return static_cast<int>(v);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return at_end() ? '\0' : s_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = c.abs();
    if (m.is_one()) {
      out += mag.str();
    } else {
      if (mag != Rational(1)) out += mag.str() + "*";
      out += monomial_text(m);
    }
  }
  return out;
}

MultiPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace skewchar
