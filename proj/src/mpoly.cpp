#include "matpow/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace matpow {

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MPoly MPoly::constant(int varcount, const Rational& c) {
  MPoly p(varcount);
  p.add_term(Monomial(varcount, 0), c);
  return p;
}

MPoly MPoly::variable(int varcount, int index) {
  if (index < 0 || index >= varcount)
    throw std::out_of_range("variable index");
  MPoly p(varcount);
  Monomial m(varcount, 0);
  m[index] = 1;
  p.add_term(m, Rational(1));
  return p;
}

void MPoly::add_term(const Monomial& mono, const Rational& coeff) {
  if (static_cast<int>(mono.size()) != vars_) throw VarCountMismatch{};
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  if (terms_.size() > term_budget) throw TermBudgetExceeded{};
}

MPoly MPoly::operator+(const MPoly& rhs) const {
  if (vars_ != rhs.vars_) throw VarCountMismatch{};
  MPoly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

MPoly MPoly::operator-(const MPoly& rhs) const { return *this + (-rhs); }

MPoly MPoly::operator-() const {
  MPoly out(vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

MPoly MPoly::scaled(const Rational& c) const {
  MPoly out(vars_);
  if (c == 0) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

MPoly MPoly::operator*(const MPoly& rhs) const {
  if (vars_ != rhs.vars_) throw VarCountMismatch{};
  MPoly out(vars_);
  Monomial prod(vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      for (int i = 0; i < vars_; ++i) prod[i] = ma[i] + mb[i];
      out.add_term(prod, ca * cb);
    }
  }
  return out;
}

MPoly MPoly::pow(long e) const {
  if (e < 0) throw std::domain_error("negative polynomial exponent");
  MPoly acc = constant(vars_, Rational(1));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

Rational MPoly::eval(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != vars_) throw VarCountMismatch{};
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < vars_; ++i)
      if (m[i]) term *= rat_pow(point[i], m[i]);
    sum += term;
  }
  return sum;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // map is ascending graded-lex; print highest first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (a == 1);
    bool any_var = std::any_of(m.begin(), m.end(), [](unsigned e) { return e > 0; });
    if (!unit || !any_var) os << to_string(a);
    bool need_star = !unit || !any_var;
    for (int i = 0; i < vars_; ++i) {
      if (!m[i]) continue;
      if (need_star) os << "*";
      need_star = true;
      os << "x" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

MPoly elem_sym(int k, int j) {
  if (j < 0 || j > k) throw std::out_of_range("elementary symmetric index");
  MPoly p(k);
  Monomial m(k, 0);
  // enumerate j-subsets of {0..k-1}
  std::vector<int> idx(j);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::fill(m.begin(), m.end(), 0);
    for (int i : idx) m[i] = 1;
    p.add_term(m, Rational(1));
    int pos = j - 1;
    while (pos >= 0 && idx[pos] == k - j + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int q = pos + 1; q < j; ++q) idx[q] = idx[q - 1] + 1;
  }
  return p;
}

MPoly hom_symbolic(int k, long n) {
  if (n < 0) throw std::domain_error("negative degree");
  MPoly p(k);
  Monomial m(k, 0);
  // enumerate all exponent vectors of total degree n
  auto rec = [&](auto&& self, int i, long rem) -> void {
    if (i == k - 1) {
      m[i] = static_cast<unsigned>(rem);
      p.add_term(m, Rational(1));
      return;
    }
    for (long e = 0; e <= rem; ++e) {
      m[i] = static_cast<unsigned>(e);
      self(self, i + 1, rem - e);
    }
  };
  rec(rec, 0, n);
  return p;
}

}  // namespace matpow
