#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "matpow/rational.hpp"

namespace matpow {

// Exponent vector, one entry per ambient variable x1..xk.
using Monomial = std::vector<unsigned>;

struct TermBudgetExceeded : std::runtime_error {
  TermBudgetExceeded() : std::runtime_error("polynomial term budget exceeded") {}
};

struct VarCountMismatch : std::invalid_argument {
  VarCountMismatch() : std::invalid_argument("variable counts differ") {}
};

// Graded lexicographic: total degree first, then lex on exponents.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over Rational, canonical form (no zero
// coefficients, graded-lex term order). Immutable value semantics.
class MPoly {
 public:
  // Expansion guardrail; symbolic verification is intended for small k, n.
  static inline std::size_t term_budget = 1'000'000;

  explicit MPoly(int varcount = 0) : vars_(varcount) {}

  static MPoly constant(int varcount, const Rational& c);
  static MPoly variable(int varcount, int index);  // x_{index+1}, 0-based

  int varcount() const { return vars_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& mono, const Rational& coeff);
  const std::map<Monomial, Rational, GradedLexLess>& terms() const {
    return terms_;
  }

  MPoly operator+(const MPoly& rhs) const;
  MPoly operator-(const MPoly& rhs) const;
  MPoly operator*(const MPoly& rhs) const;
  MPoly operator-() const;
  MPoly scaled(const Rational& c) const;
  MPoly pow(long e) const;

  bool operator==(const MPoly& rhs) const {
    return vars_ == rhs.vars_ && terms_ == rhs.terms_;
  }

  Rational eval(std::span<const Rational> point) const;

  // Canonical text form, highest term first, e.g. "3*x1^2*x2 - 1/2*x3".
  std::string str() const;

 private:
  int vars_;
  std::map<Monomial, Rational, GradedLexLess> terms_;
};

// Elementary symmetric polynomial e_j in k variables (e_0 = 1).
MPoly elem_sym(int k, int j);

// Sum of all monomials of total degree n in k variables (the complete
// homogeneous symmetric polynomial, by direct enumeration).
MPoly hom_symbolic(int k, long n);

}  // namespace matpow
