#include <doctest.h>

#include <algorithm>

#include "matpow/mpoly.hpp"
#include "matpow/random.hpp"

using namespace matpow;

namespace {

MPoly x_of(int k, int i) { return MPoly::variable(k, i); }

MPoly random_poly(Sampler& smp, int k, int maxdeg, int terms) {
  MPoly p(k);
  for (int t = 0; t < terms; ++t) {
    Monomial m(k);
    for (int v = 0; v < k; ++v)
      m[v] = static_cast<unsigned>(smp.int_in(0, maxdeg));
    p.add_term(m, smp.rational());
  }
  return p;
}

// embed a j-variable exponent vector into k variables, shifted right by one
// (slot 0 reserved for the extra variable T)
MPoly shift_embed(const MPoly& p, int k) {
  MPoly out(k);
  for (const auto& [mono, c] : p.terms()) {
    Monomial m(k, 0);
    std::copy(mono.begin(), mono.end(), m.begin() + 1);
    out.add_term(m, c);
  }
  return out;
}

}  // namespace

TEST_CASE("ring arithmetic on small examples") {
  const int k = 2;
  MPoly x = x_of(k, 0), y = x_of(k, 1);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x + y).pow(2) == x * x + x * y.scaled(2) + y * y);
  CHECK((x + y).pow(0) == MPoly::constant(k, 1));
  CHECK((x - x).is_zero());
  CHECK(-(x - y) == y - x);

  MPoly z3(3);
  CHECK_THROWS_AS(x + x_of(3, 0), VarCountMismatch);
}

TEST_CASE("canonical form drops zero coefficients") {
  MPoly p(2);
  p.add_term({1, 0}, Rational(3));
  p.add_term({1, 0}, Rational(-3));
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
}

TEST_CASE("string form, graded-lex order") {
  MPoly p(3);
  p.add_term({2, 1, 0}, Rational(3));
  p.add_term({0, 0, 1}, Rational(-1, 2));
  CHECK(p.str() == "3*x1^2*x2 - 1/2*x3");
  CHECK(MPoly(3).str() == "0");
  CHECK(MPoly::constant(2, Rational(-5, 3)).str() == "-5/3");
}

TEST_CASE("evaluation is a ring homomorphism") {
  Sampler smp(3);
  for (int t = 0; t < 40; ++t) {
    int k = static_cast<int>(smp.int_in(1, 4));
    MPoly p = random_poly(smp, k, 3, 5);
    MPoly q = random_poly(smp, k, 3, 5);
    std::vector<Rational> pt;
    for (int v = 0; v < k; ++v) pt.push_back(smp.rational());
    CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
    CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
    CHECK(p.pow(3).eval(pt) == rat_pow(p.eval(pt), 3));
  }
}

TEST_CASE("eval examples") {
  const int k = 2;
  MPoly p = x_of(k, 0) * x_of(k, 0) + x_of(k, 1).scaled(Rational(1, 2));
  std::vector<Rational> pt{Rational(2), Rational(4)};
  CHECK(p.eval(pt) == 6);
  std::vector<Rational> bad{Rational(1)};
  CHECK_THROWS_AS(p.eval(bad), VarCountMismatch);
}

TEST_CASE("elementary symmetric polynomials") {
  MPoly e = elem_sym(3, 2);
  MPoly want = x_of(3, 0) * x_of(3, 1) + x_of(3, 0) * x_of(3, 2) +
               x_of(3, 1) * x_of(3, 2);
  CHECK(e == want);
  CHECK(elem_sym(4, 0) == MPoly::constant(4, 1));
  CHECK(elem_sym(4, 4) == x_of(4, 0) * x_of(4, 1) * x_of(4, 2) * x_of(4, 3));
  CHECK_THROWS(elem_sym(3, 4));
  // binom(k, j) monomials, all with coefficient 1
  for (int j = 0; j <= 5; ++j) {
    MPoly ej = elem_sym(5, j);
    CHECK(ej.term_count() == binomial(5, j).get_ui());
    for (const auto& [mono, c] : ej.terms()) CHECK(c == 1);
  }
}

TEST_CASE("symmetry under variable swap") {
  // swapping x1 <-> x2 in the exponent vectors leaves e_j and h_n fixed
  auto swap01 = [](const MPoly& p) {
    MPoly out(p.varcount());
    for (const auto& [mono, c] : p.terms()) {
      Monomial m = mono;
      std::swap(m[0], m[1]);
      out.add_term(m, c);
    }
    return out;
  };
  for (int j = 0; j <= 3; ++j) CHECK(swap01(elem_sym(3, j)) == elem_sym(3, j));
  for (long n = 0; n <= 5; ++n)
    CHECK(swap01(hom_symbolic(3, n)) == hom_symbolic(3, n));
}

TEST_CASE("complete homogeneous enumeration") {
  CHECK(hom_symbolic(2, 2) ==
        x_of(2, 0).pow(2) + x_of(2, 0) * x_of(2, 1) + x_of(2, 1).pow(2));
  CHECK(hom_symbolic(3, 0) == MPoly::constant(3, 1));
  CHECK(hom_symbolic(1, 7) == x_of(1, 0).pow(7));
  // binom(n+k-1, k-1) monomials, all coefficient 1
  for (int k = 1; k <= 4; ++k)
    for (long n = 0; n <= 6; ++n) {
      MPoly h = hom_symbolic(k, n);
      CHECK(h.term_count() == binomial(n + k - 1, k - 1).get_ui());
      for (const auto& [mono, c] : h.terms()) CHECK(c == 1);
    }
}

TEST_CASE("prod (T - x_i) expands through signed elementary symmetrics") {
  // in variables (T, x1, x2, x3):
  // (T-x1)(T-x2)(T-x3) = sum_j (-1)^j e_j(x) T^{3-j}
  const int k = 4;
  MPoly t = x_of(k, 0);
  MPoly prod = MPoly::constant(k, 1);
  for (int i = 1; i < k; ++i) prod = prod * (t - x_of(k, i));
  MPoly sum(k);
  for (int j = 0; j <= 3; ++j) {
    Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
    sum = sum + (shift_embed(elem_sym(3, j), k) * t.pow(3 - j)).scaled(sign);
  }
  CHECK(prod == sum);
}

TEST_CASE("term budget guardrail") {
  std::size_t saved = MPoly::term_budget;
  MPoly::term_budget = 10;
  MPoly base = x_of(2, 0) + x_of(2, 1);
  CHECK_THROWS_AS(base.pow(20), TermBudgetExceeded);
  MPoly::term_budget = saved;
  CHECK_NOTHROW(base.pow(20));
}
