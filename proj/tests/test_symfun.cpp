#include <doctest.h>

#include "matpow/random.hpp"
#include "matpow/symfun.hpp"

using namespace matpow;

namespace {

// factorial-quotient form of the coefficient, independent of multinomial()
BigInt coeff_by_factorials(const ExpTuple& t) {
  BigInt num, den(1), part;
  long total = t.slack();
  for (long v : t.upper) total += v;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(total));
  mpz_fac_ui(part.get_mpz_t(), static_cast<unsigned long>(t.slack()));
  den *= part;
  for (long v : t.upper) {
    mpz_fac_ui(part.get_mpz_t(), static_cast<unsigned long>(v));
    den *= part;
  }
  return num / den;
}

SymValues elem_values(std::span<const Rational> point) {
  // e_j via the product recurrence prod (1 + x_i T)
  int k = static_cast<int>(point.size());
  std::vector<Rational> e(k + 1, Rational(0));
  e[0] = 1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j >= 1; --j) e[j] += point[i] * e[j - 1];
  return SymValues(e.begin() + 1, e.end());
}

}  // namespace

TEST_CASE("exponent tuples and their coefficients") {
  ExpTuple t{{1, 1}, 5, 3};  // (i_2, i_3) = (1, 1), n = 5
  CHECK(t.weight() == 5);
  CHECK(t.slack() == 0);
  CHECK(tuple_coeff(t) == 2);

  ExpTuple zero{{0, 0}, 4, 3};
  CHECK(tuple_coeff(zero) == 1);

  ExpTuple pair{{2}, 5, 2};  // i_2 = 2, slack 1
  CHECK(tuple_coeff(pair) == 3);

  ExpTuple bad{{3}, 5, 2};  // weight 6 > n
  CHECK(!bad.valid());
  CHECK_THROWS(tuple_coeff(bad));
}

TEST_CASE("tuple coefficients match the factorial quotient") {
  for (int k = 2; k <= 4; ++k)
    for (long n : {0L, 5L, 17L, 30L})
      for_each_exp_tuple(k, n, [&](std::span<const long> upper, long slack) {
        ExpTuple t{{upper.begin(), upper.end()}, n, k};
        REQUIRE(t.slack() == slack);
        CHECK(tuple_coeff(t) == coeff_by_factorials(t));
      });
}

TEST_CASE("tuple enumeration covers exactly the valid weights") {
  long count = 0, want = 0;
  for_each_exp_tuple(3, 6, [&](std::span<const long>, long slack) {
    CHECK(slack >= 0);
    ++count;
  });
  // pairs (i_2, i_3) with 2 i_2 + 3 i_3 <= 6
  for (long i2 = 0; 2 * i2 <= 6; ++i2)
    for (long i3 = 0; 2 * i2 + 3 * i3 <= 6; ++i3) ++want;
  CHECK(count == want);
}

TEST_CASE("complete homogeneous values, enumeration vs recurrence") {
  std::vector<Rational> p12{Rational(1), Rational(2)};
  CHECK(hom_by_enumeration(p12, 3) == 15);
  CHECK(hom_by_enumeration(p12, 0) == 1);
  std::vector<Rational> ones{Rational(1), Rational(1), Rational(1)};
  CHECK(hom_by_enumeration(ones, 2) == 6);
  CHECK(hom_value(p12, 3) == 15);

  Sampler smp(5);
  for (int t = 0; t < 30; ++t) {
    int k = static_cast<int>(smp.int_in(1, 4));
    std::vector<Rational> pt;
    for (int i = 0; i < k; ++i) pt.push_back(smp.rational());
    long n = smp.int_in(0, 10);
    CHECK(hom_value(pt, n) == hom_by_enumeration(pt, n));
  }
  CHECK_THROWS(hom_value(std::vector<Rational>{}, 1));
  CHECK_THROWS(hom_value(ones, -1));
}

TEST_CASE("multinomial closed form at specialized values") {
  CHECK(hom_from_sym({Rational(3), Rational(2)}, 3) == 15);          // point (1,2)
  CHECK(hom_from_sym({Rational(3), Rational(3), Rational(1)}, 2) == 6);
  CHECK(hom_from_sym({Rational(7)}, 4) == rat_pow(Rational(7), 4));  // k = 1
  CHECK(hom_from_sym({Rational(5), Rational(-2)}, 0) == 1);

  // closed form equals the definition at random points
  Sampler smp(9);
  for (int t = 0; t < 30; ++t) {
    int k = static_cast<int>(smp.int_in(1, 5));
    std::vector<Rational> pt;
    for (int i = 0; i < k; ++i) pt.push_back(smp.rational());
    long n = smp.int_in(0, 12);
    CHECK(hom_from_sym(elem_values(pt), n) == hom_value(pt, n));
  }
}

TEST_CASE("symbolic closed form equals the monomial sum") {
  MPoly h22 = hom_from_sym_symbolic(2, 2);
  MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  CHECK(h22 == x * x + x * y + y * y);
  CHECK(hom_from_sym_symbolic(3, 1) == elem_sym(3, 1));
  for (int k = 2; k <= 3; ++k)
    for (long n = 0; n <= 6; ++n)
      CHECK(hom_from_sym_symbolic(k, n) == hom_symbolic(k, n));
}

TEST_CASE("recurrence sequence a(n)") {
  auto fib = hom_seq({Rational(1), Rational(-1)}, 6);
  // s = (1, -1) gives a(n) = a(n-1) + a(n-2): shifted Fibonacci
  std::vector<long> want{1, 1, 2, 3, 5, 8, 13};
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(fib[i] == want[i]);

  auto a = hom_seq({Rational(6), Rational(11), Rational(6)}, 4);
  CHECK(a[1] == 6);
  CHECK(a[2] == 25);  // 6*6 - 11
  CHECK(a[3] == 90);
  CHECK(a[4] == 301);

  auto c = hom_seq({Rational(5, 2)}, 3);
  CHECK(c[3] == rat_pow(Rational(5, 2), 3));

  // terminal value equals the closed form, any s
  Sampler smp(13);
  for (int t = 0; t < 20; ++t) {
    int k = static_cast<int>(smp.int_in(1, 4));
    SymValues s;
    for (int i = 0; i < k; ++i) s.push_back(smp.rational());
    long n = smp.int_in(0, 15);
    CHECK(hom_seq(s, n)[n] == hom_from_sym(s, n));
  }
}

TEST_CASE("k-step Fibonacci, recurrence vs formula") {
  auto f2 = k_step_fibonacci(2, 6);
  std::vector<long> want2{1, 1, 2, 3, 5, 8, 13};
  for (std::size_t i = 0; i < want2.size(); ++i) CHECK(f2[i] == want2[i]);

  auto f3 = k_step_fibonacci(3, 7);
  std::vector<long> want3{1, 1, 2, 4, 7, 13, 24, 44};
  for (std::size_t i = 0; i < want3.size(); ++i) CHECK(f3[i] == want3[i]);

  for (int k = 2; k <= 5; ++k) {
    auto f = k_step_fibonacci(k, 25);
    for (long n = 0; n <= 25; ++n)
      CHECK(f[n] == k_step_fibonacci_formula(k, n));
  }

  // at s_j = (-1)^{j-1} the signed recurrence collapses to the plain
  // k-term sum, so a(n) is the k-step Fibonacci number
  SymValues alt;
  for (int j = 1; j <= 4; ++j) alt.push_back(j % 2 == 1 ? 1 : -1);
  auto a = hom_seq(alt, 20);
  auto f4 = k_step_fibonacci(4, 20);
  for (long n = 0; n <= 20; ++n) CHECK(a[n] == Rational(f4[n]));
}

TEST_CASE("all-ones specialization counts compositions") {
  auto rep = composition_count_check(2, 3);
  CHECK(rep.passed());
  CHECK(rep.lhs == "4");
  CHECK(rep.rhs == "4");
  CHECK(rep.note.find("k-1") != std::string::npos);

  CHECK(composition_count_check(1, 5).passed());
  auto r32 = composition_count_check(3, 2);
  CHECK(r32.passed());
  CHECK(r32.lhs == "6");
  for (int k = 2; k <= 5; ++k)
    for (long n = 0; n <= 12; ++n) CHECK(composition_count_check(k, n).passed());
}
