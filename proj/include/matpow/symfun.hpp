#pragma once

#include <functional>
#include <span>
#include <vector>

#include "matpow/mpoly.hpp"
#include "matpow/rational.hpp"
#include "matpow/report.hpp"

namespace matpow {

// Index tuple (i_2, ..., i_k) of the multinomial expansion of the complete
// homogeneous symmetric polynomial, with target degree n. The weight
// 2 i_2 + 3 i_3 + ... + k i_k must not exceed n; the slack i_1 = n - weight
// is the exponent of s_1.
struct ExpTuple {
  std::vector<long> upper;  // i_2 .. i_k
  long n = 0;
  int k = 1;

  long weight() const {
    long w = 0;
    for (std::size_t j = 0; j < upper.size(); ++j)
      w += static_cast<long>(j + 2) * upper[j];
    return w;
  }
  long slack() const { return n - weight(); }
  bool valid() const {
    if (static_cast<int>(upper.size()) != k - 1 || n < 0) return false;
    for (long v : upper)
      if (v < 0) return false;
    return weight() <= n;
  }
};

// Specialized values (s_1, ..., s_k) of the elementary symmetric
// polynomials; for a matrix these are its signed characteristic
// coefficients.
using SymValues = std::vector<Rational>;

// Visit every valid tuple for (k, n) in lexicographic order of
// (i_2, ..., i_k). The callback receives the tuple and its slack i_1.
void for_each_exp_tuple(int k, long n,
                        const std::function<void(std::span<const long>, long)>& fn);

// Multinomial coefficient of one tuple: multinomial(i_1, i_2, ..., i_k).
BigInt tuple_coeff(const ExpTuple& t);

// Complete homogeneous symmetric value h_n at a rational point, by direct
// enumeration of all compositions of n. Independent oracle; cost grows as
// binom(n+k-1, k-1).
Rational hom_by_enumeration(std::span<const Rational> point, long n);

// Same value through the defining variable-peeling recurrence
// h_n(x_1..x_k) = h_n(x_1..x_{k-1}) + x_k h_{n-1}(x_1..x_k).
// Still definition-side (never touches the multinomial formula), but
// polynomial cost; used where enumeration would be prohibitive.
Rational hom_value(std::span<const Rational> point, long n);

// The multinomial-sum closed form: sum over valid tuples of
// tuple_coeff * s_1^{i_1} * prod_j ((-1)^{j-1} s_j)^{i_j}.
Rational hom_from_sym(const SymValues& s, long n);

// Symbolic form of the closed form with s_j = e_j(x_1..x_k), fully
// expanded; equals hom_symbolic(k, n).
MPoly hom_from_sym_symbolic(int k, long n);

// a(0..nmax) for the order-k recurrence
// a(n) = s_1 a(n-1) - s_2 a(n-2) + ... + (-1)^{k-1} s_k a(n-k),
// seeded a(0) = 1, a(m) = 0 for m < 0.
std::vector<Rational> hom_seq(const SymValues& s, long nmax);

// k-step Fibonacci: F(0) = 1, F(m<0) = 0, F(n) = F(n-1) + ... + F(n-k).
std::vector<BigInt> k_step_fibonacci(int k, long nmax);

// Multinomial-sum closed form of the k-step Fibonacci number.
BigInt k_step_fibonacci_formula(int k, long n);

// All-ones specialization: the closed-form sum at s_j = binom(k, j)
// counts weak compositions of n into k parts. Compared against both
// binom(n+k-1, k-1) (the actual count) and binom(n+k-1, k) (a published
// misprint of it); the report records which one matches.
IdentityReport composition_count_check(int k, long n);

}  // namespace matpow
