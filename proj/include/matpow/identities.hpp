#pragma once

#include <set>
#include <utility>
#include <vector>

#include "matpow/matrix.hpp"
#include "matpow/quadrat.hpp"
#include "matpow/report.hpp"

namespace matpow {

// ---------------------------------------------------------------------------
// Theta-extension identities (a 2x2 matrix decomposed through the cubic
// obtained by adjoining an extra root theta to its quadratic).

// Matrix form: with t = tr B, d = det B and a_m the three-variable
// closed-form sum at (theta + t, theta t + d, theta d),
//   (a_{n-1} - theta a_{n-2}) B + (a_n - (theta+t) a_{n-1} + theta t a_{n-2}) I
// equals y_{n-1} B + (y_n - t y_{n-1}) I with y_m the two-variable sum.
IdentityReport check_theta_matrix(const Matrix& b, const Rational& theta, long n);

// Scalar particular case: b_n - (theta+1) b_{n-1} + theta b_{n-2} = 1 for
// all n in [3, nmax], where b_n is the sum at (theta+2, 2 theta+1, theta).
// theta = -2 exercises the 0^0 = 1 convention.
IdentityReport check_theta_scalar(const Rational& theta, long nmax);

// c_n = sum over 2i+3j = n. The printed summand (-1)^i binom(i+j,j) 2^i 3^j
// does not satisfy c_n + c_{n-1} - 2 c_{n-2} = 1 (fails at n = 4, residual
// 11); the summand rederived from the theta = -2 specialization,
// binom(i+j,j) 3^i (-2)^j, does. Both facts are checked and reported.
IdentityReport check_cn_adjudication(long nmax);

// ---------------------------------------------------------------------------
// Four binomial-sum identities, checked over 0..nmax each:
//  (i)   u_n = sum_j (-1)^j binom(n-2j, j) satisfies u_n = u_{n-1} - u_{n-3}
//        with u_0 = u_1 = u_2 = 1
//  (ii)  sum_{2i+3j<=n} (-1)^j binom(i+j,j) binom(n-i-2j, i+j) = floor((n+2)/2)
//  (iii) sum_j binom(n-2j, j) (-4)^j 3^{n-3j} = ((3n+4) 2^{n+1} + (-1)^n)/9
//  (iv)  sum_j binom(n-2j, j) 3^{n-3j} (-2)^j equals a closed form in
//        (1 +- sqrt 3)^{n+1}; the irrational component must cancel.
std::vector<IdentityReport> check_binomial_sums(long nmax_i, long nmax_ii,
                                                long nmax_iii, long nmax_iv);

// ---------------------------------------------------------------------------
// Commuting-factor power identity for 3x3 A with char data (t, s, d):
// A^n = (pd/(p^3+p^2 t+s p+d))^n * triple sum over r<=3n, j<=n, k<=n of
// binom(n,j) binom(n,k) binom(j,r-j-k) (-p(p+t)^2/d)^j (-(p+t)/p)^k
// (-A/(p+t))^r, compared entrywise against the binary-power oracle.
// Requires d != 0, p not in {0, -t}, p^3+p^2 t+s p+d != 0.
IdentityReport check_commuting_power(const Matrix& a, const Rational& p, long n);

enum class ScalarChainVariant { general, y_to_x, z_to_x, p_only };

// Scalar corollary chain of the commuting-factor identity, evaluated
// exactly at a rational point. `point` carries (x,y,z), (x,z), (x) or ()
// depending on the variant.
IdentityReport check_scalar_chain(ScalarChainVariant variant,
                                  const std::vector<Rational>& point,
                                  const Rational& p, long n);

enum class SpecialCase { unipotent, fibonacci, mersenne, gh };

// The four special-matrix weighted triple sums (weights r, F_r, 2^r - 1,
// (g^r + h^r)/(gh)^j respectively) against their closed forms.
IdentityReport check_weighted_sum(SpecialCase c, const Rational& p, long n,
                                  const Rational& g = Rational(1),
                                  const Rational& h = Rational(1));

// ---------------------------------------------------------------------------
// Bernstein's function f(n) = sum_j (-1)^j binom(n-2j, j) and the cubic
// Thue equation x^3 + y^3 - x y^2 = 1 its zeros lead to.

struct BernsteinState {
  std::vector<BigInt> f;            // f(0..nmax)
  std::vector<long> zeros;          // indices with f = 0
  std::set<std::pair<long, long>> thue_pairs;
};

// f(0..nmax) by direct summation and by the recurrence
// f(n) = f(n-1) - f(n-3); the two must agree.
BernsteinState bernstein_f(long nmax);

// For 4 <= n <= nmax, A^n for A = [[1,1,0],[0,0,1],[-1,0,0]] equals the
// matrix of f-values [[f(n),f(n-1),f(n-2)], [-f(n-2),...], [-f(n-1),...]].
IdentityReport bernstein_matrix_check(long nmax);

// All integer pairs with |x|, |y| <= bound solving x^3 + y^3 - x y^2 = 1.
std::set<std::pair<long, long>> thue_search(long bound);

// At every zero n0 of f in [0, nmax-2], with n = n0 + 2, verify
// -f(n-1)^3 - f(n-3)^3 + f(n-1) f(n-3)^2 = (-1)^n and that the suitably
// signed pair (f(n-1), f(n-3)) solves the Thue equation.
IdentityReport thue_link_check(long nmax);

}  // namespace matpow
