#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>
#include <vector>

#include <json.hpp>

#include "matpow/rational.hpp"
#include "matpow/symfun.hpp"

namespace Eigen {
// Exact rational scalar for Eigen dense types.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};
}  // namespace Eigen

namespace matpow {

using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// Signed characteristic coefficients (s_1, ..., s_k):
// char poly = T^k - s_1 T^{k-1} + s_2 T^{k-2} - ... + (-1)^k s_k.
// s_1 is the trace, s_k the determinant.
using CharCoeffs = SymValues;

// Coefficients (b_0, ..., b_{k-1}) with A^n = sum_j b_j A^j.
struct PowerDecomposition {
  std::vector<Rational> b;
  long n = 0;
};

inline Matrix identity_like(const Matrix& a) {
  return Matrix::Identity(a.rows(), a.cols());
}

bool mat_eq(const Matrix& a, const Matrix& b);

// A^n by square-and-multiply; the oracle every closed form is checked
// against. A^0 = I.
Matrix pow_binary(const Matrix& a, long n);

// Faddeev-LeVerrier recursion; divisions are by the integers 1..k only,
// always exact over the rationals.
CharCoeffs char_coeffs(const Matrix& a);

Rational det(const Matrix& a);

// Transpose of the cofactor matrix. A * adjugate(A) = det(A) * I, also for
// singular A.
Matrix adjugate(const Matrix& a);

// The 3x3 companion-style matrix with char coefficients
// (x+y+z, xy+xz+yz, xyz):
//   [ x+y+z      1  0 ]
//   [ -(xy+xz+yz) 0 1 ]
//   [ xyz        0  0 ]
Matrix companion3(const Rational& x, const Rational& y, const Rational& z);

// Closed-form decomposition A^n = sum b_j A^j from characteristic data
// alone, valid for n >= k. b_j = sum_{m=0}^{k-1-j} (-1)^m s_m a(n-j-m)
// with s_0 = 1 and a the order-k recurrence sequence. The alternate form
// b_0 = (-1)^{k-1} s_k a(n-k) is asserted internally.
PowerDecomposition power_decomposition(const CharCoeffs& s, long n);

Matrix apply_decomposition(const Matrix& a, const PowerDecomposition& d);

// 3x3 power through the adjugate:
// A^n = a_{n-1} A + a_{n-2} Adj(A) + (a_n - t a_{n-1}) I,
// with a_m the multinomial-sum closed form at (t, s, d).
Matrix power_via_adjugate3(const Matrix& a, long n);

// 2x2 power from trace and determinant. The published orientation
// "B^n = b_n I + b_{n-1} Adj(B)" fails a sign check on off-diagonal
// entries; the corrected form B^n = b_{n-1} B + (b_n - t b_{n-1}) I is
// used here.
Matrix power_via_adjugate2(const Matrix& b, long n);

enum class Hom3Variant { distinct, y_eq_x, all_eq };

// Closed rational form of h_n in three variables:
//   distinct: (xy(x^{n+1}-y^{n+1}) - xz(x^{n+1}-z^{n+1}) + yz(y^{n+1}-z^{n+1}))
//             / ((x-y)(x-z)(y-z))
//   y_eq_x:   limit y -> x (requires x != z)
//   all_eq:   (n+1)(n+2)/2 * x^n
// Equals the (1,2) entry of companion3(...)^{n+1}.
Rational hom3_closed(const Rational& x, const Rational& y, const Rational& z,
                     long n, Hom3Variant variant);

// JSON form: {"k": int, "entries": [[rational-string, ...], ...]}, row-major.
nlohmann::json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const nlohmann::json& j);

// Inline form "1,1;1,0" (rows separated by ';', entries by ',').
Matrix matrix_from_inline(const std::string& text);

std::string matrix_to_string(const Matrix& a);

}  // namespace matpow
