#include "matpow/matrix.hpp"

#include <sstream>

namespace matpow {

bool mat_eq(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

Matrix pow_binary(const Matrix& a, long n) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix not square");
  if (n < 0) throw std::domain_error("negative matrix power");
  Matrix acc = identity_like(a);
  Matrix base = a;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

CharCoeffs char_coeffs(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix not square");
  const Eigen::Index k = a.rows();
  // det(T I - A) = T^k + c_{k-1} T^{k-1} + ... + c_0 with c_{k-j} = (-1)^j s_j
  CharCoeffs s(k);
  Matrix m = Matrix::Zero(k, k);
  Rational c(1);
  for (Eigen::Index j = 1; j <= k; ++j) {
    m = (a * m + c * identity_like(a)).eval();
    c = -(a * m).trace() / Rational(static_cast<long>(j));
    s[j - 1] = (j % 2 == 0) ? c : -c;
  }
  return s;
}

Rational det(const Matrix& a) {
  const Eigen::Index k = a.rows();
  if (k != a.cols()) throw std::invalid_argument("matrix not square");
  if (k == 1) return a(0, 0);
  // cofactor expansion along the first row; k stays small here
  Rational sum(0);
  Matrix minor(k - 1, k - 1);
  for (Eigen::Index c = 0; c < k; ++c) {
    if (a(0, c) == 0) continue;
    for (Eigen::Index i = 1; i < k; ++i) {
      Eigen::Index jj = 0;
      for (Eigen::Index j = 0; j < k; ++j)
        if (j != c) minor(i - 1, jj++) = a(i, j);
    }
    Rational term = a(0, c) * det(minor);
    sum += (c % 2 == 0) ? term : -term;
  }
  return sum;
}

Matrix adjugate(const Matrix& a) {
  const Eigen::Index k = a.rows();
  if (k != a.cols()) throw std::invalid_argument("matrix not square");
  if (k == 1) {
    Matrix one(1, 1);
    one(0, 0) = 1;
    return one;
  }
  Matrix adj(k, k);
  Matrix minor(k - 1, k - 1);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) {
      for (Eigen::Index i = 0, ii = 0; i < k; ++i) {
        if (i == r) continue;
        for (Eigen::Index j = 0, jj = 0; j < k; ++j)
          if (j != c) minor(ii, jj++) = a(i, j);
        ++ii;
      }
      Rational cof = det(minor);
      adj(c, r) = ((r + c) % 2 == 0) ? cof : -cof;  // transposed
    }
  }
  return adj;
}

Matrix companion3(const Rational& x, const Rational& y, const Rational& z) {
  Matrix a(3, 3);
  a << x + y + z, 1, 0,
      -(x * y + x * z + y * z), 0, 1,
      x * y * z, 0, 0;
  return a;
}

PowerDecomposition power_decomposition(const CharCoeffs& s, long n) {
  const int k = static_cast<int>(s.size());
  if (n < k) throw std::domain_error("decomposition requires n >= k");
  std::vector<Rational> a = hom_seq(s, n);
  PowerDecomposition d;
  d.n = n;
  d.b.resize(k);
  for (int j = 0; j < k; ++j) {
    Rational v(0);
    for (int m = 0; m <= k - 1 - j; ++m) {
      Rational term = (m == 0) ? a[n - j - m] : s[m - 1] * a[n - j - m];
      v += (m % 2 == 0) ? term : -term;
    }
    d.b[j] = v;
  }
  // two routes to b_0, one answer
  Rational alt = s[k - 1] * a[n - k];
  if (k % 2 == 0) alt = -alt;
  if (d.b[0] != alt)
    throw std::logic_error("decomposition self-check failed for b_0");
  return d;
}

Matrix apply_decomposition(const Matrix& a, const PowerDecomposition& d) {
  Matrix sum = Matrix::Zero(a.rows(), a.cols());
  Matrix p = identity_like(a);
  for (std::size_t j = 0; j < d.b.size(); ++j) {
    if (j > 0) p = (p * a).eval();
    sum += d.b[j] * p;
  }
  return sum;
}

Matrix power_via_adjugate3(const Matrix& a, long n) {
  if (a.rows() != 3 || a.cols() != 3)
    throw std::invalid_argument("expected a 3x3 matrix");
  if (n < 3) throw std::domain_error("closed form requires n >= 3");
  CharCoeffs s = char_coeffs(a);
  const Rational& t = s[0];
  Rational a_n = hom_from_sym(s, n);
  Rational a_n1 = hom_from_sym(s, n - 1);
  Rational a_n2 = hom_from_sym(s, n - 2);
  Rational c0 = a_n - t * a_n1;
  return a_n1 * a + a_n2 * adjugate(a) + c0 * identity_like(a);
}

Matrix power_via_adjugate2(const Matrix& b, long n) {
  if (b.rows() != 2 || b.cols() != 2)
    throw std::invalid_argument("expected a 2x2 matrix");
  if (n < 2) throw std::domain_error("closed form requires n >= 2");
  CharCoeffs s = char_coeffs(b);
  const Rational& t = s[0];
  Rational b_n = hom_from_sym(s, n);
  Rational b_n1 = hom_from_sym(s, n - 1);
  Rational c0 = b_n - t * b_n1;
  return b_n1 * b + c0 * identity_like(b);
}

Rational hom3_closed(const Rational& x, const Rational& y, const Rational& z,
                     long n, Hom3Variant variant) {
  if (n < 0) throw std::domain_error("negative degree");
  switch (variant) {
    case Hom3Variant::distinct: {
      if (x == y || x == z || y == z)
        throw std::domain_error("distinct variant needs pairwise distinct arguments");
      Rational num = x * y * (rat_pow(x, n + 1) - rat_pow(y, n + 1)) -
                     x * z * (rat_pow(x, n + 1) - rat_pow(z, n + 1)) +
                     y * z * (rat_pow(y, n + 1) - rat_pow(z, n + 1));
      return num / ((x - y) * (x - z) * (y - z));
    }
    case Hom3Variant::y_eq_x: {
      if (x == z) throw std::domain_error("y_eq_x variant needs x != z");
      Rational num = rat_pow(x, n + 2) +
                     Rational(n) * rat_pow(x, n + 1) * (x - z) -
                     Rational(2) * rat_pow(x, n + 1) * z + rat_pow(z, n + 2);
      return num / ((x - z) * (x - z));
    }
    case Hom3Variant::all_eq:
      return Rational(((n + 1) * (n + 2)) / 2) * rat_pow(x, n);
  }
  throw std::logic_error("unreachable");
}

nlohmann::json matrix_to_json(const Matrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
    rows.push_back(row);
  }
  return nlohmann::json{{"k", a.rows()}, {"entries", rows}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  const long k = j.at("k").get<long>();
  const auto& rows = j.at("entries");
  if (k < 1 || static_cast<long>(rows.size()) != k)
    throw std::invalid_argument("bad matrix dimensions in JSON");
  Matrix a(k, k);
  for (long i = 0; i < k; ++i) {
    const auto& row = rows.at(i);
    if (static_cast<long>(row.size()) != k)
      throw std::invalid_argument("ragged matrix rows in JSON");
    for (long c = 0; c < k; ++c)
      a(i, c) = rational_from_string(row.at(c).get<std::string>());
  }
  return a;
}

Matrix matrix_from_inline(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::stringstream ss(text);
  std::string rowtext;
  while (std::getline(ss, rowtext, ';')) {
    std::vector<Rational> row;
    std::stringstream rs(rowtext);
    std::string cell;
    while (std::getline(rs, cell, ',')) row.push_back(rational_from_string(cell));
    rows.push_back(std::move(row));
  }
  const std::size_t k = rows.size();
  if (k == 0) throw std::invalid_argument("empty matrix");
  Matrix a(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != k) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < k; ++j) a(i, j) = rows[i][j];
  }
  return a;
}

std::string matrix_to_string(const Matrix& a) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      os << (j ? "," : "") << to_string(a(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace matpow
