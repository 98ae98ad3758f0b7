#pragma once

#include <string>

#include "matpow/rational.hpp"

namespace matpow {

// Element a + b*sqrt(m) of a real quadratic extension of the rationals.
// The radicand m is fixed per value (squarefree, not a perfect square);
// arithmetic between values with different radicands is refused.
class QuadRat {
 public:
  QuadRat(Rational a, Rational b, long m)
      : a_(std::move(a)), b_(std::move(b)), m_(m) {
    if (m < 2 || !squarefree_nonsquare(m))
      throw std::domain_error("radicand must be squarefree and >= 2");
  }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  long radicand() const { return m_; }

  bool is_rational() const { return b_ == 0; }

  QuadRat conj() const { return QuadRat(a_, -b_, m_); }

  // a^2 - m b^2; multiplicative.
  Rational norm() const { return a_ * a_ - Rational(m_) * b_ * b_; }

  friend QuadRat operator+(const QuadRat& x, const QuadRat& y) {
    check(x, y);
    return QuadRat(x.a_ + y.a_, x.b_ + y.b_, x.m_);
  }
  friend QuadRat operator-(const QuadRat& x, const QuadRat& y) {
    check(x, y);
    return QuadRat(x.a_ - y.a_, x.b_ - y.b_, x.m_);
  }
  friend QuadRat operator-(const QuadRat& x) {
    return QuadRat(-x.a_, -x.b_, x.m_);
  }
  friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
    check(x, y);
    return QuadRat(x.a_ * y.a_ + Rational(x.m_) * x.b_ * y.b_,
                   x.a_ * y.b_ + x.b_ * y.a_, x.m_);
  }
  friend QuadRat operator/(const QuadRat& x, const QuadRat& y) {
    check(x, y);
    Rational n = y.norm();
    if (n == 0) throw DivisionByZero{};
    QuadRat num = x * y.conj();
    return QuadRat(num.a_ / n, num.b_ / n, x.m_);
  }

  friend QuadRat operator+(const QuadRat& x, const Rational& c) {
    return QuadRat(x.a_ + c, x.b_, x.m_);
  }
  friend QuadRat operator-(const QuadRat& x, const Rational& c) {
    return QuadRat(x.a_ - c, x.b_, x.m_);
  }
  friend QuadRat operator*(const QuadRat& x, const Rational& c) {
    return QuadRat(x.a_ * c, x.b_ * c, x.m_);
  }
  friend QuadRat operator/(const QuadRat& x, const Rational& c) {
    if (c == 0) throw DivisionByZero{};
    return QuadRat(x.a_ / c, x.b_ / c, x.m_);
  }

  friend bool operator==(const QuadRat& x, const QuadRat& y) {
    return x.m_ == y.m_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  QuadRat pow(long e) const {
    if (e < 0) {
      QuadRat one(Rational(1), Rational(0), m_);
      return (one / *this).pow(-e);
    }
    QuadRat acc(Rational(1), Rational(0), m_);
    QuadRat base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  // "a+b*sqrt(m)", components in rational string form.
  std::string str() const {
    return to_string(a_) + (b_ < 0 ? "-" : "+") + to_string(abs(b_)) +
           "*sqrt(" + std::to_string(m_) + ")";
  }

 private:
  static void check(const QuadRat& x, const QuadRat& y) {
    if (x.m_ != y.m_) throw RadicandMismatch{};
  }
  static bool squarefree_nonsquare(long m) {
    for (long d = 2; d * d <= m; ++d)
      if (m % (d * d) == 0) return false;
    return true;
  }

  Rational a_, b_;
  long m_;
};

}  // namespace matpow
