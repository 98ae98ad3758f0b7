#include "matpow/symfun.hpp"

#include <stdexcept>

namespace matpow {

void for_each_exp_tuple(
    int k, long n,
    const std::function<void(std::span<const long>, long)>& fn) {
  if (k < 1 || n < 0) throw std::domain_error("bad tuple range");
  std::vector<long> upper(k - 1, 0);
  // lexicographic in (i_2, ..., i_k)
  auto rec = [&](auto&& self, int pos, long budget) -> void {
    if (pos == k - 1) {
      fn(upper, budget);  // budget = remaining slack i_1
      return;
    }
    long part = pos + 2;  // i_{pos+2} carries weight pos+2
    for (long v = 0; v * part <= budget; ++v) {
      upper[pos] = v;
      self(self, pos + 1, budget - v * part);
    }
    upper[pos] = 0;
  };
  rec(rec, 0, n);
}

BigInt tuple_coeff(const ExpTuple& t) {
  if (!t.valid()) throw std::domain_error("invalid exponent tuple");
  std::vector<long> parts;
  parts.reserve(t.k);
  parts.push_back(t.slack());
  parts.insert(parts.end(), t.upper.begin(), t.upper.end());
  return multinomial(parts);
}

Rational hom_by_enumeration(std::span<const Rational> point, long n) {
  if (point.empty() || n < 0) throw std::domain_error("bad arguments");
  int k = static_cast<int>(point.size());
  Rational sum(0);
  // walk all compositions (r_1,...,r_k) of n, carrying the partial product
  auto rec = [&](auto&& self, int i, long rem, const Rational& prod) -> void {
    if (i == k - 1) {
      sum += prod * rat_pow(point[i], rem);
      return;
    }
    Rational p = prod;
    for (long e = 0; e <= rem; ++e) {
      self(self, i + 1, rem - e, p);
      if (e < rem) p *= point[i];
    }
  };
  rec(rec, 0, n, Rational(1));
  return sum;
}

Rational hom_value(std::span<const Rational> point, long n) {
  if (point.empty() || n < 0) throw std::domain_error("bad arguments");
  int k = static_cast<int>(point.size());
  // h[i] = h_m(x_1..x_{i+1}) rolled over m = 0..n
  std::vector<Rational> h(k, Rational(1));
  for (long m = 1; m <= n; ++m) {
    // h_m(x_1) = x_1^m; then peel in one variable at a time
    h[0] *= point[0];
    for (int i = 1; i < k; ++i) h[i] = h[i - 1] + point[i] * h[i];
  }
  return h[k - 1];
}

Rational hom_from_sym(const SymValues& s, long n) {
  if (s.empty() || n < 0) throw std::domain_error("bad arguments");
  int k = static_cast<int>(s.size());
  // signed bases (-1)^{j-1} s_j for j >= 2, and a power table for s_1
  std::vector<Rational> base(k - 1);
  for (int j = 2; j <= k; ++j)
    base[j - 2] = (j % 2 == 0) ? Rational(-s[j - 1]) : s[j - 1];
  std::vector<Rational> s1pow(n + 1);
  s1pow[0] = 1;
  for (long e = 1; e <= n; ++e) s1pow[e] = s1pow[e - 1] * s[0];

  Rational sum(0);
  std::vector<long> parts(k);
  for_each_exp_tuple(k, n, [&](std::span<const long> upper, long slack) {
    parts[0] = slack;
    Rational term(s1pow[slack]);
    for (int j = 0; j < k - 1; ++j) {
      parts[j + 1] = upper[j];
      if (upper[j]) term *= rat_pow(base[j], upper[j]);
    }
    sum += Rational(multinomial(parts)) * term;
  });
  return sum;
}

MPoly hom_from_sym_symbolic(int k, long n) {
  if (k < 1 || n < 0) throw std::domain_error("bad arguments");
  std::vector<MPoly> e(k + 1, MPoly(k));
  for (int j = 0; j <= k; ++j) e[j] = elem_sym(k, j);

  // cache powers of each signed base as needed
  MPoly sum(k);
  std::vector<long> parts(k);
  for_each_exp_tuple(k, n, [&](std::span<const long> upper, long slack) {
    parts[0] = slack;
    MPoly term = e[1].pow(slack);
    for (int j = 2; j <= k; ++j) {
      parts[j - 1] = upper[j - 2];
      if (upper[j - 2]) {
        MPoly b = (j % 2 == 0) ? -e[j] : e[j];
        term = term * b.pow(upper[j - 2]);
      }
    }
    sum = sum + term.scaled(Rational(multinomial(parts)));
  });
  return sum;
}

std::vector<Rational> hom_seq(const SymValues& s, long nmax) {
  if (s.empty() || nmax < 0) throw std::domain_error("bad arguments");
  int k = static_cast<int>(s.size());
  std::vector<Rational> a(nmax + 1);
  a[0] = 1;
  for (long n = 1; n <= nmax; ++n) {
    Rational v(0);
    for (int j = 1; j <= k; ++j) {
      if (n - j < 0) break;
      Rational term = s[j - 1] * a[n - j];
      v += (j % 2 == 1) ? term : -term;
    }
    a[n] = v;
  }
  return a;
}

std::vector<BigInt> k_step_fibonacci(int k, long nmax) {
  if (k < 1 || nmax < 0) throw std::domain_error("bad arguments");
  std::vector<BigInt> f(nmax + 1);
  f[0] = 1;
  for (long n = 1; n <= nmax; ++n) {
    BigInt v(0);
    for (int j = 1; j <= k && n - j >= 0; ++j) v += f[n - j];
    f[n] = v;
  }
  return f;
}

BigInt k_step_fibonacci_formula(int k, long n) {
  if (k < 1 || n < 0) throw std::domain_error("bad arguments");
  BigInt sum(0);
  std::vector<long> parts(k);
  for_each_exp_tuple(k, n, [&](std::span<const long> upper, long slack) {
    parts[0] = slack;
    for (int j = 0; j < k - 1; ++j) parts[j + 1] = upper[j];
    sum += multinomial(parts);
  });
  return sum;
}

IdentityReport composition_count_check(int k, long n) {
  IdentityReport rep;
  rep.id = "composition-count";
  rep.params = {{"k", k}, {"n", n}};
  SymValues s(k);
  for (int j = 1; j <= k; ++j) s[j - 1] = Rational(binomial(k, j));
  Rational sum = hom_from_sym(s, n);
  BigInt actual = binomial(n + k - 1, k - 1);
  BigInt printed = binomial(n + k - 1, k);
  std::vector<Rational> ones(k, Rational(1));
  Rational count = hom_by_enumeration(ones, n);

  rep.lhs = to_string(sum);
  rep.rhs = actual.get_str();
  bool matches_actual = (sum == Rational(actual)) && (count == Rational(actual));
  bool matches_printed = sum == Rational(printed);
  rep.status = matches_actual ? IdentityReport::Status::pass
                              : IdentityReport::Status::fail;
  if (matches_actual && !matches_printed) {
    rep.note = "sum equals binom(n+k-1, k-1); the printed binom(n+k-1, k) "
               "does not match (lower-index misprint)";
  } else if (matches_printed) {
    rep.note = "sum equals binom(n+k-1, k) as printed";
  }
  return rep;
}

}  // namespace matpow
