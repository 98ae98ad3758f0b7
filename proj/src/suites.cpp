#include "matpow/suites.hpp"

#include <algorithm>
#include <chrono>

#include "matpow/identities.hpp"
#include "matpow/matrix.hpp"
#include "matpow/symfun.hpp"

namespace matpow {
namespace {

IdentityReport aggregate(std::string id, nlohmann::json params, bool ok,
                         std::string detail, std::uint64_t seed) {
  IdentityReport rep;
  rep.id = std::move(id);
  rep.params = std::move(params);
  rep.status = ok ? IdentityReport::Status::pass : IdentityReport::Status::fail;
  rep.lhs = rep.rhs = ok ? "agree" : "disagree";
  rep.note = std::move(detail);
  rep.seed = seed;
  return rep;
}

SymValues elem_values(std::span<const Rational> point) {
  int k = static_cast<int>(point.size());
  SymValues s(k, Rational(0));
  // e_j via the Newton-free product recurrence: multiply in one root at a time
  for (const Rational& x : point) {
    for (int j = k - 1; j >= 1; --j) s[j] = s[j] + x * s[j - 1];
    s[0] += x;
  }
  return s;
}

void suite_theorem1(const SuiteConfig& cfg, std::vector<IdentityReport>& out) {
  Sampler smp(cfg.seed);

  // symbolic: expanded closed form equals the sum of all degree-n monomials
  for (int k : {2, 3}) {
    bool ok = true;
    std::string detail;
    for (long n = 0; n <= 8 && ok; ++n) {
      if (!(hom_from_sym_symbolic(k, n) == hom_symbolic(k, n))) {
        ok = false;
        detail = "polynomial mismatch at n=" + std::to_string(n);
      }
    }
    out.push_back(aggregate("hom-closed-form-symbolic",
                            {{"k", k}, {"nmax", 8}}, ok, detail, cfg.seed));
  }

  // numeric: closed form at e(point) equals h_n(point) for random points
  for (int k = 2; k <= 6; ++k) {
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < cfg.trials && ok; ++trial) {
      std::vector<Rational> point(k);
      for (auto& x : point) x = smp.rational();
      long n = smp.int_in(1, 40);
      Rational direct = hom_value(point, n);
      Rational closed = hom_from_sym(elem_values(point), n);
      if (direct != closed) {
        ok = false;
        detail = "mismatch at trial " + std::to_string(trial) +
                 ", n=" + std::to_string(n);
      }
    }
    out.push_back(aggregate("hom-closed-form-numeric",
                            {{"k", k}, {"trials", cfg.trials}}, ok, detail,
                            cfg.seed));
  }

  // recurrence sequence terminal value equals the closed-form sum
  {
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < cfg.trials && ok; ++trial) {
      int k = static_cast<int>(smp.int_in(1, 5));
      SymValues s(k);
      for (auto& v : s) v = smp.rational();
      long n = smp.int_in(0, 30);
      auto a = hom_seq(s, n);
      if (a[n] != hom_from_sym(s, n)) {
        ok = false;
        detail = "mismatch at trial " + std::to_string(trial);
      }
    }
    out.push_back(aggregate("hom-recurrence-vs-closed-form",
                            {{"trials", cfg.trials}}, ok, detail, cfg.seed));
  }

  // k-step Fibonacci: recurrence equals multinomial formula
  for (int k = 2; k <= 6; ++k) {
    auto rec = k_step_fibonacci(k, 40);
    bool ok = true;
    std::string detail;
    for (long n = 0; n <= 40 && ok; ++n) {
      if (rec[n] != k_step_fibonacci_formula(k, n)) {
        ok = false;
        detail = "mismatch at n=" + std::to_string(n);
      }
    }
    out.push_back(aggregate("k-step-fibonacci-closed-form",
                            {{"k", k}, {"nmax", 40}}, ok, detail, cfg.seed));
  }

  // composition-count corollary, with the misprint adjudication
  for (int k = 2; k <= 5; ++k) {
    bool ok = true;
    std::string detail;
    for (long n = 0; n <= 30 && ok; ++n) {
      IdentityReport r = composition_count_check(k, n);
      if (!r.passed()) {
        ok = false;
        detail = "fails at n=" + std::to_string(n);
      }
    }
    out.push_back(aggregate(
        "composition-count", {{"k", k}, {"nmax", 30}}, ok,
        ok ? "sum equals binom(n+k-1, k-1); printed lower index k is a misprint"
           : detail,
        cfg.seed));
  }
}

void suite_matrixpowers(const SuiteConfig& cfg,
                        std::vector<IdentityReport>& out) {
  Sampler smp(cfg.seed);

  for (int k = 2; k <= 5; ++k) {
    bool decomp_ok = true, ch_ok = true, adj_ok = true;
    std::string detail;
    for (int trial = 0; trial < cfg.trials; ++trial) {
      Matrix a = smp.int_matrix(k, -9, 9);
      CharCoeffs s = char_coeffs(a);
      long n = smp.int_in(k, 60);

      Matrix oracle = pow_binary(a, n);
      Matrix rebuilt = apply_decomposition(a, power_decomposition(s, n));
      if (!mat_eq(oracle, rebuilt)) {
        decomp_ok = false;
        detail = "decomposition mismatch, trial " + std::to_string(trial);
      }

      // Cayley-Hamilton residual
      Matrix res = Matrix::Zero(k, k);
      Matrix p = identity_like(a);
      for (int j = k; j >= 0; --j) {
        Rational c = (j == k) ? Rational(1) : s[k - j - 1];
        if ((k - j) % 2 == 1) c = -c;
        res += c * pow_binary(a, j);
      }
      if (!mat_eq(res, Matrix::Zero(k, k))) ch_ok = false;

      Matrix prod = a * adjugate(a);
      Matrix want = det(a) * identity_like(a);
      if (!mat_eq(prod, want)) adj_ok = false;
    }
    out.push_back(aggregate("power-decomposition-vs-oracle",
                            {{"k", k}, {"trials", cfg.trials}}, decomp_ok,
                            detail, cfg.seed));
    out.push_back(aggregate("cayley-hamilton-residual",
                            {{"k", k}, {"trials", cfg.trials}}, ch_ok, "",
                            cfg.seed));
    out.push_back(aggregate("adjugate-identity",
                            {{"k", k}, {"trials", cfg.trials}}, adj_ok, "",
                            cfg.seed));
  }

  // the two 3x3 routes and the corrected 2x2 route against the oracle
  {
    bool ok3 = true, ok2 = true;
    for (int trial = 0; trial < cfg.trials; ++trial) {
      Matrix a = smp.int_matrix(3, -9, 9);
      long n = smp.int_in(3, 40);
      Matrix oracle = pow_binary(a, n);
      if (!mat_eq(power_via_adjugate3(a, n), oracle)) ok3 = false;
      if (!mat_eq(apply_decomposition(a, power_decomposition(char_coeffs(a), n)),
                  oracle))
        ok3 = false;

      Matrix b = smp.int_matrix(2, -9, 9);
      long m = smp.int_in(2, 40);
      if (!mat_eq(power_via_adjugate2(b, m), pow_binary(b, m))) ok2 = false;
    }
    out.push_back(aggregate("adjugate-power-3x3",
                            {{"trials", cfg.trials}}, ok3, "", cfg.seed));
    out.push_back(aggregate("adjugate-power-2x2",
                            {{"trials", cfg.trials}}, ok2,
                            "corrected orientation b_{n-1} B + (b_n - t b_{n-1}) I",
                            cfg.seed));
  }

  // closed 3-variable form vs the (1,2) entry of the companion power
  {
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < cfg.trials && ok; ++trial) {
      Rational x = smp.rational(), y = smp.rational(), z = smp.rational();
      if (x == y || x == z || y == z) continue;
      long n = smp.int_in(1, 30);
      Rational closed = hom3_closed(x, y, z, n - 1, Hom3Variant::distinct);
      Matrix an = pow_binary(companion3(x, y, z), n);
      if (closed != an(0, 1)) {
        ok = false;
        detail = "mismatch at trial " + std::to_string(trial);
      }
      std::vector<Rational> pt{x, y, z};
      if (hom3_closed(x, y, z, n, Hom3Variant::distinct) != hom_value(pt, n))
        ok = false;
    }
    out.push_back(aggregate("hom3-closed-vs-companion",
                            {{"trials", cfg.trials}}, ok, detail, cfg.seed));
  }

  // coincident-argument variants vs direct evaluation
  {
    bool ok = true;
    for (int trial = 0; trial < cfg.trials && ok; ++trial) {
      Rational x = smp.nonzero_rational(), z = smp.nonzero_rational();
      if (x == z) continue;
      long n = smp.int_in(0, 25);
      std::vector<Rational> xxz{x, x, z};
      if (hom3_closed(x, x, z, n, Hom3Variant::y_eq_x) != hom_value(xxz, n))
        ok = false;
      std::vector<Rational> xxx{x, x, x};
      if (hom3_closed(x, x, x, n, Hom3Variant::all_eq) != hom_value(xxx, n))
        ok = false;
    }
    out.push_back(aggregate("hom3-coincident-variants",
                            {{"trials", cfg.trials}}, ok, "", cfg.seed));
  }
}

void suite_corollaries(const SuiteConfig& cfg,
                       std::vector<IdentityReport>& out) {
  Sampler smp(cfg.seed);
  const long nmax = cfg.nmax > 0 ? cfg.nmax : 100;

  for (int trial = 0; trial < cfg.trials; ++trial) {
    Matrix b = smp.int_matrix(2, -9, 9);
    Rational theta = smp.rational();
    long n = smp.int_in(3, std::min<long>(nmax, 100));
    IdentityReport r = check_theta_matrix(b, theta, n);
    r.seed = cfg.seed;
    r.params["trial"] = trial;
    out.push_back(std::move(r));
  }

  for (const Rational& theta :
       {Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(5, 3)}) {
    IdentityReport r = check_theta_scalar(theta, std::min<long>(nmax, 100));
    r.seed = cfg.seed;
    out.push_back(std::move(r));
  }

  {
    IdentityReport r = check_cn_adjudication(200);
    r.seed = cfg.seed;
    out.push_back(std::move(r));
  }

  for (IdentityReport& r : check_binomial_sums(500, 200, 200, 100)) {
    r.seed = cfg.seed;
    out.push_back(std::move(r));
  }
}

void suite_commuting(const SuiteConfig& cfg, std::vector<IdentityReport>& out) {
  Sampler smp(cfg.seed);

  int produced = 0;
  int attempts = 0;
  while (produced < cfg.trials && attempts < cfg.trials * 20) {
    ++attempts;
    Matrix a = smp.int_matrix(3, -5, 5);
    Rational p = smp.nonzero_rational();
    long n = smp.int_in(0, 12);
    IdentityReport r = check_commuting_power(a, p, n);
    if (r.status == IdentityReport::Status::skipped_precondition) continue;
    r.seed = cfg.seed;
    r.params["trial"] = produced;
    out.push_back(std::move(r));
    ++produced;
  }

  auto push_admissible = [&](auto&& make) {
    int done = 0, tries = 0;
    while (done < cfg.trials && tries < cfg.trials * 50) {
      ++tries;
      IdentityReport r = make();
      if (r.status == IdentityReport::Status::skipped_precondition) continue;
      r.seed = cfg.seed;
      r.params["trial"] = done;
      out.push_back(std::move(r));
      ++done;
    }
  };

  push_admissible([&] {
    std::vector<Rational> pt{smp.rational(), smp.rational(), smp.rational()};
    return check_scalar_chain(ScalarChainVariant::general, pt,
                              smp.nonzero_rational(), smp.int_in(1, 10));
  });
  push_admissible([&] {
    std::vector<Rational> pt{smp.rational(), smp.rational()};
    return check_scalar_chain(ScalarChainVariant::y_to_x, pt,
                              smp.nonzero_rational(), smp.int_in(1, 10));
  });
  push_admissible([&] {
    std::vector<Rational> pt{smp.rational()};
    return check_scalar_chain(ScalarChainVariant::z_to_x, pt,
                              smp.nonzero_rational(), smp.int_in(1, 10));
  });
  push_admissible([&] {
    return check_scalar_chain(ScalarChainVariant::p_only, {},
                              smp.nonzero_rational(), smp.int_in(1, 10));
  });

  for (SpecialCase c : {SpecialCase::unipotent, SpecialCase::fibonacci,
                        SpecialCase::mersenne, SpecialCase::gh}) {
    push_admissible([&] {
      return check_weighted_sum(c, smp.nonzero_rational(), smp.int_in(1, 10),
                                smp.nonzero_rational(), smp.nonzero_rational());
    });
  }
}

void suite_bernstein(const SuiteConfig& cfg,
                     std::vector<IdentityReport>& out) {
  const long nmax = cfg.nmax > 0 ? cfg.nmax : 5000;

  {
    BernsteinState st = bernstein_f(nmax);
    IdentityReport rep;
    rep.id = "bernstein-zero-set";
    rep.params = {{"nmax", nmax}};
    nlohmann::json zeros = nlohmann::json::array();
    for (long z : st.zeros) zeros.push_back(z);
    rep.lhs = zeros.dump();
    rep.rhs = "[3,12]";
    bool ok = true;
    for (long z : st.zeros)
      if (z != 3 && z != 12) ok = false;
    if (nmax >= 12 && st.zeros.size() != 2) ok = false;
    rep.status = ok ? IdentityReport::Status::pass
                    : IdentityReport::Status::fail;
    rep.seed = cfg.seed;
    out.push_back(std::move(rep));
  }

  {
    IdentityReport r = bernstein_matrix_check(std::min<long>(nmax, 300));
    r.seed = cfg.seed;
    out.push_back(std::move(r));
  }

  {
    auto found = thue_search(cfg.thue_bound);
    const std::set<std::pair<long, long>> expected{
        {4, -3}, {-1, 1}, {1, 0}, {0, 1}, {1, 1}};
    IdentityReport rep;
    rep.id = "thue-box-search";
    rep.params = {{"bound", cfg.thue_bound}};
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [x, y] : found) pairs.push_back({x, y});
    rep.lhs = pairs.dump();
    rep.rhs = "[[-1,1],[0,1],[1,0],[1,1],[4,-3]]";
    bool ok = cfg.thue_bound >= 4 ? (found == expected)
                                  : std::includes(expected.begin(), expected.end(),
                                                  found.begin(), found.end());
    rep.status = ok ? IdentityReport::Status::pass
                    : IdentityReport::Status::fail;
    rep.seed = cfg.seed;
    out.push_back(std::move(rep));
  }

  {
    IdentityReport r = thue_link_check(nmax);
    r.seed = cfg.seed;
    out.push_back(std::move(r));
  }
}

}  // namespace

bool is_suite_name(const std::string& name) {
  static const char* names[] = {"all",         "theorem1", "matrixpowers",
                                "corollaries", "commuting", "bernstein"};
  return std::find_if(std::begin(names), std::end(names), [&](const char* n) {
           return name == n;
         }) != std::end(names);
}

std::vector<IdentityReport> run_suite(const std::string& name,
                                      const SuiteConfig& cfg) {
  if (!is_suite_name(name)) throw std::invalid_argument("unknown suite: " + name);
  std::vector<IdentityReport> out;
  bool all = name == "all";
  if (all || name == "theorem1") suite_theorem1(cfg, out);
  if (all || name == "matrixpowers") suite_matrixpowers(cfg, out);
  if (all || name == "corollaries") suite_corollaries(cfg, out);
  if (all || name == "commuting") suite_commuting(cfg, out);
  if (all || name == "bernstein") suite_bernstein(cfg, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const IdentityReport& a, const IdentityReport& b) {
                     if (a.id != b.id) return a.id < b.id;
                     return a.params.dump() < b.params.dump();
                   });
  return out;
}

std::vector<BenchRecord> run_bench(int k, long nmax, int reps,
                                   std::uint64_t seed,
                                   std::string* disagreement) {
  if (k < 2 || k > 8) throw std::domain_error("k must be in [2, 8]");
  if (nmax < k) throw std::domain_error("nmax must be >= k");
  if (reps < 1) throw std::domain_error("reps must be >= 1");

  using clock = std::chrono::steady_clock;
  Sampler smp(seed);
  std::vector<Matrix> cases;
  for (int r = 0; r < reps; ++r) cases.push_back(smp.int_matrix(k, -9, 9));

  auto naive = [&](const Matrix& a, long n, long& mults) {
    Matrix p = identity_like(a);
    for (long i = 0; i < n; ++i) {
      p = (p * a).eval();
      ++mults;
    }
    return p;
  };
  auto binary = [&](const Matrix& a, long n, long& mults) {
    Matrix acc = identity_like(a);
    Matrix base = a;
    while (n > 0) {
      if (n & 1) {
        acc = (acc * base).eval();
        ++mults;
      }
      n >>= 1;
      if (n > 0) {
        base = (base * base).eval();
        ++mults;
      }
    }
    return acc;
  };
  auto recurrence = [&](const Matrix& a, long n, long& mults) {
    PowerDecomposition d = power_decomposition(char_coeffs(a), n);
    Matrix sum = Matrix::Zero(a.rows(), a.cols());
    Matrix p = identity_like(a);
    for (std::size_t j = 0; j < d.b.size(); ++j) {
      if (j > 0) {
        p = (p * a).eval();
        ++mults;
      }
      sum += d.b[j] * p;
    }
    return sum;
  };

  struct Strategy {
    const char* name;
    std::function<Matrix(const Matrix&, long, long&)> fn;
  };
  std::vector<Strategy> strategies{
      {"naive", naive}, {"binary", binary}, {"recurrence", recurrence}};

  // correctness gate precedes any timing
  std::vector<std::vector<Matrix>> results(strategies.size());
  std::vector<BenchRecord> table;
  for (std::size_t s = 0; s < strategies.size(); ++s) {
    BenchRecord rec{strategies[s].name, k, nmax, 0.0, 0};
    auto start = clock::now();
    for (const Matrix& a : cases)
      results[s].push_back(strategies[s].fn(a, nmax, rec.matrix_mults));
    rec.millis =
        std::chrono::duration<double, std::milli>(clock::now() - start).count();
    table.push_back(std::move(rec));
  }
  for (std::size_t s = 1; s < strategies.size(); ++s)
    for (int r = 0; r < reps; ++r)
      if (!mat_eq(results[0][r], results[s][r])) {
        if (disagreement)
          *disagreement = std::string(strategies[s].name) +
                          " disagrees with naive on case " + std::to_string(r) +
                          ":\n  naive:      " + matrix_to_string(results[0][r]) +
                          "\n  " + strategies[s].name + ": " +
                          matrix_to_string(results[s][r]);
        return {};
      }
  return table;
}

}  // namespace matpow
