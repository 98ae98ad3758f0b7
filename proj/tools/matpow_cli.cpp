// Command-line front end: exact matrix powers from characteristic data,
// k-step Fibonacci numbers, identity verification suites, the Bernstein/Thue
// exploration, and a benchmark of power-computation strategies.

#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "matpow/identities.hpp"
#include "matpow/matrix.hpp"
#include "matpow/suites.hpp"
#include "matpow/symfun.hpp"

namespace {

using namespace matpow;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

Matrix load_matrix(const std::string& file, const std::string& inline_text) {
  if (!inline_text.empty()) return matrix_from_inline(inline_text);
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open matrix file: " + file);
  nlohmann::json j;
  in >> j;
  return matrix_from_json(j);
}

int cmd_power(const std::string& file, const std::string& inline_text, long n,
              const std::string& entry, bool json_out) {
  Matrix a = load_matrix(file, inline_text);
  const long k = a.rows();

  Matrix result;
  nlohmann::json out;
  out["k"] = k;
  out["n"] = n;
  if (n >= k) {
    PowerDecomposition d = power_decomposition(char_coeffs(a), n);
    result = apply_decomposition(a, d);
    out["method"] = "decomposition";
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& b : d.b) coeffs.push_back(to_string(b));
    out["coefficients"] = coeffs;
    if (!json_out) {
      std::cout << "decomposition coefficients (b_0..b_" << k - 1 << "):";
      for (const auto& b : d.b) std::cout << " " << to_string(b);
      std::cout << "\n";
    }
  } else {
    result = pow_binary(a, n);
    out["method"] = "binary-fallback";
    if (!json_out)
      std::cout << "n < k: no closed-form decomposition, used binary "
                   "exponentiation\n";
  }

  if (!entry.empty()) {
    auto comma = entry.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--entry wants i,j");
    long i = std::stol(entry.substr(0, comma));
    long j = std::stol(entry.substr(comma + 1));
    if (i < 1 || i > k || j < 1 || j > k)
      throw CLI::ValidationError("--entry out of range");
    out["entry"] = {{"i", i}, {"j", j},
                    {"value", to_string(result(i - 1, j - 1))}};
    if (json_out)
      std::cout << out.dump() << "\n";
    else
      std::cout << "entry (" << i << "," << j
                << ") = " << to_string(result(i - 1, j - 1)) << "\n";
    return kExitOk;
  }

  out["matrix"] = matrix_to_json(result);
  if (json_out)
    std::cout << out.dump() << "\n";
  else
    std::cout << matrix_to_string(result) << "\n";
  return kExitOk;
}

int cmd_fib(int k, long n, bool check, bool json_out) {
  auto seq = k_step_fibonacci(k, n);
  bool check_ok = true;
  if (check)
    for (long m = 0; m <= n && check_ok; ++m)
      check_ok = (seq[m] == k_step_fibonacci_formula(k, m));

  if (json_out) {
    nlohmann::json out;
    out["k"] = k;
    out["n"] = n;
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : seq) vals.push_back(v.get_str());
    out["values"] = vals;
    if (check) out["formula_check"] = check_ok ? "pass" : "fail";
    std::cout << out.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < seq.size(); ++i)
      std::cout << (i ? " " : "") << seq[i].get_str();
    std::cout << "\n";
    if (check)
      std::cout << "multinomial formula check: " << (check_ok ? "pass" : "FAIL")
                << "\n";
  }
  return check_ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const std::string& suite, const SuiteConfig& cfg,
               bool json_out) {
  auto reports = run_suite(suite, cfg);
  std::size_t failures = 0, skipped = 0;
  for (const auto& r : reports) {
    if (r.failed()) ++failures;
    if (r.status == IdentityReport::Status::skipped_precondition) ++skipped;
    if (json_out) {
      std::cout << r.to_json().dump() << "\n";
    } else {
      std::cout << std::left << std::setw(36) << r.id << " "
                << std::setw(8) << IdentityReport::status_name(r.status) << " "
                << r.params.dump();
      if (!r.note.empty()) std::cout << "  # " << r.note;
      std::cout << "\n";
    }
  }
  if (!json_out)
    std::cout << reports.size() << " checks, " << failures << " failed, "
              << skipped << " skipped\n";
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_bench(int k, long nmax, int reps, std::uint64_t seed, bool json_out) {
  std::string disagreement;
  auto table = run_bench(k, nmax, reps, seed, &disagreement);
  if (table.empty()) {
    std::cerr << "strategy disagreement, refusing to report timings\n"
              << disagreement << "\n";
    return kExitCheckFailed;
  }
  if (json_out) {
    for (const auto& rec : table) {
      nlohmann::json j{{"strategy", rec.strategy}, {"k", rec.k},
                       {"n", rec.n},               {"millis", rec.millis},
                       {"matrix_mults", rec.matrix_mults}};
      std::cout << j.dump() << "\n";
    }
  } else {
    std::cout << std::left << std::setw(12) << "strategy" << std::right
              << std::setw(4) << "k" << std::setw(7) << "n" << std::setw(12)
              << "time (ms)" << std::setw(12) << "mat mults" << "\n";
    for (const auto& rec : table)
      std::cout << std::left << std::setw(12) << rec.strategy << std::right
                << std::setw(4) << rec.k << std::setw(7) << rec.n
                << std::setw(12) << std::fixed << std::setprecision(2)
                << rec.millis << std::setw(12) << rec.matrix_mults << "\n";
    std::cout << "all strategies agreed exactly on " << reps << " cases\n";
  }
  return kExitOk;
}

int cmd_bernstein(long nmax, long thue_bound, bool json_out) {
  BernsteinState st = bernstein_f(nmax);
  auto solutions = thue_search(thue_bound);
  IdentityReport link = thue_link_check(nmax);

  if (json_out) {
    nlohmann::json out;
    out["nmax"] = nmax;
    out["zeros"] = st.zeros;
    nlohmann::json sols = nlohmann::json::array();
    for (const auto& [x, y] : solutions) sols.push_back({x, y});
    out["thue_bound"] = thue_bound;
    out["thue_solutions"] = sols;
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [x, y] : st.thue_pairs) pairs.push_back({x, y});
    out["zero_linked_pairs"] = pairs;
    out["link_check"] = IdentityReport::status_name(link.status);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "zeros of f in [0, " << nmax << "]:";
    for (long z : st.zeros) std::cout << " " << z;
    std::cout << "\nsolutions of x^3 + y^3 - x y^2 = 1 with |x|,|y| <= "
              << thue_bound << ":";
    for (const auto& [x, y] : solutions)
      std::cout << " (" << x << "," << y << ")";
    std::cout << "\nzero -> solution linkage:\n";
    for (long n0 : st.zeros) {
      long n = n0 + 2;
      if (n - 1 > nmax) continue;
      std::cout << "  f(" << n0 << ") = 0  ->  pair (f(" << n - 1 << "), f("
                << n - 3 << ")) = (" << st.f[n - 1].get_str() << ", "
                << st.f[n - 3].get_str() << "), det relation (-1)^" << n
                << "\n";
    }
    std::cout << "determinant/Thue link check: "
              << IdentityReport::status_name(link.status) << "\n";
  }
  return link.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact matrix powers from characteristic-polynomial data, "
               "with identity verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_out = false;
  app.add_flag("--json", json_out, "line-delimited JSON output");

  // power
  auto* power = app.add_subcommand("power", "compute A^n in closed form");
  std::string matrix_file, inline_text, entry;
  long n = 0;
  power->add_option("--matrix", matrix_file, "matrix JSON file");
  power->add_option("--inline", inline_text, "inline matrix, e.g. \"1,1;1,0\"");
  power->add_option("-n,--power", n, "exponent (>= 0)")->required();
  power->add_option("--entry", entry, "print one entry i,j (1-based)");

  // fib
  auto* fib = app.add_subcommand("fib", "k-step Fibonacci numbers");
  int fib_k = 2;
  long fib_n = 10;
  bool fib_check = false;
  fib->add_option("-k", fib_k, "recurrence order")->required();
  fib->add_option("-n,--power", fib_n, "last index to print")->required();
  fib->add_flag("--check", fib_check, "recompute via the multinomial formula");

  // verify
  auto* verify = app.add_subcommand("verify", "run identity suites");
  std::string suite = "all";
  SuiteConfig cfg;
  verify->add_option("--suite", suite,
                     "all|theorem1|matrixpowers|corollaries|commuting|bernstein");
  verify->add_option("--seed", cfg.seed, "RNG seed (default 0xC0FFEE)");
  verify->add_option("--trials", cfg.trials, "samples per randomized check");
  verify->add_option("--nmax", cfg.nmax, "range override for ranged checks");
  verify->add_option("--thue-bound", cfg.thue_bound, "Thue search box bound");

  // bench
  auto* bench = app.add_subcommand("bench", "compare power strategies");
  int bench_k = 3;
  long bench_nmax = 200;
  int reps = 3;
  std::uint64_t bench_seed = kDefaultSeed;
  bench->add_option("-k", bench_k, "dimension (2..8)");
  bench->add_option("--nmax", bench_nmax, "exponent");
  bench->add_option("--reps", reps, "matrices per strategy");
  bench->add_option("--seed", bench_seed, "RNG seed");

  // bernstein
  auto* bern = app.add_subcommand("bernstein", "zeros of f and the Thue link");
  long bern_nmax = 100;
  long thue_bound = 50;
  bern->add_option("--nmax", bern_nmax, "scan f(0..nmax)");
  bern->add_option("--thue-bound", thue_bound, "solution box bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (power->parsed()) {
      if (matrix_file.empty() == inline_text.empty()) {
        std::cerr << "exactly one of --matrix/--inline is required\n";
        return kExitUsage;
      }
      return cmd_power(matrix_file, inline_text, n, entry, json_out);
    }
    if (fib->parsed()) return cmd_fib(fib_k, fib_n, fib_check, json_out);
    if (verify->parsed()) {
      if (!is_suite_name(suite)) {
        std::cerr << "unknown suite: " << suite << "\n";
        return kExitUsage;
      }
      return cmd_verify(suite, cfg, json_out);
    }
    if (bench->parsed())
      return cmd_bench(bench_k, bench_nmax, reps, bench_seed, json_out);
    if (bern->parsed()) return cmd_bernstein(bern_nmax, thue_bound, json_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
