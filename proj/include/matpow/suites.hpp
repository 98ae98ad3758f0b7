#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matpow/random.hpp"
#include "matpow/report.hpp"

namespace matpow {

// Knobs shared by every randomized verification suite. Identical
// (config, seed) runs produce identical reports.
struct SuiteConfig {
  std::uint64_t seed = kDefaultSeed;
  int trials = 20;
  long nmax = 0;  // 0 = per-suite default
  long thue_bound = 50;
};

// Suite names accepted by the verify front end:
// all, theorem1, matrixpowers, corollaries, commuting, bernstein.
bool is_suite_name(const std::string& name);

// Runs one suite (or all of them) and returns the reports sorted by
// (id, params) for deterministic output.
std::vector<IdentityReport> run_suite(const std::string& name,
                                      const SuiteConfig& cfg);

// ---------------------------------------------------------------------------
// Benchmark of power-computation strategies on random integer matrices.

struct BenchRecord {
  std::string strategy;
  int k = 0;
  long n = 0;
  double millis = 0.0;   // total wall time over all reps
  long matrix_mults = 0; // matrix-matrix multiplications performed
};

// Computes A^nmax for `reps` seeded random matrices with every strategy
// (naive repeated multiplication, binary exponentiation, characteristic
// recurrence + reconstruction). Results must agree exactly before any
// timing is reported; on disagreement returns an empty table and fills
// `disagreement`.
std::vector<BenchRecord> run_bench(int k, long nmax, int reps,
                                   std::uint64_t seed,
                                   std::string* disagreement);

}  // namespace matpow
