#pragma once

#include <cstdint>
#include <vector>

#include "regdec/report.hpp"

namespace regdec {

/// The sign/root-of-unity bicharacter on Z_2t x Z_2t over the smallest
/// GF(p^k) holding a primitive t-th root. Expects minimal with det 0.
ScenarioReport run_counterexample_zn(std::uint32_t p, std::uint32_t t);

/// Z_p^3 with the sign-times-carry cocycle, its commuting set T_0, the
/// quotient T / T_0, the Scheunert cocycle on it and the resulting twisted
/// group algebra. Stops at the first failed step, recording the witness.
ScenarioReport run_counterexample_quotient(std::uint32_t p);

/// Z_{q-1} x Z_{q1-1} with the sign cocycle, reduced by its radical.
/// Expects minimal with det != 0 and det^2 = |G|^|G|.
ScenarioReport run_positive_example(std::uint32_t p, std::uint32_t q, std::uint32_t q1);

struct ScanOptions {
  std::uint32_t max_order = 16;
  std::uint32_t p = 3;
  unsigned k = 2;
  std::uint64_t seed = 1;
};

/// Every abelian group of order <= max_order with the trivial, sign,
/// random carry and random Scheunert-times-carry cocycles over GF(p^k).
/// Output order and content depend only on the options.
std::vector<ScenarioReport> run_scan(const ScanOptions& opt);

inline constexpr std::uint32_t kScanMaxOrder = 256;

/// The small worked examples: Grassmann, the nonminimal Z_2 x Z_2 matrix
/// and its coarsening, Pauli gradings, the twisted tensor product, the
/// determinant comparison for Z_n x Z_n and the det D report.
std::vector<ScenarioReport> run_examples_suite();

}  // namespace regdec
