// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fbsynth/blend.hpp"

namespace fbsynth::selftest {

struct SelftestOptions {
  blend::SolverOptions solver{1e-10, 20000, 1.9};
  double poisson_max_error = 1e-4;  // max-norm gap to the direct solve
  std::uint64_t seed = 1;
  int cases = 20;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Embedded oracle checks: Poisson vs dense elimination, RLE round trip,
/// ellipse area, ring hollowness and stroke coverage.
std::vector<SuiteResult> run_selftest(const SelftestOptions& opts = {});

/// Direct solve of the same discrete system by Gaussian elimination with
/// partial pivoting; returns window-sized values (destination outside omega).
std::vector<double> dense_poisson_solve(const blend::PoissonProblem& problem, const GrayImage& dst);

}  // namespace fbsynth::selftest
