// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <Eigen/Dense>
#include <set>

#include "fbsynth/selftest.hpp"
#include "test_support.hpp"

using namespace fbsynth;

TEST_CASE("all embedded suites pass") {
  const auto results = selftest::run_selftest();
  std::set<std::string> names;
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
    names.insert(r.name);
  }
  CHECK(names == std::set<std::string>{"poisson_dense", "rle_roundtrip", "ellipse_area", "ring_hollow",
                                       "stroke_coverage"});
}

TEST_CASE("a starved solver fails the Poisson suite") {
  selftest::SelftestOptions opts;
  opts.solver.max_iterations = 1;
  opts.cases = 3;
  bool poisson_failed = false;
  for (const auto& r : selftest::run_selftest(opts))
    if (r.name == "poisson_dense") poisson_failed = !r.passed;
  CHECK(poisson_failed);
}

TEST_CASE("dense elimination agrees with Eigen") {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int w = 10, h = 9;
    GrayImage dst(w, h);
    for (float& v : dst.data()) v = float(rng.unit());
    blend::PoissonProblem p;
    p.window = {0, 0, w, h};
    p.omega = BinaryMask(w, h);
    for (int y = 1; y < h - 1; ++y)
      for (int x = 1; x < w - 1; ++x) p.omega.set(x, y, rng.bernoulli(0.6));
    p.omega.set(4, 4);
    p.divergence.resize(w * h);
    for (double& d : p.divergence) d = rng.uniform(-1, 1);

    std::vector<int> idx(w * h, -1);
    int n = 0;
    for (int i = 0; i < w * h; ++i)
      if (p.omega.bits()[i]) idx[i] = n++;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd b(n);
    for (int i = 0; i < w * h; ++i) {
      if (idx[i] < 0) continue;
      A(idx[i], idx[i]) = 4;
      b(idx[i]) = -p.divergence[i];
      for (int q : {i - 1, i + 1, i - w, i + w}) {
        if (idx[q] >= 0)
          A(idx[i], idx[q]) = -1;
        else
          b(idx[i]) += dst.data()[q];
      }
    }
    const Eigen::VectorXd f = A.fullPivLu().solve(b);
    const auto got = selftest::dense_poisson_solve(p, dst);
    for (int i = 0; i < w * h; ++i) {
      const double want = idx[i] >= 0 ? f(idx[i]) : double(dst.data()[i]);
      CHECK(got[i] == doctest::Approx(want).epsilon(1e-10));
    }
  }
}
