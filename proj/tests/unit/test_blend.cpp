// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "fbsynth/blend.hpp"
#include "fbsynth/error.hpp"
#include "test_support.hpp"

using namespace fbsynth;
using namespace fbsynth::blend;

namespace {

GrayImage random_image(int w, int h, Rng& rng) {
  GrayImage img(w, h);
  for (float& v : img.data()) v = static_cast<float>(rng.unit());
  return img;
}

// Random interior omega, random divergence, whole canvas as window.
PoissonProblem random_problem(int w, int h, Rng& rng) {
  PoissonProblem p;
  p.window = {0, 0, w, h};
  p.omega = BinaryMask(w, h);
  for (int y = 1; y < h - 1; ++y)
    for (int x = 1; x < w - 1; ++x) p.omega.set(x, y, rng.bernoulli(0.7));
  p.omega.set(w / 2, h / 2);
  p.divergence.resize(static_cast<std::size_t>(w) * h);
  for (double& d : p.divergence) d = rng.uniform(-0.5, 0.5);
  return p;
}

// Dense LU on the 5-point system restricted to omega.
std::vector<double> eigen_solve(const PoissonProblem& p, const GrayImage& dst) {
  const int w = p.window.w, h = p.window.h;
  std::vector<int> index(static_cast<std::size_t>(w) * h, -1);
  int n = 0;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (p.omega.at(x, y)) index[static_cast<std::size_t>(y) * w + x] = n++;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd b(n);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const int r = index[static_cast<std::size_t>(y) * w + x];
      if (r < 0) continue;
      A(r, r) = 4.0;
      b(r) = -p.divergence[static_cast<std::size_t>(y) * w + x];
      const int nb[4][2] = {{x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}};
      for (const auto& q : nb) {
        const int c = index[static_cast<std::size_t>(q[1]) * w + q[0]];
        if (c >= 0)
          A(r, c) -= 1.0;
        else
          b(r) += dst.at(p.window.x + q[0], p.window.y + q[1]);
      }
    }
  const Eigen::VectorXd f = A.partialPivLu().solve(b);
  std::vector<double> out(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * w + x;
      out[i] = index[i] >= 0 ? f(index[i]) : dst.at(p.window.x + x, p.window.y + y);
    }
  return out;
}

Insertion square_insertion(Pixel at, int size, float intensity, float alpha) {
  Insertion ins;
  ins.origin = at;
  ins.intensity = GrayImage(size, size, intensity);
  ins.alpha.assign(static_cast<std::size_t>(size) * size, alpha);
  ins.mask = BinaryMask(size, size, true);
  return ins;
}

}  // namespace

TEST_CASE("solver matches a dense LU solution") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const int w = static_cast<int>(rng.uniform_int(3, 16)), h = static_cast<int>(rng.uniform_int(3, 16));
    const GrayImage dst = random_image(w, h, rng);
    const PoissonProblem p = random_problem(w, h, rng);
    const auto sol = solve_poisson(p, dst, {1e-12, 50000, 1.9, false});
    const auto ref = eigen_solve(p, dst);
    double err = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) err = std::max(err, std::abs(sol.values[i] - ref[i]));
    CHECK(err < 1e-8);
  }
}

TEST_CASE("solver keeps the Dirichlet ring bit-exact") {
  Rng rng(7);
  const GrayImage dst = random_image(12, 10, rng);
  const PoissonProblem p = random_problem(12, 10, rng);
  std::vector<double> guess(120);
  for (double& g : guess) g = rng.uniform(-5, 5);
  const auto sol = solve_poisson(p, dst, {1e-9, 50000, 1.9, false}, std::span<const double>(guess));
  for (int y = 0; y < 10; ++y)
    for (int x = 0; x < 12; ++x)
      if (!p.omega.at(x, y)) CHECK(sol.values[static_cast<std::size_t>(y) * 12 + x] == double(dst.at(x, y)));
}

TEST_CASE("reported residual matches a recomputation") {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const GrayImage dst = random_image(14, 14, rng);
    const PoissonProblem p = random_problem(14, 14, rng);
    const auto sol = solve_poisson(p, dst, {1e-6, 50000, 1.9, false});
    CHECK(std::abs(poisson_residual(p, dst, sol.values) - sol.residual) <= 1e-12);
    CHECK(sol.residual <= 1e-6);
    CHECK(sol.residual_history.size() == std::size_t(sol.iterations) + 1);
    CHECK(sol.residual_history.back() == sol.residual);
  }
}

TEST_CASE("energy never increases across sweeps") {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const GrayImage dst = random_image(16, 12, rng);
    const PoissonProblem p = random_problem(16, 12, rng);
    for (double omega_relax : {1.0, 1.5, 1.9}) {
      const auto sol = solve_poisson(p, dst, {1e-10, 50000, omega_relax, true});
      REQUIRE(sol.energy_history.size() == sol.residual_history.size());
      for (std::size_t k = 1; k < sol.energy_history.size(); ++k)
        CHECK(sol.energy_history[k] <= sol.energy_history[k - 1] + 1e-12 * (1.0 + std::abs(sol.energy_history[k - 1])));
    }
  }
}

TEST_CASE("solver reports non-convergence") {
  Rng rng(10);
  const GrayImage dst = random_image(16, 16, rng);
  const PoissonProblem p = random_problem(16, 16, rng);
  try {
    solve_poisson(p, dst, {1e-14, 2, 1.9, false});
    FAIL("expected SolverError");
  } catch (const SolverError& e) {
    CHECK(e.code() == Errc::solver_diverged);
    CHECK(e.iterations() == 2);
    CHECK(e.residual() > 1e-14);
  }
}

TEST_CASE("solver validates the problem") {
  const GrayImage dst(6, 6, 0.5f);
  PoissonProblem p;
  p.window = {0, 0, 6, 6};
  p.omega = BinaryMask(6, 6);
  p.divergence.assign(36, 0.0);
  CHECK_THROWS_AS(solve_poisson(p, dst, {}), Error);  // empty omega
  p.omega.set(0, 3);
  CHECK_THROWS_AS(solve_poisson(p, dst, {}), Error);  // touches the window edge
  p.omega = BinaryMask(6, 6);
  p.omega.set(2, 2);
  p.window = {1, 1, 6, 6};
  CHECK_THROWS_AS(solve_poisson(p, dst, {}), Error);  // window outside canvas
  p.window = {0, 0, 6, 6};
  CHECK_THROWS_AS(solve_poisson(p, dst, {0.0, 10, 1.9, false}), Error);
}

TEST_CASE("gradient divergence is the 5-point Laplacian and the negative adjoint") {
  Rng rng(12);
  const int w = 9, h = 7;
  std::vector<double> u(w * h), v(w * h);
  for (double& x : u) x = rng.uniform(-1, 1);
  for (double& x : v) x = rng.uniform(-1, 1);
  const auto div = gradient_field(w, h, u).divergence();
  for (int y = 1; y < h - 1; ++y)
    for (int x = 1; x < w - 1; ++x) {
      const int i = y * w + x;
      CHECK(div[i] == doctest::Approx(u[i - 1] + u[i + 1] + u[i - w] + u[i + w] - 4 * u[i]).epsilon(1e-12));
    }
  const auto gu = gradient_field(w, h, u);
  const auto gv = gradient_field(w, h, v);
  const auto dv = gv.divergence();
  double lhs = 0, rhs = 0;
  for (int i = 0; i < w * h; ++i) {
    lhs += gu.vx[i] * gv.vx[i] + gu.vy[i] * gv.vy[i];
    rhs -= u[i] * dv[i];
  }
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("mixed_field keeps the stronger component per axis") {
  GuidanceField a{2, 1, {0.5, -0.1}, {-0.2, 0.0}}, b{2, 1, {-0.3, 0.4}, {0.7, 0.0}};
  const auto m = mixed_field(a, b);
  CHECK(m.vx == std::vector<double>{0.5, 0.4});
  CHECK(m.vy == std::vector<double>{0.7, 0.0});
}

TEST_CASE("direct compositing") {
  const GrayImage dst(8, 8, 0.2f);
  AlphaPatch patch(2, 2, {3, 4});
  patch.intensity = {1.0f, 1.0f, 0.0f, 0.5f};
  patch.alpha = {0.5f, 1.0f, 0.0f, 0.25f};
  const GrayImage out = composite_direct(dst, patch);
  CHECK(out.at(3, 4) == doctest::Approx(0.6f));
  CHECK(out.at(4, 4) == 1.0f);
  CHECK(out.at(3, 5) == 0.2f);
  CHECK(out.at(4, 5) == doctest::Approx(0.25f * 0.5f + 0.75f * 0.2f));
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x)
      if (!(x >= 3 && x <= 4 && y >= 4 && y <= 5)) CHECK(out.at(x, y) == 0.2f);

  patch.origin = {7, 7};
  CHECK_THROWS_AS(composite_direct(dst, patch), Error);
}

TEST_CASE("Poisson insertion of the destination itself is the identity") {
  Rng rng(13);
  const GrayImage dst = random_image(24, 24, rng);
  Insertion ins;
  ins.origin = {5, 6};
  ins.intensity = GrayImage(10, 8);
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 10; ++x) ins.intensity.at(x, y) = dst.at(5 + x, 6 + y);
  ins.alpha.assign(80, 1.0f);
  ins.mask = BinaryMask(10, 8, true);
  for (BlendMode mode : {BlendMode::poisson_normal, BlendMode::poisson_seamless}) {
    GrayImage canvas = dst;
    const auto outcome = blend_into(canvas, ins, mode, {});
    CHECK(outcome.applied == mode);
    for (int y = 0; y < 24; ++y)
      for (int x = 0; x < 24; ++x) CHECK(std::abs(canvas.at(x, y) - dst.at(x, y)) < 1e-5);
  }
}

TEST_CASE("Poisson blending only touches the mask and stays in range") {
  Rng rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const GrayImage dst = random_image(40, 40, rng);
    Insertion ins = square_insertion({10, 12}, 12, static_cast<float>(rng.unit()), 1.0f);
    for (int y = 0; y < 12; ++y)
      for (int x = 0; x < 12; ++x) {
        ins.mask.set(x, y, rng.bernoulli(0.8));
        ins.intensity.at(x, y) = static_cast<float>(rng.unit());
      }
    ins.mask.set(6, 6);
    for (BlendMode mode : {BlendMode::poisson_normal, BlendMode::poisson_seamless}) {
      GrayImage canvas = dst;
      const auto outcome = blend_into(canvas, ins, mode, {1e-8, 20000, 1.9, false});
      CHECK(outcome.applied == mode);
      CHECK(outcome.residual <= 1e-8);
      for (int y = 0; y < 40; ++y)
        for (int x = 0; x < 40; ++x) {
          const bool in_mask = x >= 10 && x < 22 && y >= 12 && y < 24 && ins.mask.at(x - 10, y - 12);
          if (!in_mask) CHECK(canvas.at(x, y) == dst.at(x, y));
          CHECK(canvas.at(x, y) >= 0.0f);
          CHECK(canvas.at(x, y) <= 1.0f);
        }
    }
  }
}

TEST_CASE("Poisson blending matches the dense oracle after clamping") {
  Rng rng(15);
  const GrayImage dst = random_image(20, 20, rng);
  Insertion ins = square_insertion({6, 5}, 7, 0.9f, 0.7f);
  for (int y = 0; y < 7; ++y)
    for (int x = 0; x < 7; ++x) ins.intensity.at(x, y) = static_cast<float>(rng.unit());
  const auto problem = make_problem(dst, ins, BlendMode::poisson_normal);
  CHECK(problem.window == BBox{5, 4, 9, 9});
  const auto ref = eigen_solve(problem, dst);
  const GrayImage out = blend_poisson_normal(dst, ins, {1e-12, 50000, 1.9, false});
  for (int y = 0; y < 9; ++y)
    for (int x = 0; x < 9; ++x)
      CHECK(out.at(5 + x, 4 + y) ==
            doctest::Approx(std::clamp(ref[static_cast<std::size_t>(y) * 9 + x], 0.0, 1.0)).epsilon(1e-5));
}

TEST_CASE("Poisson modes fall back to direct at the canvas border") {
  const GrayImage dst(16, 16, 0.3f);
  const Insertion ins = square_insertion({0, 4}, 5, 0.9f, 0.5f);
  for (BlendMode mode : {BlendMode::poisson_normal, BlendMode::poisson_seamless}) {
    GrayImage canvas = dst;
    const auto outcome = blend_into(canvas, ins, mode, {});
    CHECK(outcome.applied == BlendMode::direct);
    GrayImage direct = dst;
    composite_direct_into(direct, ins);
    CHECK(canvas == direct);
  }
  CHECK_THROWS_AS(make_problem(dst, ins, BlendMode::poisson_normal), Error);
}

TEST_CASE("from_patch and mask bounds") {
  AlphaPatch patch(4, 3, {10, 20});
  patch.alpha[patch.index(1, 1)] = 0.5f;
  patch.alpha[patch.index(2, 2)] = 1.0f;
  const Insertion ins = Insertion::from_patch(patch);
  CHECK(ins.bounds() == BBox{10, 20, 4, 3});
  CHECK(ins.mask_bounds() == BBox{11, 21, 2, 2});
  CHECK(ins.mask.count() == 2);
}
