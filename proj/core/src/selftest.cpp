// SPDX-License-Identifier: Apache-2.0
#include "fbsynth/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fbsynth/coco.hpp"
#include "fbsynth/random.hpp"
#include "fbsynth/raster.hpp"

namespace fbsynth::selftest {
namespace {

SuiteResult poisson_suite(const SelftestOptions& opts) {
  Rng rng = SeedStream(opts.seed).child(1).engine();
  double worst = 0.0;
  for (int c = 0; c < opts.cases; ++c) {
    const int w = static_cast<int>(rng.uniform_int(3, 20)), h = static_cast<int>(rng.uniform_int(3, 20));
    GrayImage dst(w, h);
    for (float& v : dst.data()) v = static_cast<float>(rng.unit());
    blend::PoissonProblem p;
    p.window = {0, 0, w, h};
    p.omega = BinaryMask(w, h);
    for (int y = 1; y < h - 1; ++y)
      for (int x = 1; x < w - 1; ++x)
        if (rng.bernoulli(0.8)) p.omega.set(x, y);
    p.omega.set(w / 2, h / 2);
    p.divergence.resize(static_cast<std::size_t>(w) * h);
    for (double& d : p.divergence) d = rng.uniform(-0.5, 0.5);

    std::vector<double> iterative;
    try {
      iterative = blend::solve_poisson(p, dst, opts.solver).values;
    } catch (const Error& e) {
      return {"poisson_dense", false, e.what()};
    }
    const auto direct = dense_poisson_solve(p, dst);
    for (std::size_t i = 0; i < direct.size(); ++i) worst = std::max(worst, std::abs(direct[i] - iterative[i]));
  }
  std::ostringstream d;
  d << opts.cases << " systems, max |iterative - direct| = " << worst;
  return {"poisson_dense", worst <= opts.poisson_max_error, d.str()};
}

SuiteResult rle_suite(const SelftestOptions& opts) {
  Rng rng = SeedStream(opts.seed).child(2).engine();
  if (coco::rle_encode(BinaryMask(3, 3)).counts != std::vector<std::uint32_t>{9})
    return {"rle_roundtrip", false, "3x3 zero mask"};
  if (coco::rle_encode(BinaryMask(2, 2, true)).counts != std::vector<std::uint32_t>{0, 4})
    return {"rle_roundtrip", false, "2x2 full mask"};
  const int n = opts.cases * 10;
  for (int c = 0; c < n; ++c) {
    BinaryMask m(static_cast<int>(rng.uniform_int(1, 32)), static_cast<int>(rng.uniform_int(1, 32)));
    const double density = rng.unit();
    for (auto& b : m.bits()) b = rng.bernoulli(density) ? 1 : 0;
    if (coco::rle_decode(coco::rle_encode(m)) != m) return {"rle_roundtrip", false, "mismatch in case " + std::to_string(c)};
  }
  return {"rle_roundtrip", true, std::to_string(n) + " random masks plus edge cases"};
}

SuiteResult ellipse_suite(const SelftestOptions& opts) {
  Rng rng = SeedStream(opts.seed).child(3).engine();
  double worst = 0.0;
  for (int c = 0; c < opts.cases; ++c) {
    const double a = rng.uniform(8, 40), b = rng.uniform(8, 40);
    const auto patch = raster::fill_ellipse({60.3, 60.7}, a, b, rng.uniform(0, std::numbers::pi), {}, {128, 128});
    const double area = std::numbers::pi * a * b;
    worst = std::max(worst, std::abs(static_cast<double>(patch.footprint_count()) - area) / area);
  }
  std::ostringstream d;
  d << "max relative area error " << worst;
  return {"ellipse_area", worst <= 0.05, d.str()};
}

SuiteResult ring_suite(const SelftestOptions& opts) {
  Rng rng = SeedStream(opts.seed).child(4).engine();
  for (int c = 0; c < opts.cases; ++c) {
    const double a = rng.uniform(8, 40), b = rng.uniform(8, 40), t = rng.uniform(1, 4);
    const Point center{64 + rng.unit(), 64 + rng.unit()};
    const auto patch = raster::stroke_ellipse(center, a, b, rng.uniform(0, std::numbers::pi), {t, 1.0f, 1.0f},
                                              {128, 128});
    const int cx = static_cast<int>(std::lround(center.x)), cy = static_cast<int>(std::lround(center.y));
    if (patch.bounds().contains(cx, cy) && patch.in_footprint(cx - patch.origin.x, cy - patch.origin.y))
      return {"ring_hollow", false, "center pixel covered in case " + std::to_string(c)};
  }
  return {"ring_hollow", true, std::to_string(opts.cases) + " rings"};
}

SuiteResult stroke_suite(const SelftestOptions& opts) {
  Rng rng = SeedStream(opts.seed).child(5).engine();
  for (int c = 0; c < opts.cases; ++c) {
    raster::CubicSegment seg;
    for (auto& p : seg) p = {rng.uniform(4, 60), rng.uniform(4, 60)};
    const raster::BezierChain chain({seg});
    const auto patch = raster::stroke_chain(chain, {rng.uniform(0.5, 4), 1.0f, 1.0f}, {64, 64});
    for (const Point& p : chain.flatten()) {
      const int x = static_cast<int>(std::lround(p.x)) - patch.origin.x;
      const int y = static_cast<int>(std::lround(p.y)) - patch.origin.y;
      if (x < 0 || y < 0 || x >= patch.width || y >= patch.height || !patch.in_footprint(x, y))
        return {"stroke_coverage", false, "uncovered curve point in case " + std::to_string(c)};
    }
  }
  return {"stroke_coverage", true, std::to_string(opts.cases) + " curves"};
}

}  // namespace

std::vector<double> dense_poisson_solve(const blend::PoissonProblem& problem, const GrayImage& dst) {
  const BBox& win = problem.window;
  const int w = win.w;
  std::vector<double> values(static_cast<std::size_t>(w) * win.h);
  for (int y = 0; y < win.h; ++y)
    for (int x = 0; x < w; ++x) values[static_cast<std::size_t>(y) * w + x] = dst.at(win.x + x, win.y + y);

  std::vector<int> unknown(values.size(), -1);
  std::vector<std::size_t> cells;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (problem.omega.bits()[i]) {
      unknown[i] = static_cast<int>(cells.size());
      cells.push_back(i);
    }
  const std::size_t n = cells.size();
  std::vector<double> a(n * (n + 1), 0.0);  // augmented [A | b]
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t i = cells[r];
    a[r * (n + 1) + r] = 4.0;
    double b = -problem.divergence[i];
    for (std::size_t q : {i - 1, i + 1, i - w, i + w}) {
      if (unknown[q] >= 0)
        a[r * (n + 1) + static_cast<std::size_t>(unknown[q])] -= 1.0;
      else
        b += values[q];
    }
    a[r * (n + 1) + n] = b;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(a[r * (n + 1) + k]) > std::abs(a[piv * (n + 1) + k])) piv = r;
    if (piv != k)
      for (std::size_t c = 0; c <= n; ++c) std::swap(a[k * (n + 1) + c], a[piv * (n + 1) + c]);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = a[r * (n + 1) + k] / a[k * (n + 1) + k];
      if (f == 0.0) continue;
      for (std::size_t c = k; c <= n; ++c) a[r * (n + 1) + c] -= f * a[k * (n + 1) + c];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    double s = a[k * (n + 1) + n];
    for (std::size_t c = k + 1; c < n; ++c) s -= a[k * (n + 1) + c] * values[cells[c]];
    values[cells[k]] = s / a[k * (n + 1) + k];
  }
  return values;
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts) {
  return {poisson_suite(opts), rle_suite(opts), ellipse_suite(opts), ring_suite(opts), stroke_suite(opts)};
}

}  // namespace fbsynth::selftest
