// SPDX-License-Identifier: Apache-2.0
#include "fbsynth/blend.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "log.hpp"

namespace fbsynth::blend {
namespace {

bool inside_canvas(const BBox& b, Size canvas) {
  return b.x >= 0 && b.y >= 0 && b.right() <= canvas.width && b.bottom() <= canvas.height;
}

struct Stencil {
  int width = 0;
  std::vector<std::size_t> red;
  std::vector<std::size_t> black;
};

Stencil make_stencil(const PoissonProblem& p) {
  const BinaryMask& om = p.omega;
  if (om.width() != p.window.w || om.height() != p.window.h)
    throw Error(Errc::domain, "omega does not match the window");
  if (p.divergence.size() != om.size().area()) throw Error(Errc::domain, "divergence does not match the window");
  Stencil s;
  s.width = om.width();
  for (int y = 0; y < om.height(); ++y)
    for (int x = 0; x < om.width(); ++x) {
      if (!om.at(x, y)) continue;
      if (x == 0 || y == 0 || x == om.width() - 1 || y == om.height() - 1)
        throw Error(Errc::domain, "omega touches the window edge; no Dirichlet ring");
      const std::size_t idx = static_cast<std::size_t>(y) * om.width() + x;
      ((x + y) % 2 == 0 ? s.red : s.black).push_back(idx);
    }
  if (s.red.empty() && s.black.empty()) throw Error(Errc::domain, "omega is empty");
  return s;
}

std::vector<double> window_values(const GrayImage& dst, const BBox& window) {
  std::vector<double> v(static_cast<std::size_t>(window.w) * window.h);
  for (int y = 0; y < window.h; ++y)
    for (int x = 0; x < window.w; ++x)
      v[static_cast<std::size_t>(y) * window.w + x] = dst.at(window.x + x, window.y + y);
  return v;
}

double neighbor_sum(const std::vector<double>& f, std::size_t idx, int w) {
  return f[idx - 1] + f[idx + 1] + f[idx - w] + f[idx + w];
}

double residual_norm(const Stencil& s, const std::vector<double>& f, const std::vector<double>& div) {
  double sum = 0.0;
  for (const auto* list : {&s.red, &s.black})
    for (std::size_t idx : *list) {
      const double r = neighbor_sum(f, idx, s.width) - 4.0 * f[idx] - div[idx];
      sum += r * r;
    }
  return std::sqrt(sum);
}

double rhs_norm(const Stencil& s, const BinaryMask& omega, const std::vector<double>& f,
                const std::vector<double>& div) {
  const auto bits = omega.bits();
  double sum = 0.0;
  for (const auto* list : {&s.red, &s.black})
    for (std::size_t idx : *list) {
      double b = -div[idx];
      for (std::size_t q : {idx - 1, idx + 1, idx - s.width, idx + s.width})
        if (!bits[q]) b += f[q];
      sum += b * b;
    }
  return std::sqrt(sum);
}

// 1/2 f'Af - b'f over the unknowns; non-increasing under SOR with relaxation in (0,2).
double energy(const Stencil& s, const BinaryMask& omega, const std::vector<double>& f,
              const std::vector<double>& div) {
  const auto bits = omega.bits();
  double e = 0.0;
  for (const auto* list : {&s.red, &s.black})
    for (std::size_t idx : *list) {
      double af = 4.0 * f[idx], b = -div[idx];
      for (std::size_t q : {idx - 1, idx + 1, idx - s.width, idx + s.width}) {
        if (bits[q])
          af -= f[q];
        else
          b += f[q];
      }
      e += 0.5 * f[idx] * af - b * f[idx];
    }
  return e;
}

}  // namespace

Insertion Insertion::from_patch(const AlphaPatch& patch) {
  Insertion ins;
  ins.origin = patch.origin;
  ins.intensity = GrayImage(patch.width, patch.height, patch.intensity);
  ins.alpha = patch.alpha;
  ins.mask = BinaryMask(patch.width, patch.height);
  for (int y = 0; y < patch.height; ++y)
    for (int x = 0; x < patch.width; ++x)
      if (patch.in_footprint(x, y)) ins.mask.set(x, y);
  return ins;
}

BBox Insertion::mask_bounds() const {
  BBox b = mask.bounds();
  b.x += origin.x;
  b.y += origin.y;
  return b;
}

GrayImage composite_direct(const GrayImage& dst, const AlphaPatch& patch) {
  if (!inside_canvas(patch.bounds(), dst.size())) throw Error(Errc::domain, "patch extends outside the canvas");
  GrayImage out = dst;
  composite_direct_into(out, Insertion::from_patch(patch));
  return out;
}

void composite_direct_into(GrayImage& canvas, const Insertion& ins) {
  const BBox mb = ins.mask_bounds();
  if (mb.empty()) throw Error(Errc::empty_footprint, "insertion mask is empty");
  if (!inside_canvas(mb, canvas.size())) throw Error(Errc::domain, "insertion extends outside the canvas");
  for (int y = 0; y < ins.mask.height(); ++y)
    for (int x = 0; x < ins.mask.width(); ++x) {
      if (!ins.mask.at(x, y)) continue;
      const float a = ins.alpha[static_cast<std::size_t>(y) * ins.mask.width() + x];
      float& d = canvas.at(ins.origin.x + x, ins.origin.y + y);
      d = a * ins.intensity.at(x, y) + (1.0f - a) * d;
    }
}

SolverError::SolverError(double residual, int iterations)
    : Error(Errc::solver_diverged, "Poisson solver did not converge after " + std::to_string(iterations) +
                                       " iterations (residual " + std::to_string(residual) + ")"),
      residual_(residual),
      iterations_(iterations) {}

std::vector<double> GuidanceField::divergence() const {
  std::vector<double> div(vx.size(), 0.0);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * width + x;
      double d = vx[i] + vy[i];
      if (x > 0) d -= vx[i - 1];
      if (y > 0) d -= vy[i - width];
      div[i] = d;
    }
  return div;
}

GuidanceField gradient_field(int width, int height, std::span<const double> values) {
  GuidanceField g{width, height, std::vector<double>(values.size(), 0.0), std::vector<double>(values.size(), 0.0)};
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * width + x;
      if (x + 1 < width) g.vx[i] = values[i + 1] - values[i];
      if (y + 1 < height) g.vy[i] = values[i + width] - values[i];
    }
  return g;
}

GuidanceField mixed_field(const GuidanceField& src, const GuidanceField& dst) {
  GuidanceField out = src;
  for (std::size_t i = 0; i < out.vx.size(); ++i) {
    if (std::abs(dst.vx[i]) > std::abs(src.vx[i])) out.vx[i] = dst.vx[i];
    if (std::abs(dst.vy[i]) > std::abs(src.vy[i])) out.vy[i] = dst.vy[i];
  }
  return out;
}

PoissonSolution solve_poisson(const PoissonProblem& problem, const GrayImage& dst, const SolverOptions& opts,
                              std::optional<std::span<const double>> initial) {
  if (!(opts.tolerance > 0.0)) throw Error(Errc::domain, "solver tolerance must be positive");
  if (!inside_canvas(problem.window, dst.size())) throw Error(Errc::domain, "Poisson window outside the canvas");
  const Stencil s = make_stencil(problem);

  PoissonSolution sol;
  sol.window = problem.window;
  sol.values = window_values(dst, problem.window);
  if (initial) {
    if (initial->size() != sol.values.size()) throw Error(Errc::domain, "initial guess does not match the window");
    for (const auto* list : {&s.red, &s.black})
      for (std::size_t idx : *list) sol.values[idx] = (*initial)[idx];
  }

  const auto& div = problem.divergence;
  const double bnorm = rhs_norm(s, problem.omega, sol.values, div);
  const double scale = bnorm > 0.0 ? 1.0 / bnorm : 1.0;
  const double w = opts.relaxation;

  sol.residual = residual_norm(s, sol.values, div) * scale;
  sol.residual_history.push_back(sol.residual);
  if (opts.record_energy) sol.energy_history.push_back(energy(s, problem.omega, sol.values, div));

  while (sol.residual > opts.tolerance) {
    if (sol.iterations >= opts.max_iterations) throw SolverError(sol.residual, sol.iterations);
    for (const auto* list : {&s.red, &s.black})
      for (std::size_t idx : *list) {
        const double gs = (neighbor_sum(sol.values, idx, s.width) - div[idx]) * 0.25;
        sol.values[idx] += w * (gs - sol.values[idx]);
      }
    ++sol.iterations;
    sol.residual = residual_norm(s, sol.values, div) * scale;
    sol.residual_history.push_back(sol.residual);
    if (opts.record_energy) sol.energy_history.push_back(energy(s, problem.omega, sol.values, div));
  }
  return sol;
}

double poisson_residual(const PoissonProblem& problem, const GrayImage& dst, std::span<const double> values) {
  const Stencil s = make_stencil(problem);
  std::vector<double> f = window_values(dst, problem.window);
  for (const auto* list : {&s.red, &s.black})
    for (std::size_t idx : *list) f[idx] = values[idx];
  const double bnorm = rhs_norm(s, problem.omega, f, problem.divergence);
  return residual_norm(s, f, problem.divergence) * (bnorm > 0.0 ? 1.0 / bnorm : 1.0);
}

std::vector<double> guidance_source(const GrayImage& dst, const Insertion& ins, const BBox& window) {
  std::vector<double> g = window_values(dst, window);
  const BBox raster = ins.bounds();
  for (int y = 0; y < window.h; ++y)
    for (int x = 0; x < window.w; ++x) {
      const int cx = window.x + x, cy = window.y + y;
      if (!raster.contains(cx, cy)) continue;
      const int lx = cx - ins.origin.x, ly = cy - ins.origin.y;
      const double a = ins.alpha[static_cast<std::size_t>(ly) * ins.intensity.width() + lx];
      const std::size_t i = static_cast<std::size_t>(y) * window.w + x;
      g[i] = a * ins.intensity.at(lx, ly) + (1.0 - a) * g[i];
    }
  return g;
}

PoissonProblem make_problem(const GrayImage& dst, const Insertion& ins, BlendMode mode) {
  const BBox mb = ins.mask_bounds();
  if (mb.empty()) throw Error(Errc::empty_footprint, "insertion mask is empty");
  PoissonProblem p;
  p.window = mb.expanded(1);
  if (!inside_canvas(p.window, dst.size()))
    throw Error(Errc::domain, "Poisson insertion needs a one-pixel ring inside the canvas");
  p.omega = BinaryMask(p.window.w, p.window.h);
  for (int y = 0; y < ins.mask.height(); ++y)
    for (int x = 0; x < ins.mask.width(); ++x)
      if (ins.mask.at(x, y)) p.omega.set(ins.origin.x + x - p.window.x, ins.origin.y + y - p.window.y);

  const auto g = guidance_source(dst, ins, p.window);
  GuidanceField field = gradient_field(p.window.w, p.window.h, g);
  if (mode == BlendMode::poisson_seamless) {
    const auto d = window_values(dst, p.window);
    field = mixed_field(field, gradient_field(p.window.w, p.window.h, d));
  }
  p.divergence = field.divergence();
  return p;
}

BlendOutcome blend_into(GrayImage& canvas, const Insertion& ins, BlendMode mode, const SolverOptions& opts) {
  if (mode == BlendMode::direct) {
    composite_direct_into(canvas, ins);
    return {BlendMode::direct, 0, 0.0};
  }
  const BBox window = ins.mask_bounds().expanded(1);
  if (!inside_canvas(window, canvas.size())) {
    detail::logger().info("insertion at ({}, {}) touches the border; using direct compositing", window.x, window.y);
    composite_direct_into(canvas, ins);
    return {BlendMode::direct, 0, 0.0};
  }
  const PoissonProblem problem = make_problem(canvas, ins, mode);
  const auto guess = guidance_source(canvas, ins, problem.window);
  const PoissonSolution sol = solve_poisson(problem, canvas, opts, std::span<const double>(guess));
  for (int y = 0; y < problem.window.h; ++y)
    for (int x = 0; x < problem.window.w; ++x)
      if (problem.omega.at(x, y))
        canvas.at(problem.window.x + x, problem.window.y + y) = static_cast<float>(
            std::clamp(sol.values[static_cast<std::size_t>(y) * problem.window.w + x], 0.0, 1.0));
  return {mode, sol.iterations, sol.residual};
}

GrayImage blend_poisson_normal(const GrayImage& dst, const Insertion& src, const SolverOptions& opts) {
  GrayImage out = dst;
  blend_into(out, src, BlendMode::poisson_normal, opts);
  return out;
}

GrayImage blend_poisson_seamless(const GrayImage& dst, const Insertion& src, const SolverOptions& opts) {
  GrayImage out = dst;
  blend_into(out, src, BlendMode::poisson_seamless, opts);
  return out;
}

}  // namespace fbsynth::blend
