// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fbsynth/config.hpp"
#include "fbsynth/error.hpp"
#include "fbsynth/image.hpp"

namespace fbsynth::blend {

/// Content to insert: a local raster placed at `origin`. `mask` selects the
/// pixels that belong to the object; `alpha` weights intensity against the
/// destination (1 for crops everywhere, the patch alpha for plotted structures).
struct Insertion {
  Pixel origin;
  GrayImage intensity;
  std::vector<float> alpha;
  BinaryMask mask;

  static Insertion from_patch(const AlphaPatch& patch);
  BBox bounds() const { return {origin.x, origin.y, intensity.width(), intensity.height()}; }
  BBox mask_bounds() const;
};

/// out = alpha * intensity + (1 - alpha) * dst on the footprint, dst elsewhere.
/// Throws Errc::domain when the patch leaves the canvas.
GrayImage composite_direct(const GrayImage& dst, const AlphaPatch& patch);
void composite_direct_into(GrayImage& canvas, const Insertion& ins);

struct SolverOptions {
  double tolerance = 1e-5;  // relative residual ||b - Af|| / ||b||
  int max_iterations = 10000;
  double relaxation = 1.9;
  bool record_energy = false;

  static SolverOptions from(const SolverParams& p) { return {p.tolerance, p.max_iterations, p.relaxation}; }
};

class SolverError : public Error {
 public:
  SolverError(double residual, int iterations);
  double residual() const { return residual_; }
  int iterations() const { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

/// Forward-difference guidance field over a window, one 2-vector per pixel.
struct GuidanceField {
  int width = 0;
  int height = 0;
  std::vector<double> vx;  // g(x+1, y) - g(x, y); 0 in the last column
  std::vector<double> vy;  // g(x, y+1) - g(x, y); 0 in the last row

  /// Backward-difference divergence, the adjoint of the forward gradient.
  std::vector<double> divergence() const;
};

GuidanceField gradient_field(int width, int height, std::span<const double> values);
/// Per pixel and axis, whichever of src / dst has the larger magnitude.
GuidanceField mixed_field(const GuidanceField& src, const GuidanceField& dst);

/// Discrete Poisson problem on a window of the destination. `omega` and
/// `divergence` are window-sized; omega must not touch the window edge.
struct PoissonProblem {
  BBox window;
  BinaryMask omega;
  std::vector<double> divergence;
};

struct PoissonSolution {
  BBox window;
  std::vector<double> values;  // window-sized; outside omega equals the destination
  int iterations = 0;
  double residual = 0.0;
  std::vector<double> residual_history;  // entry k: after k sweeps
  std::vector<double> energy_history;    // filled when SolverOptions::record_energy
};

/// Red-black Gauss-Seidel with over-relaxation for Lap(f) = div on omega,
/// f = dst outside omega. Throws SolverError when max_iterations is reached.
PoissonSolution solve_poisson(const PoissonProblem& problem, const GrayImage& dst, const SolverOptions& opts,
                              std::optional<std::span<const double>> initial = std::nullopt);

/// Relative residual ||b - Af||_2 / ||b||_2 of window values (||b|| = 0 -> absolute).
double poisson_residual(const PoissonProblem& problem, const GrayImage& dst, std::span<const double> values);

/// Builds the Poisson problem for inserting `ins` with the given guidance.
/// Requires mask_bounds() expanded by one pixel to lie inside the canvas.
PoissonProblem make_problem(const GrayImage& dst, const Insertion& ins, BlendMode mode);
/// Guidance source g: alpha-composite of the insertion over dst on its raster, dst elsewhere.
std::vector<double> guidance_source(const GrayImage& dst, const Insertion& ins, const BBox& window);

struct BlendOutcome {
  BlendMode applied = BlendMode::direct;
  int iterations = 0;
  double residual = 0.0;
};

/// Poisson modes fall back to direct compositing when the mask touches the
/// canvas border. Results are clamped to [0,1].
BlendOutcome blend_into(GrayImage& canvas, const Insertion& ins, BlendMode mode, const SolverOptions& opts);

GrayImage blend_poisson_normal(const GrayImage& dst, const Insertion& src, const SolverOptions& opts = {});
GrayImage blend_poisson_seamless(const GrayImage& dst, const Insertion& src, const SolverOptions& opts = {});

}  // namespace fbsynth::blend
