// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fbsynth/random.hpp"

namespace fbsynth {

/// Instance categories: the eight plotted structure families plus cut-paste crops.
enum class Category : std::uint8_t {
  text,
  circular,
  ring,
  rectangular,
  clip,
  grid,
  line,
  parallel_lines,
  cutpaste,
};

inline constexpr std::size_t kFamilyCount = 8;
inline constexpr std::size_t kCategoryCount = 9;

std::string_view to_string(Category c);
std::optional<Category> category_from_string(std::string_view name);

/// Families that are placed relative to a sampled anatomy region.
constexpr bool is_region_family(Category c) {
  return c == Category::circular || c == Category::ring || c == Category::clip || c == Category::grid;
}

enum class AnnotationType : std::uint8_t { plot, cutpaste };
enum class BlendMode : std::uint8_t { direct, poisson_normal, poisson_seamless };
enum class CategoriesMode : std::uint8_t { per_family, class_agnostic };

std::string_view to_string(BlendMode m);
std::string_view to_string(CategoriesMode m);

struct Range {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double v) const { return v >= lo && v <= hi; }
  double sample(Rng& rng) const { return rng.uniform(lo, hi); }
  friend bool operator==(const Range&, const Range&) = default;
};

struct StructureParams {
  // Pixel quantities are given at GenConfig::reference_width and scaled to the canvas.
  int text_min_length = 1;
  int text_max_length = 8;
  Range text_scale{1.0, 3.0};
  Range ellipse_axis_rel{0.03, 0.25};  // fraction of the anchor region's bbox diagonal
  double min_axis_px = 3.0;
  Range ring_thickness_px{2.0, 8.0};
  Range rect_size_rel{0.02, 0.12};     // fraction of canvas width / height
  Range clip_length_px{4.0, 16.0};
  Range clip_thickness_px{1.5, 4.0};
  int clip_max_count = 6;
  double clip_max_angle_deg = 30.0;
  Range grid_spacing_px{12.0, 32.0};
  double grid_jitter = 0.25;           // fraction of spacing, at most 0.25
  Range grid_thickness_px{1.0, 3.0};
  double grid_shade_jitter = 0.1;
  int line_max_segments = 5;
  Range line_thickness_px{2.0, 8.0};
  int tube_max_segments = 3;
  Range tube_width_px{8.0, 24.0};
  Range tube_wall_px{1.5, 4.0};
  Range tube_fill_intensity{0.2, 0.8};
  friend bool operator==(const StructureParams&, const StructureParams&) = default;
};

struct AugmentParams {
  double flip_probability = 0.5;
  double max_rotation_deg = 15.0;
  Range scale{0.7, 1.3};
  Range gain{0.8, 1.2};
  friend bool operator==(const AugmentParams&, const AugmentParams&) = default;
};

struct SolverParams {
  double tolerance = 1e-5;
  int max_iterations = 10000;
  double relaxation = 1.9;
  friend bool operator==(const SolverParams&, const SolverParams&) = default;
};

struct ImagePolicy {
  enum class Mode : std::uint8_t { source, fixed };
  Mode mode = Mode::source;
  int width = 1024;   // used when mode == fixed
  int height = 1024;
  friend bool operator==(const ImagePolicy&, const ImagePolicy&) = default;
};

struct InputPaths {
  std::string manifest;
  std::string crops;
  friend bool operator==(const InputPaths&, const InputPaths&) = default;
};

struct GenConfig {
  std::uint64_t master_seed = 0;
  int max_annotations = 12;
  std::array<double, 2> annotation_type_weights{0.5, 0.5};                // plot, cutpaste
  std::array<double, kFamilyCount> structure_weights{0.125, 0.125, 0.125, 0.125,
                                                     0.125, 0.125, 0.125, 0.125};
  std::array<double, 3> blend_mode_weights{1.0 / 3, 1.0 / 3, 1.0 / 3};    // direct, normal, seamless
  // Eligible anatomy label ids per family (indexed by Category). Empty means any
  // sampled region for region families; non-region families must stay empty.
  std::array<std::vector<std::uint16_t>, kFamilyCount> eligibility{};
  Range dark_intensity{0.0, 0.25};
  Range bright_intensity{0.75, 1.0};
  Range opacity{0.5, 1.0};
  StructureParams structures;
  AugmentParams augment;
  SolverParams solver;
  ImagePolicy image;
  int reference_width = 1024;
  CategoriesMode categories = CategoriesMode::class_agnostic;
  InputPaths inputs;

  bool eligible(Category family, std::uint16_t label) const;
  friend bool operator==(const GenConfig&, const GenConfig&) = default;
};

struct ConfigIssue {
  std::string path;
  std::string message;
};

std::vector<ConfigIssue> validate_config(const GenConfig& cfg);

nlohmann::json to_json(const GenConfig& cfg);
/// Strict parse: keys missing from `j` keep their defaults, unknown keys and
/// type mismatches throw Error(Errc::config) naming the offending path.
GenConfig config_from_json(const nlohmann::json& j);
GenConfig load_config(const std::string& path);

/// Applies `dotted.key=value` to a config document. The key must already
/// exist; the value is parsed as JSON, falling back to a plain string.
void apply_override(nlohmann::json& doc, std::string_view assignment);

/// Uniform integer in [1, cfg.max_annotations].
int sample_num_annotations(const GenConfig& cfg, Rng& rng);

}  // namespace fbsynth
