// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "fbsynth/anatomy.hpp"
#include "fbsynth/config.hpp"
#include "fbsynth/image.hpp"
#include "fbsynth/raster.hpp"

namespace fbsynth::structures {

struct StructureSpec {
  Category family = Category::text;
  std::optional<std::uint16_t> anchor_region;
  std::optional<Pixel> anchor_point;
  nlohmann::json params = nlohmann::json::object();
};

struct Structure {
  AlphaPatch patch;
  StructureSpec spec;
};

/// Per-image anatomy state shared by all generators for that image.
class ImageAnatomy {
 public:
  explicit ImageAnatomy(anatomy::LabelMap map);

  const anatomy::LabelMap& map() const { return map_; }
  const BinaryMask& body() const { return body_; }
  Size canvas() const { return map_.size(); }
  /// Raster indices of pixels outside the body mask.
  const std::vector<std::uint32_t>& exterior() const { return exterior_; }

 private:
  anatomy::LabelMap map_;
  BinaryMask body_;
  std::vector<std::uint32_t> exterior_;
};

/// Canvas width relative to the configured reference width.
double pixel_scale(const GenConfig& cfg, Size canvas);

Structure gen_text(const GenConfig& cfg, Size canvas, Rng& rng);
Structure gen_circular(const GenConfig& cfg, const anatomy::RegionSample& region, Rng& rng);
Structure gen_ring(const GenConfig& cfg, const anatomy::RegionSample& region, Rng& rng);
Structure gen_rect(const GenConfig& cfg, Size canvas, Rng& rng);
/// 1..min(clip_max_count, max_count) clips, one instance each.
std::vector<Structure> gen_clips(const GenConfig& cfg, const anatomy::RegionSample& region, Rng& rng,
                                 int max_count = 6);
Structure gen_grid(const GenConfig& cfg, const anatomy::RegionSample& region, Rng& rng);
Structure gen_line(const GenConfig& cfg, const ImageAnatomy& anatomy, Rng& rng);
Structure gen_parallel_lines(const GenConfig& cfg, const ImageAnatomy& anatomy, Rng& rng);

struct GridLayout {
  struct Node {
    int i = 0;  // lattice column
    int j = 0;  // lattice row
    Point position;
  };
  double spacing = 0.0;
  int columns = 0;
  int rows = 0;
  std::vector<Node> nodes;                             // surviving nodes only
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // indices into nodes

  std::vector<int> degrees() const;
};

/// Lattice over the region bbox at `spacing`, each node jittered by at most
/// jitter * spacing per axis, kept iff its rounded position is in the region.
/// Edges join lattice-adjacent survivors. Throws Errc::region_too_small.
GridLayout build_grid_layout(const anatomy::RegionSample& region, double spacing, double jitter, Rng& rng);

struct TubeOutline {
  std::vector<Point> center;
  std::vector<Point> left;
  std::vector<Point> right;
};

/// Offsets a polyline by +-width/2 along per-vertex normals; drops repeated vertices.
TubeOutline offset_tube(std::span<const Point> center, double width);

/// Random chain of `segments` cubic segments starting at `start`, with the
/// remaining control points uniform over the canvas.
raster::BezierChain random_chain(Point start, int segments, Size canvas, Rng& rng);

}  // namespace fbsynth::structures
