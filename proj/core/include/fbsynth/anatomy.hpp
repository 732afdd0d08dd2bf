// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fbsynth/image.hpp"
#include "fbsynth/random.hpp"

namespace fbsynth::anatomy {

inline constexpr std::size_t kMaxCatalogSize = 158;

struct RegionData;

/// One anatomy label's pixels. Cheap to copy; shares storage with its LabelMap.
class RegionSample {
 public:
  RegionSample() = default;
  explicit RegionSample(std::shared_ptr<const RegionData> data) : data_(std::move(data)) {}

  std::uint16_t label_id() const;
  const BBox& bbox() const;
  std::size_t area() const;
  Size canvas() const;
  bool contains(int x, int y) const;
  Pixel pixel(std::size_t i) const;
  /// Region mask cropped to bbox().
  const BinaryMask& local_mask() const;

 private:
  std::shared_ptr<const RegionData> data_;
};

/// Immutable per-pixel anatomy labels (0 = background) with an id->name catalog.
class LabelMap {
 public:
  using Catalog = std::map<std::uint16_t, std::string>;

  LabelMap() = default;
  /// Validates dims, catalog size and that every nonzero id is catalogued.
  static LabelMap create(int width, int height, std::vector<std::uint16_t> labels, Catalog catalog);

  int width() const;
  int height() const;
  Size size() const { return {width(), height()}; }
  std::uint16_t at(int x, int y) const;
  const std::vector<std::uint16_t>& labels() const;
  const Catalog& catalog() const;
  /// Label ids present in the raster, ascending.
  const std::vector<std::uint16_t>& region_ids() const;
  RegionSample region(std::uint16_t id) const;

 private:
  struct Shared;
  std::shared_ptr<const Shared> d_;
};

std::string sidecar_path(const std::string& png_path);
LabelMap load_label_map(const std::string& path, std::optional<Size> expected = std::nullopt);
void save_label_map(const LabelMap& map, const std::string& path);

/// k distinct regions, uniform without replacement; k is clipped to the region count.
std::vector<RegionSample> sample_regions(const LabelMap& map, Rng& rng, std::size_t k);
Pixel sample_point_in_region(const RegionSample& region, Rng& rng);

/// Closing radius for the body mask: 3 px at 1024 px width, scaled, at least 1.
int closing_radius(int width);
BinaryMask dilate(const BinaryMask& mask, int radius);
/// Out-of-raster pixels are ignored, so shapes touching the border are kept.
BinaryMask erode(const BinaryMask& mask, int radius);
BinaryMask close(const BinaryMask& mask, int radius);
/// Union of all nonzero labels, closed with closing_radius(width).
BinaryMask body_mask(const LabelMap& map);

/// Outer 8-connected boundary of every component of the region, each traced
/// by Moore-neighbor following; components appear in raster order of their
/// first pixel.
std::vector<Pixel> region_boundary(const RegionSample& region);
std::vector<Pixel> trace_outer_boundary(const BinaryMask& mask);

}  // namespace fbsynth::anatomy
