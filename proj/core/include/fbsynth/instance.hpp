// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

#include <nlohmann/json.hpp>

#include "fbsynth/config.hpp"
#include "fbsynth/image.hpp"

namespace fbsynth {

/// Canvas-sized binary mask stored as its tight bounding box plus the bits
/// inside it. Always non-empty and tight once constructed.
class InstanceMask {
 public:
  InstanceMask() = default;

  /// Tightens `local` (placed at `origin` in a canvas of `canvas` size),
  /// clipping to the canvas. Throws Errc::empty_footprint if nothing remains.
  static InstanceMask from_local(const BinaryMask& local, Pixel origin, Size canvas);
  static InstanceMask from_canvas(const BinaryMask& full);
  static InstanceMask from_patch(const AlphaPatch& patch, Size canvas);

  Size canvas() const { return canvas_; }
  const BBox& bbox() const { return box_; }
  const BinaryMask& local() const { return bits_; }
  std::size_t area() const { return area_; }
  bool contains(int x, int y) const { return box_.contains(x, y) && bits_.at(x - box_.x, y - box_.y); }
  BinaryMask full() const;

  friend bool operator==(const InstanceMask&, const InstanceMask&) = default;

 private:
  Size canvas_;
  BBox box_;
  BinaryMask bits_;
  std::size_t area_ = 0;
};

struct InstanceRecord {
  InstanceMask mask;
  Category category = Category::text;
  int z_order = 0;
  std::optional<std::uint16_t> anchor_anatomy;
  std::optional<Pixel> anchor_point;
  nlohmann::json params = nlohmann::json::object();

  const BBox& bbox() const { return mask.bbox(); }
};

}  // namespace fbsynth
