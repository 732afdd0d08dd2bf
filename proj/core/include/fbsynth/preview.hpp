// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fbsynth/image.hpp"
#include "fbsynth/image_io.hpp"
#include "fbsynth/instance.hpp"

namespace fbsynth::preview {

using Color = std::array<std::uint8_t, 3>;

/// Fixed saturated color per category (never gray, so overlays are separable).
Color category_color(Category c);

/// Mask pixels with a 4-neighbor outside the mask or outside the raster.
BinaryMask contour(const BinaryMask& mask);

/// Gray image with per-instance contours in category colors, plus a legend
/// strip below the image listing the categories present.
io::Rgb8 render_preview(const GrayImage& image, const std::vector<InstanceRecord>& instances);

/// Writes previews of the first k images of a generated dataset to out_dir;
/// returns the written paths. Empty dataset -> Errc::format.
std::vector<std::string> run_preview(const std::string& dataset_dir, std::size_t k, const std::string& out_dir);

}  // namespace fbsynth::preview
