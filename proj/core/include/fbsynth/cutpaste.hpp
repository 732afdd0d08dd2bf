// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "fbsynth/anatomy.hpp"
#include "fbsynth/blend.hpp"
#include "fbsynth/config.hpp"
#include "fbsynth/image.hpp"
#include "fbsynth/instance.hpp"

namespace fbsynth::cutpaste {

/// Object crop: intensity raster with the object mask, cropped to the mask
/// bounds plus at most one pixel of surrounding context.
struct Crop {
  GrayImage intensity;
  BinaryMask mask;
  std::string source_id;
  std::string category;
};

/// Crops sorted by source id.
class CropLibrary {
 public:
  CropLibrary() = default;
  explicit CropLibrary(std::vector<Crop> crops);

  bool empty() const { return crops_.empty(); }
  std::size_t size() const { return crops_.size(); }
  const Crop& operator[](std::size_t i) const { return crops_[i]; }
  const std::vector<Crop>& crops() const { return crops_; }
  std::vector<std::size_t> by_category(const std::string& category) const;

 private:
  std::vector<Crop> crops_;
  std::map<std::string, std::vector<std::size_t>> index_;
};

struct LoadedLibrary {
  CropLibrary library;
  std::vector<std::string> warnings;
};

/// Reads `<id>.png` + `<id>.mask.png` (+ optional `<id>.json` with a
/// "category" string). Bad pairs become warnings; no valid pair is an error.
LoadedLibrary load_crop_library(const std::string& dir);
void save_crop(const Crop& crop, const std::string& dir);

/// Re-crops to the mask bounds plus a one-pixel context margin.
Crop tighten(const Crop& crop);

struct AugmentDraw {
  bool flip = false;
  double rotation_deg = 0.0;
  double scale = 1.0;
  double gain = 1.0;
};

AugmentDraw sample_augmentation(const AugmentParams& params, Rng& rng);
/// Flip, then rotate+scale about the center (nearest-neighbor mask, bilinear
/// intensity, edge-replicated), then gain with clamping; re-tightened.
/// The identity draw returns the crop unchanged.
Crop apply_augmentation(const Crop& crop, const AugmentDraw& draw);
/// Samples and applies; an empty result is resampled once, then Errc::region_too_small.
Crop augment_crop(const Crop& crop, Rng& rng, const AugmentParams& params);

struct PasteResult {
  InstanceRecord record;
  blend::BlendOutcome outcome;
};

/// Tries up to 8 in-region anchors as crop center; the crop raster must fit the
/// canvas. Throws Errc::placement_failed otherwise.
PasteResult paste_crop(GrayImage& canvas, const Crop& crop, const anatomy::RegionSample& region, BlendMode mode,
                       Rng& rng, const blend::SolverOptions& opts);

inline constexpr int kMaxAnchorTries = 8;

}  // namespace fbsynth::cutpaste
