// SPDX-License-Identifier: Apache-2.0
#include "fbsynth/cutpaste.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <nlohmann/json.hpp>

#include "fbsynth/image_io.hpp"

namespace fs = std::filesystem;

namespace fbsynth::cutpaste {
namespace {

constexpr std::string_view kMaskSuffix = ".mask.png";
constexpr std::string_view kDefaultCategory = "foreign_body";

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

GrayImage crop_gray(const GrayImage& img, const BBox& box) {
  GrayImage out(box.w, box.h);
  for (int y = 0; y < box.h; ++y)
    for (int x = 0; x < box.w; ++x) out.at(x, y) = img.at(box.x + x, box.y + y);
  return out;
}

float sample_bilinear(const GrayImage& img, double x, double y) {
  x = std::clamp(x, 0.0, static_cast<double>(img.width() - 1));
  y = std::clamp(y, 0.0, static_cast<double>(img.height() - 1));
  const int x0 = static_cast<int>(x), y0 = static_cast<int>(y);
  const int x1 = std::min(x0 + 1, img.width() - 1), y1 = std::min(y0 + 1, img.height() - 1);
  const double fx = x - x0, fy = y - y0;
  const double top = (1 - fx) * img.at(x0, y0) + fx * img.at(x1, y0);
  const double bot = (1 - fx) * img.at(x0, y1) + fx * img.at(x1, y1);
  return static_cast<float>((1 - fy) * top + fy * bot);
}

Crop flip_horizontal(const Crop& c) {
  Crop out = c;
  const int w = c.intensity.width();
  for (int y = 0; y < c.intensity.height(); ++y)
    for (int x = 0; x < w; ++x) {
      out.intensity.at(x, y) = c.intensity.at(w - 1 - x, y);
      out.mask.set(x, y, c.mask.at(w - 1 - x, y));
    }
  return out;
}

// Rotation by `deg` (counter-clockwise on screen) and isotropic scale about the raster center.
Crop rotate_scale(const Crop& c, double deg, double scale) {
  const double t = deg * std::numbers::pi / 180.0;
  const double cs = std::cos(t), sn = std::sin(t);
  const double w = c.intensity.width(), h = c.intensity.height();
  const double hw = scale * (std::abs(cs) * w + std::abs(sn) * h) / 2.0;
  const double hh = scale * (std::abs(sn) * w + std::abs(cs) * h) / 2.0;
  const int ow = std::max(1, static_cast<int>(std::ceil(2 * hw - 1e-9)));
  const int oh = std::max(1, static_cast<int>(std::ceil(2 * hh - 1e-9)));
  const double icx = (w - 1) / 2.0, icy = (h - 1) / 2.0;
  const double ocx = (ow - 1) / 2.0, ocy = (oh - 1) / 2.0;

  Crop out{GrayImage(ow, oh), BinaryMask(ow, oh), c.source_id, c.category};
  for (int y = 0; y < oh; ++y)
    for (int x = 0; x < ow; ++x) {
      // Inverse map back into the source raster.
      const double dx = (x - ocx) / scale, dy = (y - ocy) / scale;
      const double sx = icx + cs * dx - sn * dy;
      const double sy = icy + sn * dx + cs * dy;
      out.intensity.at(x, y) = sample_bilinear(c.intensity, sx, sy);
      const int nx = static_cast<int>(std::lround(sx)), ny = static_cast<int>(std::lround(sy));
      if (c.mask.get(nx, ny)) out.mask.set(x, y);
    }
  return out;
}

}  // namespace

CropLibrary::CropLibrary(std::vector<Crop> crops) : crops_(std::move(crops)) {
  std::stable_sort(crops_.begin(), crops_.end(),
                   [](const Crop& a, const Crop& b) { return a.source_id < b.source_id; });
  for (std::size_t i = 0; i < crops_.size(); ++i) index_[crops_[i].category].push_back(i);
}

std::vector<std::size_t> CropLibrary::by_category(const std::string& category) const {
  auto it = index_.find(category);
  return it == index_.end() ? std::vector<std::size_t>{} : it->second;
}

LoadedLibrary load_crop_library(const std::string& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(Errc::io, "crop directory not found: " + dir);

  std::vector<std::string> ids;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (!ends_with(name, ".png") || ends_with(name, kMaskSuffix)) continue;
    ids.push_back(name.substr(0, name.size() - 4));
  }
  std::sort(ids.begin(), ids.end());

  LoadedLibrary result;
  std::vector<Crop> crops;
  for (const auto& id : ids) {
    const fs::path base = fs::path(dir) / id;
    const std::string mask_path = base.string() + std::string(kMaskSuffix);
    if (!fs::exists(mask_path)) {
      result.warnings.push_back(id + ": missing mask");
      continue;
    }
    try {
      Crop c;
      c.source_id = id;
      c.intensity = io::read_gray(base.string() + ".png");
      c.mask = io::read_mask(mask_path);
      if (c.intensity.size() != c.mask.size()) {
        result.warnings.push_back(id + ": image and mask dimensions differ");
        continue;
      }
      if (c.mask.count() == 0) {
        result.warnings.push_back(id + ": empty mask");
        continue;
      }
      c.category = std::string(kDefaultCategory);
      const std::string meta = base.string() + ".json";
      if (fs::exists(meta)) {
        std::ifstream in(meta);
        const auto j = nlohmann::json::parse(in);
        if (j.contains("category") && j["category"].is_string()) c.category = j["category"].get<std::string>();
      }
      crops.push_back(tighten(c));
    } catch (const std::exception& e) {
      result.warnings.push_back(id + ": " + e.what());
    }
  }
  if (crops.empty()) throw Error(Errc::io, "no valid crops in " + dir);
  result.library = CropLibrary(std::move(crops));
  return result;
}

void save_crop(const Crop& crop, const std::string& dir) {
  fs::create_directories(dir);
  const fs::path base = fs::path(dir) / crop.source_id;
  io::write_gray8(base.string() + ".png", crop.intensity);
  io::write_mask(base.string() + std::string(kMaskSuffix), crop.mask);
  std::ofstream(base.string() + ".json") << nlohmann::json{{"category", crop.category}}.dump() << '\n';
}

Crop tighten(const Crop& crop) {
  const BBox mb = crop.mask.bounds();
  if (mb.empty()) throw Error(Errc::empty_footprint, "crop mask is empty");
  const BBox box = mb.expanded(1).intersect({0, 0, crop.mask.width(), crop.mask.height()});
  return {crop_gray(crop.intensity, box), crop.mask.crop(box), crop.source_id, crop.category};
}

AugmentDraw sample_augmentation(const AugmentParams& params, Rng& rng) {
  AugmentDraw d;
  d.flip = rng.bernoulli(params.flip_probability);
  d.rotation_deg = rng.uniform(-params.max_rotation_deg, params.max_rotation_deg);
  d.scale = params.scale.sample(rng);
  d.gain = params.gain.sample(rng);
  return d;
}

Crop apply_augmentation(const Crop& crop, const AugmentDraw& draw) {
  if (!draw.flip && draw.rotation_deg == 0.0 && draw.scale == 1.0 && draw.gain == 1.0) return crop;
  Crop out = draw.flip ? flip_horizontal(crop) : crop;
  if (draw.rotation_deg != 0.0 || draw.scale != 1.0) out = rotate_scale(out, draw.rotation_deg, draw.scale);
  if (draw.gain != 1.0)
    for (float& v : out.intensity.data()) v = std::clamp(static_cast<float>(v * draw.gain), 0.0f, 1.0f);
  if (out.mask.count() == 0) throw Error(Errc::region_too_small, "augmented crop mask is empty");
  return tighten(out);
}

Crop augment_crop(const Crop& crop, Rng& rng, const AugmentParams& params) {
  for (int attempt = 0;; ++attempt) {
    try {
      return apply_augmentation(crop, sample_augmentation(params, rng));
    } catch (const Error& e) {
      if (e.code() != Errc::region_too_small || attempt == 1) throw;
    }
  }
}

PasteResult paste_crop(GrayImage& canvas, const Crop& crop, const anatomy::RegionSample& region, BlendMode mode,
                       Rng& rng, const blend::SolverOptions& opts) {
  const int w = crop.intensity.width(), h = crop.intensity.height();
  for (int attempt = 0; attempt < kMaxAnchorTries; ++attempt) {
    const Pixel anchor = anatomy::sample_point_in_region(region, rng);
    const Pixel origin{anchor.x - w / 2, anchor.y - h / 2};
    if (origin.x < 0 || origin.y < 0 || origin.x + w > canvas.width() || origin.y + h > canvas.height()) continue;

    blend::Insertion ins;
    ins.origin = origin;
    ins.intensity = crop.intensity;
    ins.alpha.assign(static_cast<std::size_t>(w) * h, 1.0f);
    ins.mask = crop.mask;

    PasteResult res;
    res.outcome = blend::blend_into(canvas, ins, mode, opts);
    res.record.mask = InstanceMask::from_local(crop.mask, origin, canvas.size());
    res.record.category = Category::cutpaste;
    res.record.anchor_anatomy = region.label_id();
    res.record.anchor_point = anchor;
    res.record.params = {{"source_id", crop.source_id},
                         {"crop_category", crop.category},
                         {"blend_mode", to_string(mode)},
                         {"blend_applied", to_string(res.outcome.applied)},
                         {"solver_iterations", res.outcome.iterations}};
    return res;
  }
  throw Error(Errc::placement_failed, "placement failed: crop " + crop.source_id + " does not fit region " +
                                          std::to_string(region.label_id()));
}

}  // namespace fbsynth::cutpaste
