// SPDX-License-Identifier: Apache-2.0
#include "phantom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "fbsynth/image_io.hpp"
#include "fbsynth/random.hpp"
#include "fbsynth/raster.hpp"

namespace fs = std::filesystem;

namespace fbsynth::phantom {
namespace {

constexpr double kPi = std::numbers::pi;

enum Label : std::uint16_t {
  soft_tissue = 1,
  left_lung,
  right_lung,
  heart,
  trachea,
  aorta,
  spine,
  left_clavicle,
  right_clavicle,
  left_humerus,
  right_humerus,
  first_rib,  // ribs follow: left 1..5, then right 1..5
};

constexpr int kRibsPerSide = 5;

class Canvas {
 public:
  Canvas(Size size) : size_(size), image_(size.width, size.height, 0.04f), labels_(size.area(), 0) {}

  // Paints pixels whose normalized center (u, v) satisfies `inside`.
  template <typename Pred>
  void shape(std::uint16_t label, float intensity, Pred inside) {
    for (int y = 0; y < size_.height; ++y)
      for (int x = 0; x < size_.width; ++x) {
        const double u = (x + 0.5) / size_.width, v = (y + 0.5) / size_.height;
        if (inside(u, v)) put(x, y, label, intensity);
      }
  }

  void patch(std::uint16_t label, float intensity, const AlphaPatch& p) {
    for (int y = 0; y < p.height; ++y)
      for (int x = 0; x < p.width; ++x)
        if (p.in_footprint(x, y)) put(p.origin.x + x, p.origin.y + y, label, intensity);
  }

  GrayImage& image() { return image_; }
  std::vector<std::uint16_t>& labels() { return labels_; }

 private:
  void put(int x, int y, std::uint16_t label, float intensity) {
    if (!size_.contains(x, y)) return;
    const std::size_t i = static_cast<std::size_t>(y) * size_.width + x;
    labels_[i] = label;
    image_.data()[i] = intensity;
  }

  Size size_;
  GrayImage image_;
  std::vector<std::uint16_t> labels_;
};

bool in_ellipse(double u, double v, double cu, double cv, double a, double b) {
  const double du = (u - cu) / a, dv = (v - cv) / b;
  return du * du + dv * dv <= 1.0;
}

Point to_px(Size s, double u, double v) { return {u * s.width - 0.5, v * s.height - 0.5}; }

}  // namespace

const std::vector<std::string>& anatomy_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n = {"soft_tissue",   "left_lung",      "right_lung",   "heart",
                                  "trachea",       "aorta",          "spine",        "left_clavicle",
                                  "right_clavicle", "left_humerus",  "right_humerus"};
    for (const char* side : {"left", "right"})
      for (int k = 1; k <= kRibsPerSide; ++k) n.push_back(std::string(side) + "_rib_" + std::to_string(k));
    return n;
  }();
  return names;
}

Phantom make_phantom(std::uint64_t seed, Size size) {
  Rng rng = SeedStream(seed).child(0).engine();
  auto j = [&](double s) { return rng.uniform(-s, s); };
  Canvas c(size);

  const double body_a = 0.42 + j(0.03), body_b = 0.52 + j(0.03);
  c.shape(soft_tissue, 0.42f + static_cast<float>(j(0.04)),
          [&](double u, double v) { return in_ellipse(u, v, 0.5, 0.62, body_a, body_b); });

  const double lung_a = 0.14 + j(0.015), lung_b = 0.27 + j(0.02), lung_v = 0.5 + j(0.02);
  const float lung_i = 0.16f + static_cast<float>(j(0.04));
  // Radiological convention: the patient's left lung is on the image right.
  c.shape(right_lung, lung_i, [&](double u, double v) { return in_ellipse(u, v, 0.33, lung_v, lung_a, lung_b); });
  c.shape(left_lung, lung_i, [&](double u, double v) { return in_ellipse(u, v, 0.67, lung_v, lung_a, lung_b); });

  const double heart_u = 0.55 + j(0.02);
  c.shape(heart, 0.58f + static_cast<float>(j(0.04)),
          [&](double u, double v) { return in_ellipse(u, v, heart_u, 0.64, 0.13, 0.11); });
  c.shape(aorta, 0.55f, [&](double u, double v) { return in_ellipse(u, v, 0.55, 0.33, 0.04, 0.04); });
  c.shape(trachea, 0.22f, [&](double u, double v) { return std::abs(u - 0.5) < 0.018 && v > 0.12 && v < 0.32; });
  c.shape(spine, 0.72f + static_cast<float>(j(0.03)),
          [&](double u, double v) { return std::abs(u - 0.5) < 0.035 && v > 0.1 && v < 0.98; });

  const double rib_t = std::max(2.0, 0.016 * size.height);
  for (int side = 0; side < 2; ++side) {
    const double s = side == 0 ? 1.0 : -1.0;  // left ribs on the image right
    for (int k = 0; k < kRibsPerSide; ++k) {
      std::vector<Point> pts;
      const double v0 = 0.30 + 0.085 * k + j(0.01);
      for (int i = 0; i <= 24; ++i) {
        const double t = i / 24.0;
        pts.push_back(to_px(size, 0.5 + s * (0.04 + 0.27 * t), v0 - 0.05 * std::sin(kPi * t) + 0.07 * t));
      }
      c.patch(static_cast<std::uint16_t>(first_rib + side * kRibsPerSide + k), 0.62f,
              raster::stroke_polyline(pts, {rib_t, 1.0f, 1.0f}, size));
    }
  }

  const double clav_t = std::max(2.0, 0.022 * size.height);
  const std::vector<Point> lc{to_px(size, 0.54, 0.24), to_px(size, 0.80, 0.19 + j(0.02))};
  const std::vector<Point> rc{to_px(size, 0.46, 0.24), to_px(size, 0.20, 0.19 + j(0.02))};
  c.patch(left_clavicle, 0.7f, raster::stroke_polyline(lc, {clav_t, 1.0f, 1.0f}, size));
  c.patch(right_clavicle, 0.7f, raster::stroke_polyline(rc, {clav_t, 1.0f, 1.0f}, size));

  const double hum_t = std::max(3.0, 0.07 * size.width);
  const std::vector<Point> lh{to_px(size, 0.93, 0.2), to_px(size, 0.97, 0.6)};
  const std::vector<Point> rh{to_px(size, 0.07, 0.2), to_px(size, 0.03, 0.6)};
  c.patch(left_humerus, 0.68f, raster::stroke_polyline(lh, {hum_t, 1.0f, 1.0f}, size));
  c.patch(right_humerus, 0.68f, raster::stroke_polyline(rh, {hum_t, 1.0f, 1.0f}, size));

  // Smooth shading and grain.
  const double f1 = rng.uniform(2, 5), f2 = rng.uniform(2, 5), p1 = rng.uniform(0, 2 * kPi);
  GrayImage& img = c.image();
  for (int y = 0; y < size.height; ++y)
    for (int x = 0; x < size.width; ++x) {
      const double u = (x + 0.5) / size.width, v = (y + 0.5) / size.height;
      const double shade = 0.04 * std::sin(2 * kPi * f1 * u + p1) * std::cos(2 * kPi * f2 * v);
      const double grain = (rng.unit() - 0.5) * 0.03;
      float& px = img.at(x, y);
      px = static_cast<float>(std::clamp(px + shade + grain, 0.0, 1.0));
    }

  anatomy::LabelMap::Catalog catalog;
  const auto& names = anatomy_names();
  for (std::size_t i = 0; i < names.size(); ++i) catalog[static_cast<std::uint16_t>(i + 1)] = names[i];
  return {std::move(img), anatomy::LabelMap::create(size.width, size.height, std::move(c.labels()), catalog)};
}

cutpaste::Crop make_crop(std::uint64_t seed, int index) {
  Rng rng = SeedStream(seed).child(1).child(static_cast<std::uint64_t>(index)).engine();
  static const char* kinds[] = {"coin", "pacemaker", "screw", "wire", "electrode"};
  const int kind = index % 5;
  const int side = static_cast<int>(rng.uniform_int(28, 72));
  const Size canvas{side, side};
  const Point mid{(side - 1) / 2.0, (side - 1) / 2.0};
  const raster::FillStyle solid{1.0f, 1.0f};

  std::vector<AlphaPatch> parts;
  switch (kind) {
    case 0:
      parts.push_back(raster::fill_ellipse(mid, side * 0.35, side * 0.35, 0.0, solid, canvas));
      break;
    case 1:
      parts.push_back(raster::fill_ellipse(mid, side * 0.4, side * 0.28, rng.uniform(0, kPi), solid, canvas));
      parts.push_back(raster::stroke_polyline(
          std::vector<Point>{mid, {mid.x + side * 0.45, mid.y - side * 0.4}}, {2.5, 1.0f, 1.0f}, canvas));
      break;
    case 2:
      parts.push_back(raster::fill_oriented_box(mid, side * 0.8, side * 0.14 + 2, rng.uniform(0, kPi), solid, canvas));
      break;
    case 3:
      parts.push_back(raster::stroke_ellipse(mid, side * 0.33, side * 0.25, rng.uniform(0, kPi), {2.5, 1.0f, 1.0f},
                                             canvas));
      break;
    default:
      parts.push_back(raster::fill_ellipse(mid, side * 0.2, side * 0.2, 0.0, solid, canvas));
      parts.push_back(raster::stroke_ellipse(mid, side * 0.33, side * 0.33, 0.0, {2.0, 1.0f, 1.0f}, canvas));
      break;
  }

  cutpaste::Crop crop;
  crop.intensity = GrayImage(side, side);
  crop.mask = BinaryMask(side, side);
  crop.category = kinds[kind];
  char id[32];
  std::snprintf(id, sizeof id, "crop_%03d", index);
  crop.source_id = id;
  const float base = static_cast<float>(rng.uniform(0.85, 0.98));
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x) crop.intensity.at(x, y) = static_cast<float>(0.35 + rng.uniform(-0.03, 0.03));
  for (const auto& p : parts)
    for (int y = 0; y < p.height; ++y)
      for (int x = 0; x < p.width; ++x)
        if (p.in_footprint(x, y)) {
          crop.mask.set(p.origin.x + x, p.origin.y + y);
          crop.intensity.at(p.origin.x + x, p.origin.y + y) = base - static_cast<float>(rng.uniform(0, 0.05));
        }
  return cutpaste::tighten(crop);
}

CorpusPaths write_corpus(const std::string& dir, std::size_t count, Size size, std::size_t crop_count,
                         std::uint64_t seed) {
  const fs::path root(dir);
  fs::create_directories(root / "images");
  fs::create_directories(root / "anatomy");
  std::ofstream manifest(root / "manifest.txt");
  for (std::size_t i = 0; i < count; ++i) {
    char id[32];
    std::snprintf(id, sizeof id, "phantom_%04zu", i);
    const Phantom p = make_phantom(SeedStream(seed).child(i).key(), size);
    io::write_gray8((root / "images" / (std::string(id) + ".png")).string(), p.image);
    anatomy::save_label_map(p.labels, (root / "anatomy" / (std::string(id) + ".png")).string());
    manifest << id << '\n';
  }
  CorpusPaths paths{(root / "manifest.txt").string(), {}};
  if (crop_count > 0) {
    paths.crops = (root / "crops").string();
    for (std::size_t i = 0; i < crop_count; ++i) cutpaste::save_crop(make_crop(seed, static_cast<int>(i)), paths.crops);
  }
  return paths;
}

}  // namespace fbsynth::phantom
