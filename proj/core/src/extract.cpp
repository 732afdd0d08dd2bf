// SPDX-License-Identifier: Apache-2.0
#include "fbsynth/extract.hpp"

#include <algorithm>
#include <cmath>

#include "fbsynth/coco.hpp"

namespace fbsynth::extract {

ColorImage::ColorImage(int width, int height) : width_(width), height_(height) {
  if (width <= 0 || height <= 0) throw Error(Errc::domain, "color image dimensions must be positive");
  data_.assign(3 * static_cast<std::size_t>(width) * height, 0.0f);
}

ColorImage ColorImage::from_rgb8(const io::Rgb8& img) {
  ColorImage out(img.width, img.height);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = img.data[i] / 255.0f;
  return out;
}

ColorImage ColorImage::from_gray(const GrayImage& img) {
  ColorImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) out.set(x, y, img.at(x, y), img.at(x, y), img.at(x, y));
  return out;
}

void ColorImage::set(int x, int y, float r, float g, float b) {
  float* p = &data_[3 * (static_cast<std::size_t>(y) * width_ + x)];
  p[0] = r;
  p[1] = g;
  p[2] = b;
}

double hue_degrees(float r, float g, float b) {
  const float mx = std::max({r, g, b}), mn = std::min({r, g, b});
  const double c = mx - mn;
  if (c <= 0.0) return 0.0;
  double h;
  if (mx == r)
    h = std::fmod((g - b) / c, 6.0);
  else if (mx == g)
    h = (b - r) / c + 2.0;
  else
    h = (r - g) / c + 4.0;
  h *= 60.0;
  return h < 0.0 ? h + 360.0 : h;
}

int hue_bin(double hue, int bins) {
  const double width = 360.0 / bins;
  const int b = static_cast<int>(std::floor((hue + width / 2.0) / width));
  return b % bins;
}

std::vector<InstanceRecord> extract_masks(const ColorImage& annotated, const GrayImage& clean,
                                          const ExtractParams& params) {
  if (annotated.size() != clean.size())
    throw Error(Errc::alignment, "alignment error: annotated " + std::to_string(annotated.width()) + "x" +
                                     std::to_string(annotated.height()) + " vs clean " +
                                     std::to_string(clean.width()) + "x" + std::to_string(clean.height()));
  if (params.hue_bins < 1) throw Error(Errc::domain, "hue_bins must be positive");
  const int w = annotated.width(), h = annotated.height();

  // -1 marks non-candidates; otherwise the hue bin.
  std::vector<int> bin(static_cast<std::size_t>(w) * h, -1);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const float* p = annotated.at(x, y);
      const double chroma = std::max({p[0], p[1], p[2]}) - std::min({p[0], p[1], p[2]});
      const double luma = 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
      const bool colored = chroma > params.chroma_threshold ||
                           (chroma > params.min_saturation && std::abs(luma - clean.at(x, y)) > params.luma_threshold);
      if (colored) bin[static_cast<std::size_t>(y) * w + x] = hue_bin(hue_degrees(p[0], p[1], p[2]), params.hue_bins);
    }

  std::vector<InstanceRecord> out;
  std::vector<std::uint8_t> seen(bin.size(), 0);
  std::vector<Pixel> stack, comp;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * w + x;
      if (bin[i] < 0 || seen[i]) continue;
      const int b = bin[i];
      comp.clear();
      stack.assign(1, {x, y});
      seen[i] = 1;
      BBox box{x, y, 1, 1};
      while (!stack.empty()) {
        const Pixel p = stack.back();
        stack.pop_back();
        comp.push_back(p);
        box = box.unite({p.x, p.y, 1, 1});
        for (int dy = -1; dy <= 1; ++dy)
          for (int dx = -1; dx <= 1; ++dx) {
            const int nx = p.x + dx, ny = p.y + dy;
            if ((dx == 0 && dy == 0) || nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
            const std::size_t j = static_cast<std::size_t>(ny) * w + nx;
            if (bin[j] == b && !seen[j]) {
              seen[j] = 1;
              stack.push_back({nx, ny});
            }
          }
      }
      if (static_cast<int>(comp.size()) < params.min_area) continue;
      BinaryMask local(box.w, box.h);
      for (const Pixel& p : comp) local.set(p.x - box.x, p.y - box.y);
      InstanceRecord rec;
      rec.mask = InstanceMask::from_local(local, {box.x, box.y}, annotated.size());
      rec.category = Category::cutpaste;
      rec.z_order = static_cast<int>(out.size());
      rec.params = {{"hue_bin", b}, {"source", "extracted"}};
      out.push_back(std::move(rec));
    }
  return out;
}

void export_extracted(const std::vector<InstanceRecord>& records, Size size, const std::string& file_name,
                      const std::string& path) {
  coco::write_coco({{file_name, size, records}}, CategoriesMode::class_agnostic, path);
}

}  // namespace fbsynth::extract
