// SPDX-License-Identifier: Apache-2.0
#include "fbsynth/image.hpp"

#include <algorithm>

#include "fbsynth/error.hpp"

namespace fbsynth {

BBox BBox::intersect(const BBox& o) const {
  const int x0 = std::max(x, o.x);
  const int y0 = std::max(y, o.y);
  const int x1 = std::min(right(), o.right());
  const int y1 = std::min(bottom(), o.bottom());
  if (x1 <= x0 || y1 <= y0) return {x0, y0, 0, 0};
  return {x0, y0, x1 - x0, y1 - y0};
}

BBox BBox::unite(const BBox& o) const {
  if (empty()) return o;
  if (o.empty()) return *this;
  const int x0 = std::min(x, o.x);
  const int y0 = std::min(y, o.y);
  return {x0, y0, std::max(right(), o.right()) - x0, std::max(bottom(), o.bottom()) - y0};
}

GrayImage::GrayImage(int width, int height, float fill)
    : width_(width), height_(height), data_(static_cast<std::size_t>(width) * height, fill) {
  if (width < 0 || height < 0) throw Error(Errc::domain, "negative image dimensions");
}

GrayImage::GrayImage(int width, int height, std::vector<float> data)
    : width_(width), height_(height), data_(std::move(data)) {
  if (width < 0 || height < 0 || data_.size() != static_cast<std::size_t>(width) * height)
    throw Error(Errc::domain, "image data length does not match dimensions");
}

BinaryMask::BinaryMask(int width, int height, bool fill)
    : width_(width), height_(height), bits_(static_cast<std::size_t>(width) * height, fill ? 1 : 0) {
  if (width < 0 || height < 0) throw Error(Errc::domain, "negative mask dimensions");
}

std::size_t BinaryMask::count() const {
  return static_cast<std::size_t>(std::count_if(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b != 0; }));
}

BBox BinaryMask::bounds() const {
  int x0 = width_, y0 = height_, x1 = -1, y1 = -1;
  for (int y = 0; y < height_; ++y) {
    const std::uint8_t* row = bits_.data() + static_cast<std::size_t>(y) * width_;
    for (int x = 0; x < width_; ++x) {
      if (!row[x]) continue;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = y;
    }
  }
  if (x1 < 0) return {};
  return {x0, y0, x1 - x0 + 1, y1 - y0 + 1};
}

BinaryMask BinaryMask::crop(const BBox& box) const {
  BinaryMask out(box.w, box.h);
  for (int y = 0; y < box.h; ++y)
    for (int x = 0; x < box.w; ++x)
      if (get(box.x + x, box.y + y)) out.set(x, y);
  return out;
}

AlphaPatch::AlphaPatch(int w, int h, Pixel at)
    : width(w), height(h), intensity(static_cast<std::size_t>(w) * h, 0.0f),
      alpha(static_cast<std::size_t>(w) * h, 0.0f), origin(at) {}

std::size_t AlphaPatch::footprint_count() const {
  return static_cast<std::size_t>(std::count_if(alpha.begin(), alpha.end(), [](float a) { return a > 0.0f; }));
}

BinaryMask AlphaPatch::footprint(Size canvas) const {
  BinaryMask out(canvas.width, canvas.height);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      if (in_footprint(x, y) && canvas.contains(origin.x + x, origin.y + y)) out.set(origin.x + x, origin.y + y);
  return out;
}

void AlphaPatch::trim() {
  int x0 = width, y0 = height, x1 = -1, y1 = -1;
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      if (in_footprint(x, y)) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
      }
  if (x1 < 0) throw Error(Errc::empty_footprint, "empty footprint");
  if (x0 == 0 && y0 == 0 && x1 == width - 1 && y1 == height - 1) return;
  AlphaPatch out(x1 - x0 + 1, y1 - y0 + 1, {origin.x + x0, origin.y + y0});
  for (int y = 0; y < out.height; ++y)
    for (int x = 0; x < out.width; ++x) {
      out.intensity[out.index(x, y)] = intensity[index(x0 + x, y0 + y)];
      out.alpha[out.index(x, y)] = alpha[index(x0 + x, y0 + y)];
    }
  *this = std::move(out);
}

}  // namespace fbsynth
