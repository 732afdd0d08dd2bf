// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fbsynth {

struct Size {
  int width = 0;
  int height = 0;

  std::size_t area() const { return static_cast<std::size_t>(width) * height; }
  bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width && y < height; }
  friend bool operator==(const Size&, const Size&) = default;
};

struct Pixel {
  int x = 0;
  int y = 0;
  friend bool operator==(const Pixel&, const Pixel&) = default;
  friend auto operator<=>(const Pixel&, const Pixel&) = default;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

/// Axis-aligned pixel box; (x, y) is the top-left pixel, w/h are inclusive counts.
struct BBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  bool empty() const { return w <= 0 || h <= 0; }
  int right() const { return x + w; }    // exclusive
  int bottom() const { return y + h; }   // exclusive
  bool contains(int px, int py) const { return px >= x && py >= y && px < right() && py < bottom(); }
  BBox expanded(int by) const { return {x - by, y - by, w + 2 * by, h + 2 * by}; }
  BBox intersect(const BBox& o) const;
  BBox unite(const BBox& o) const;
  friend bool operator==(const BBox&, const BBox&) = default;
};

/// Single-channel raster with intensities in [0,1], row-major.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, float fill = 0.0f);
  GrayImage(int width, int height, std::vector<float> data);

  int width() const { return width_; }
  int height() const { return height_; }
  Size size() const { return {width_, height_}; }
  bool empty() const { return data_.empty(); }

  float at(int x, int y) const { return data_[index(x, y)]; }
  float& at(int x, int y) { return data_[index(x, y)]; }
  std::span<const float> data() const { return data_; }
  std::span<float> data() { return data_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width_ + x; }

  int width_ = 0;
  int height_ = 0;
  std::vector<float> data_;
};

/// Binary raster (0/1 bytes), row-major.
class BinaryMask {
 public:
  BinaryMask() = default;
  BinaryMask(int width, int height, bool fill = false);

  int width() const { return width_; }
  int height() const { return height_; }
  Size size() const { return {width_, height_}; }

  bool at(int x, int y) const { return bits_[index(x, y)] != 0; }
  bool get(int x, int y) const { return Size{width_, height_}.contains(x, y) && at(x, y); }
  void set(int x, int y, bool v = true) { bits_[index(x, y)] = v ? 1 : 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::span<std::uint8_t> bits() { return bits_; }

  std::size_t count() const;
  /// Tight bounds of the set pixels; empty box when nothing is set.
  BBox bounds() const;
  BinaryMask crop(const BBox& box) const;

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width_ + x; }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Rendered structure or crop: intensity + per-pixel alpha placed at `origin`
/// in canvas coordinates. The footprint is the set of pixels with alpha > 0.
struct AlphaPatch {
  int width = 0;
  int height = 0;
  std::vector<float> intensity;
  std::vector<float> alpha;
  Pixel origin;

  AlphaPatch() = default;
  AlphaPatch(int w, int h, Pixel at);

  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
  BBox bounds() const { return {origin.x, origin.y, width, height}; }
  bool in_footprint(int x, int y) const { return alpha[index(x, y)] > 0.0f; }
  std::size_t footprint_count() const;
  /// Footprint in canvas coordinates as a canvas-sized mask.
  BinaryMask footprint(Size canvas) const;
  /// Shrinks the patch to the tight bounds of its footprint.
  void trim();
};

}  // namespace fbsynth
