// SPDX-License-Identifier: Apache-2.0
#pragma once

// Rasterization primitives. A pixel belongs to a shape iff its center does;
// pixel (x, y) has its center at the point (x, y). Every primitive clips to
// the canvas and throws Errc::empty_footprint when nothing is left.

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "fbsynth/image.hpp"

namespace fbsynth::raster {

using CubicSegment = std::array<Point, 4>;

class BezierChain {
 public:
  static constexpr std::size_t kMaxSegments = 5;

  /// Throws Errc::domain unless 1..5 segments joined end to start.
  explicit BezierChain(std::vector<CubicSegment> segments);

  const std::vector<CubicSegment>& segments() const { return segments_; }
  Point start() const { return segments_.front()[0]; }

  /// Samples every segment at a fixed parameter step of
  /// 1 / (16 * ceil(segment bbox diagonal)), capped at 4096 steps.
  std::vector<Point> flatten() const;

 private:
  std::vector<CubicSegment> segments_;
};

struct StrokeStyle {
  double thickness = 1.0;
  float intensity = 1.0f;
  float alpha = 1.0f;
};

struct FillStyle {
  float intensity = 1.0f;
  float alpha = 1.0f;
};

Point eval_cubic_bezier(const CubicSegment& seg, double t);

/// Minimum stroke radius: keeps every polyline point's nearest pixel inside
/// the footprint even for hairline strokes.
inline constexpr double kMinStrokeRadius = 0.75;

/// Drops vertices while the chord stays within 0.04 px of every dropped one.
std::vector<Point> simplify_polyline(std::span<const Point> in);
BBox polyline_bounds(std::span<const Point> pts, double radius);
/// Writes intensity/alpha to every pixel of `patch` within `radius` of the
/// polyline, overwriting earlier values. Returns the number of writes.
std::size_t stamp_polyline(AlphaPatch& patch, std::span<const Point> pts, double radius, float intensity,
                           float alpha);

/// Pixels within max(thickness/2, kMinStrokeRadius) of the polyline.
AlphaPatch stroke_polyline(std::span<const Point> polyline, const StrokeStyle& style, Size canvas);
AlphaPatch stroke_chain(const BezierChain& chain, const StrokeStyle& style, Size canvas);

/// Rotated ellipse membership test shared by fill/stroke; rotation is reduced
/// modulo pi so symmetric inputs give bit-identical footprints.
class EllipseTest {
 public:
  EllipseTest(Point center, double a, double b, double rotation);
  bool inside(double x, double y) const;
  /// Value of the normalized quadratic form; <= 1 inside.
  double level(double x, double y) const;
  BBox bounds() const;

 private:
  Point c_;
  double a_, b_, cos_, sin_;
};

AlphaPatch fill_ellipse(Point center, double a, double b, double rotation, const FillStyle& style, Size canvas);
/// Annulus between the ellipses with semi-axes (a ± t/2, b ± t/2).
AlphaPatch stroke_ellipse(Point center, double a, double b, double rotation, const StrokeStyle& style,
                          Size canvas);
AlphaPatch fill_rect(const BBox& box, const FillStyle& style, Size canvas);
/// Box of the given length/thickness centered at `center`, long axis at `angle`.
AlphaPatch fill_oriented_box(Point center, double length, double thickness, double angle,
                             const FillStyle& style, Size canvas);

enum class TextPolarity { dark, bright, boxed };

std::size_t font_count();
std::string_view font_name(std::size_t font_id);
int font_height(std::size_t font_id);

/// Glyph bitmap for one printable character at scale 1.
BinaryMask glyph_bitmap(std::size_t font_id, char c);

/// Renders printable ASCII with an embedded bitmap font, nearest-neighbor
/// scaled. Glyph pixels take `style`; `boxed` adds an opaque background box
/// of `box_intensity` with a one-cell margin. The patch origin is (0, 0).
AlphaPatch render_text(std::string_view text, std::size_t font_id, int scale, const FillStyle& style,
                       TextPolarity polarity, float box_intensity = 0.0f);

/// Distance from p to segment [a, b].
double distance_to_segment(Point p, Point a, Point b);

}  // namespace fbsynth::raster
