// SPDX-License-Identifier: Apache-2.0
#include "fbsynth/raster.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fbsynth/error.hpp"
#include "font_data.hpp"

namespace fbsynth::raster {
namespace {

constexpr int kMaxFlattenSteps = 4096;
constexpr double kSimplifyTolerance = 0.04;
constexpr double kSimplifyRun = 4.0;

void require_visible(float alpha) {
  if (!(alpha > 0.0f)) throw Error(Errc::empty_footprint, "empty footprint: zero alpha");
}

BBox canvas_box(Size canvas) { return {0, 0, canvas.width, canvas.height}; }

BBox point_bounds(Point a, Point b, double r) {
  const int x0 = static_cast<int>(std::floor(std::min(a.x, b.x) - r));
  const int y0 = static_cast<int>(std::floor(std::min(a.y, b.y) - r));
  const int x1 = static_cast<int>(std::ceil(std::max(a.x, b.x) + r));
  const int y1 = static_cast<int>(std::ceil(std::max(a.y, b.y) + r));
  return {x0, y0, x1 - x0 + 1, y1 - y0 + 1};
}

template <typename Inside>
AlphaPatch rasterize(const BBox& bounds, Size canvas, float intensity, float alpha, Inside&& inside) {
  require_visible(alpha);
  const BBox box = bounds.intersect(canvas_box(canvas));
  if (box.empty()) throw Error(Errc::empty_footprint, "empty footprint: shape outside canvas");
  AlphaPatch patch(box.w, box.h, {box.x, box.y});
  bool any = false;
  for (int y = 0; y < box.h; ++y)
    for (int x = 0; x < box.w; ++x)
      if (inside(static_cast<double>(box.x + x), static_cast<double>(box.y + y))) {
        patch.intensity[patch.index(x, y)] = intensity;
        patch.alpha[patch.index(x, y)] = alpha;
        any = true;
      }
  if (!any) throw Error(Errc::empty_footprint, "empty footprint");
  patch.trim();
  return patch;
}

}  // namespace

BezierChain::BezierChain(std::vector<CubicSegment> segments) : segments_(std::move(segments)) {
  if (segments_.empty() || segments_.size() > kMaxSegments)
    throw Error(Errc::domain, "Bezier chain needs 1 to 5 segments");
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i)
    if (!(segments_[i][3] == segments_[i + 1][0])) throw Error(Errc::domain, "Bezier chain is not C0-continuous");
}

std::vector<Point> BezierChain::flatten() const {
  std::vector<Point> out;
  for (std::size_t s = 0; s < segments_.size(); ++s) {
    const auto& seg = segments_[s];
    double x0 = seg[0].x, x1 = seg[0].x, y0 = seg[0].y, y1 = seg[0].y;
    for (const Point& p : seg) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
    const double diag = std::ceil(std::hypot(x1 - x0, y1 - y0));
    const int steps = std::clamp(static_cast<int>(16.0 * std::max(diag, 1.0)), 1, kMaxFlattenSteps);
    for (int k = (s == 0 ? 0 : 1); k <= steps; ++k)
      out.push_back(eval_cubic_bezier(seg, static_cast<double>(k) / steps));
  }
  return out;
}

Point eval_cubic_bezier(const CubicSegment& seg, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(Errc::domain, "Bezier parameter outside [0,1]");
  const double u = 1.0 - t;
  const double b0 = u * u * u, b1 = 3.0 * u * u * t, b2 = 3.0 * u * t * t, b3 = t * t * t;
  return {b0 * seg[0].x + b1 * seg[1].x + b2 * seg[2].x + b3 * seg[3].x,
          b0 * seg[0].y + b1 * seg[1].y + b2 * seg[2].y + b3 * seg[3].y};
}

double distance_to_segment(Point p, Point a, Point b) {
  const Point ab = b - a;
  const Point ap = p - a;
  const double len2 = ab.x * ab.x + ab.y * ab.y;
  double t = len2 > 0.0 ? (ap.x * ab.x + ap.y * ab.y) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(ap.x - t * ab.x, ap.y - t * ab.y);
}

std::size_t stamp_polyline(AlphaPatch& patch, std::span<const Point> pts, double radius, float intensity,
                           float alpha) {
  const BBox box = patch.bounds();
  std::size_t written = 0;
  const auto stamp = [&](Point a, Point b) {
    const BBox seg = point_bounds(a, b, radius).intersect(box);
    for (int y = seg.y; y < seg.bottom(); ++y)
      for (int x = seg.x; x < seg.right(); ++x) {
        if (distance_to_segment({double(x), double(y)}, a, b) > radius) continue;
        const std::size_t idx = patch.index(x - box.x, y - box.y);
        patch.alpha[idx] = alpha;
        patch.intensity[idx] = intensity;
        ++written;
      }
  };
  if (pts.size() == 1) stamp(pts[0], pts[0]);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) stamp(pts[i], pts[i + 1]);
  return written;
}

BBox polyline_bounds(std::span<const Point> pts, double radius) {
  BBox bounds;
  for (std::size_t i = 0; i < pts.size(); ++i)
    bounds = bounds.unite(point_bounds(pts[i], pts[std::min(i + 1, pts.size() - 1)], radius));
  return bounds;
}

AlphaPatch stroke_polyline(std::span<const Point> polyline, const StrokeStyle& style, Size canvas) {
  if (!(style.thickness > 0.0)) throw Error(Errc::domain, "stroke thickness must be positive");
  require_visible(style.alpha);
  if (polyline.empty()) throw Error(Errc::empty_footprint, "empty footprint: no points");
  double length = 0.0;
  for (std::size_t i = 1; i < polyline.size(); ++i)
    length += std::hypot(polyline[i].x - polyline[i - 1].x, polyline[i].y - polyline[i - 1].y);
  if (length <= 0.0) throw Error(Errc::empty_footprint, "empty footprint: zero-length stroke");

  const std::vector<Point> pts = simplify_polyline(polyline);
  const double r = std::max(style.thickness / 2.0, kMinStrokeRadius);
  const BBox box = polyline_bounds(pts, r).intersect(canvas_box(canvas));
  if (box.empty()) throw Error(Errc::empty_footprint, "empty footprint: stroke outside canvas");
  AlphaPatch patch(box.w, box.h, {box.x, box.y});
  if (stamp_polyline(patch, pts, r, style.intensity, style.alpha) == 0)
    throw Error(Errc::empty_footprint, "empty footprint");
  patch.trim();
  return patch;
}

// Drops vertices while the chord stays within kSimplifyTolerance of every
// dropped vertex; runs are capped at kSimplifyRun px to bound the work.
std::vector<Point> simplify_polyline(std::span<const Point> in) {
  std::vector<Point> out{in.front()};
  std::size_t anchor = 0;
  for (std::size_t i = 1; i < in.size(); ++i) {
    bool keep_prev = std::hypot(in[i].x - in[anchor].x, in[i].y - in[anchor].y) > kSimplifyRun;
    for (std::size_t k = anchor + 1; k < i && !keep_prev; ++k)
      keep_prev = distance_to_segment(in[k], in[anchor], in[i]) > kSimplifyTolerance;
    if (keep_prev && i - 1 > anchor) {
      anchor = i - 1;
      out.push_back(in[anchor]);
    }
  }
  if (in.size() > 1) out.push_back(in.back());
  if (out.size() == 1) out.push_back(out.front());
  return out;
}

AlphaPatch stroke_chain(const BezierChain& chain, const StrokeStyle& style, Size canvas) {
  const auto pts = chain.flatten();
  return stroke_polyline(pts, style, canvas);
}

EllipseTest::EllipseTest(Point center, double a, double b, double rotation) : c_(center), a_(a), b_(b) {
  if (!(a > 0.0 && b > 0.0)) throw Error(Errc::domain, "ellipse semi-axes must be positive");
  double theta = std::fmod(rotation, std::numbers::pi);
  if (theta < 0.0) theta += std::numbers::pi;
  cos_ = std::cos(theta);
  sin_ = std::sin(theta);
  if (std::abs(sin_) < 1e-12) {
    sin_ = 0.0;
    cos_ = cos_ < 0.0 ? -1.0 : 1.0;
  } else if (std::abs(cos_) < 1e-12) {
    cos_ = 0.0;
    sin_ = 1.0;
  }
}

double EllipseTest::level(double x, double y) const {
  const double dx = x - c_.x, dy = y - c_.y;
  const double u = (dx * cos_ + dy * sin_) / a_;
  const double v = (dy * cos_ - dx * sin_) / b_;
  return u * u + v * v;
}

bool EllipseTest::inside(double x, double y) const { return level(x, y) <= 1.0; }

BBox EllipseTest::bounds() const {
  const double ex = std::sqrt(a_ * a_ * cos_ * cos_ + b_ * b_ * sin_ * sin_);
  const double ey = std::sqrt(a_ * a_ * sin_ * sin_ + b_ * b_ * cos_ * cos_);
  const int x0 = static_cast<int>(std::floor(c_.x - ex)) - 1;
  const int y0 = static_cast<int>(std::floor(c_.y - ey)) - 1;
  const int x1 = static_cast<int>(std::ceil(c_.x + ex)) + 1;
  const int y1 = static_cast<int>(std::ceil(c_.y + ey)) + 1;
  return {x0, y0, x1 - x0 + 1, y1 - y0 + 1};
}

AlphaPatch fill_ellipse(Point center, double a, double b, double rotation, const FillStyle& style, Size canvas) {
  const EllipseTest e(center, a, b, rotation);
  return rasterize(e.bounds(), canvas, style.intensity, style.alpha, [&](double x, double y) { return e.inside(x, y); });
}

AlphaPatch stroke_ellipse(Point center, double a, double b, double rotation, const StrokeStyle& style,
                          Size canvas) {
  if (!(a > 0.0 && b > 0.0)) throw Error(Errc::domain, "ellipse semi-axes must be positive");
  if (!(style.thickness > 0.0)) throw Error(Errc::domain, "stroke thickness must be positive");
  if (style.thickness >= 2.0 * std::min(a, b)) throw Error(Errc::degenerate_ring, "degenerate ring");
  const double h = style.thickness / 2.0;
  const EllipseTest outer(center, a + h, b + h, rotation);
  const EllipseTest inner(center, a - h, b - h, rotation);
  return rasterize(outer.bounds(), canvas, style.intensity, style.alpha,
                   [&](double x, double y) { return outer.inside(x, y) && !inner.inside(x, y); });
}

AlphaPatch fill_rect(const BBox& box, const FillStyle& style, Size canvas) {
  if (box.w < 1 || box.h < 1) throw Error(Errc::domain, "rectangle must have positive area");
  return rasterize(box, canvas, style.intensity, style.alpha, [](double, double) { return true; });
}

AlphaPatch fill_oriented_box(Point center, double length, double thickness, double angle, const FillStyle& style,
                             Size canvas) {
  if (!(length > 0.0 && thickness > 0.0)) throw Error(Errc::domain, "box dimensions must be positive");
  const double c = std::cos(angle), s = std::sin(angle);
  const double hl = length / 2.0, ht = thickness / 2.0;
  const double ex = std::abs(c) * hl + std::abs(s) * ht;
  const double ey = std::abs(s) * hl + std::abs(c) * ht;
  const BBox bounds = point_bounds({center.x - ex, center.y - ey}, {center.x + ex, center.y + ey}, 1.0);
  return rasterize(bounds, canvas, style.intensity, style.alpha, [&](double x, double y) {
    const double dx = x - center.x, dy = y - center.y;
    return std::abs(dx * c + dy * s) <= hl && std::abs(dy * c - dx * s) <= ht;
  });
}

std::size_t font_count() { return detail::kFontCount; }

std::string_view font_name(std::size_t font_id) {
  if (font_id >= detail::kFontCount) throw Error(Errc::domain, "unknown font id");
  return detail::kFonts[font_id].name;
}

int font_height(std::size_t font_id) {
  if (font_id >= detail::kFontCount) throw Error(Errc::domain, "unknown font id");
  return detail::kFonts[font_id].height;
}

BinaryMask glyph_bitmap(std::size_t font_id, char c) {
  if (font_id >= detail::kFontCount) throw Error(Errc::domain, "unknown font id");
  if (c < detail::kFirstGlyph || c > detail::kLastGlyph) throw Error(Errc::domain, "non-printable character");
  const auto& font = detail::kFonts[font_id];
  const std::uint32_t* rows = font.rows + static_cast<std::size_t>(c - detail::kFirstGlyph) * font.height;
  BinaryMask out(font.cell_width, font.height);
  for (int y = 0; y < font.height; ++y)
    for (int x = 0; x < font.cell_width; ++x)
      if ((rows[y] >> x) & 1u) out.set(x, y);
  return out;
}

AlphaPatch render_text(std::string_view text, std::size_t font_id, int scale, const FillStyle& style,
                       TextPolarity polarity, float box_intensity) {
  if (text.empty()) throw Error(Errc::domain, "text must be non-empty");
  if (scale < 1) throw Error(Errc::domain, "text scale must be >= 1");
  if (font_id >= detail::kFontCount) throw Error(Errc::domain, "unknown font id");
  for (char c : text)
    if (c < detail::kFirstGlyph || c > detail::kLastGlyph) throw Error(Errc::domain, "non-printable character in text");
  require_visible(style.alpha);

  const auto& font = detail::kFonts[font_id];
  std::vector<int> pen;
  int width = 0, x = 0;
  for (char c : text) {
    pen.push_back(x);
    width = std::max(width, x + font.cell_width);
    x += font.advance[c - detail::kFirstGlyph] + 1;
  }
  const bool boxed = polarity == TextPolarity::boxed;
  const int margin = boxed ? scale : 0;
  AlphaPatch patch(width * scale + 2 * margin, font.height * scale + 2 * margin, {0, 0});
  if (boxed) {
    std::fill(patch.alpha.begin(), patch.alpha.end(), 1.0f);
    std::fill(patch.intensity.begin(), patch.intensity.end(), box_intensity);
  }
  const float ink = boxed ? style.alpha * style.intensity + (1.0f - style.alpha) * box_intensity : style.intensity;
  const float ink_alpha = boxed ? 1.0f : style.alpha;

  bool any = boxed;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const std::uint32_t* rows =
        font.rows + static_cast<std::size_t>(text[i] - detail::kFirstGlyph) * font.height;
    for (int gy = 0; gy < font.height; ++gy)
      for (int gx = 0; gx < font.cell_width; ++gx) {
        if (!((rows[gy] >> gx) & 1u)) continue;
        any = true;
        for (int sy = 0; sy < scale; ++sy)
          for (int sx = 0; sx < scale; ++sx) {
            const std::size_t idx = patch.index(margin + (pen[i] + gx) * scale + sx, margin + gy * scale + sy);
            patch.intensity[idx] = ink;
            patch.alpha[idx] = ink_alpha;
          }
      }
  }
  if (!any) throw Error(Errc::empty_footprint, "empty footprint: text has no ink");
  return patch;
}

}  // namespace fbsynth::raster
