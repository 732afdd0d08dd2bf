// SPDX-License-Identifier: Apache-2.0
#include "fbsynth/structures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fbsynth/error.hpp"

namespace fbsynth::structures {
namespace {

using nlohmann::json;

json point_json(Point p) { return json::array({p.x, p.y}); }

float sample_f(const Range& r, Rng& rng) { return static_cast<float>(r.sample(rng)); }

Range full_intensity(const GenConfig& cfg) {
  return {std::min(cfg.dark_intensity.lo, cfg.bright_intensity.lo),
          std::max(cfg.dark_intensity.hi, cfg.bright_intensity.hi)};
}

// Either polarity with equal probability; returns the intensity and records which.
float sample_polar_intensity(const GenConfig& cfg, Rng& rng, bool& bright) {
  bright = rng.bernoulli(0.5);
  return sample_f(bright ? cfg.bright_intensity : cfg.dark_intensity, rng);
}

double min_axis(const GenConfig& cfg, Size canvas) {
  return std::max(1.0, cfg.structures.min_axis_px * pixel_scale(cfg, canvas));
}

// Semi-axis sampled relative to the region bbox diagonal, bounded below by `floor_px`.
double sample_axis(const GenConfig& cfg, const anatomy::RegionSample& region, double floor_px, Rng& rng) {
  const double diag = std::hypot(region.bbox().w, region.bbox().h);
  const Range& rel = cfg.structures.ellipse_axis_rel;
  const double lo = std::max(rel.lo * diag, floor_px);
  const double hi = rel.hi * diag;
  if (hi < lo) throw Error(Errc::region_too_small, "region too small");
  return rng.uniform(lo, hi);
}

Point to_point(Pixel p) { return {double(p.x), double(p.y)}; }

}  // namespace

ImageAnatomy::ImageAnatomy(anatomy::LabelMap map) : map_(std::move(map)), body_(anatomy::body_mask(map_)) {
  const auto bits = body_.bits();
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (!bits[i]) exterior_.push_back(static_cast<std::uint32_t>(i));
}

double pixel_scale(const GenConfig& cfg, Size canvas) {
  return static_cast<double>(canvas.width) / static_cast<double>(cfg.reference_width);
}

Structure gen_text(const GenConfig& cfg, Size canvas, Rng& rng) {
  const auto& s = cfg.structures;
  const auto length = rng.uniform_int(s.text_min_length, s.text_max_length);
  std::string text;
  for (std::int64_t i = 0; i < length; ++i) text.push_back(static_cast<char>(rng.uniform_int(33, 126)));
  const std::size_t font = rng.below(raster::font_count());
  const auto polarity = static_cast<raster::TextPolarity>(rng.below(3));
  int scale = std::max(1, static_cast<int>(std::lround(s.text_scale.sample(rng) * pixel_scale(cfg, canvas))));

  raster::FillStyle style{0.0f, sample_f(cfg.opacity, rng)};
  float box = 0.0f;
  bool bright = polarity == raster::TextPolarity::bright;
  if (polarity == raster::TextPolarity::boxed) {
    style.intensity = sample_polar_intensity(cfg, rng, bright);
    box = sample_f(bright ? cfg.dark_intensity : cfg.bright_intensity, rng);
  } else {
    style.intensity = sample_f(bright ? cfg.bright_intensity : cfg.dark_intensity, rng);
  }

  AlphaPatch patch = raster::render_text(text, font, scale, style, polarity, box);
  while ((patch.width > canvas.width || patch.height > canvas.height) && scale > 1)
    patch = raster::render_text(text, font, --scale, style, polarity, box);
  if (patch.width > canvas.width || patch.height > canvas.height)
    throw Error(Errc::region_too_small, "canvas too small for text");
  patch.origin = {static_cast<int>(rng.uniform_int(0, canvas.width - patch.width)),
                  static_cast<int>(rng.uniform_int(0, canvas.height - patch.height))};

  static constexpr const char* kPolarity[] = {"dark", "bright", "boxed"};
  StructureSpec spec{Category::text, std::nullopt, std::nullopt,
                     {{"text", text},
                      {"font", raster::font_name(font)},
                      {"scale", scale},
                      {"polarity", kPolarity[static_cast<int>(polarity)]},
                      {"intensity", style.intensity},
                      {"alpha", style.alpha},
                      {"origin", json::array({patch.origin.x, patch.origin.y})}}};
  if (polarity == raster::TextPolarity::boxed) spec.params["box_intensity"] = box;
  return {std::move(patch), std::move(spec)};
}

Structure gen_circular(const GenConfig& cfg, const anatomy::RegionSample& region, Rng& rng) {
  const Size canvas = region.canvas();
  const double floor_px = min_axis(cfg, canvas);
  const double a = sample_axis(cfg, region, floor_px, rng);
  const double b = sample_axis(cfg, region, floor_px, rng);
  const Pixel center = anatomy::sample_point_in_region(region, rng);
  const double rotation = rng.uniform(0.0, std::numbers::pi);
  const raster::FillStyle style{sample_f(cfg.bright_intensity, rng), sample_f(cfg.opacity, rng)};
  AlphaPatch patch = raster::fill_ellipse(to_point(center), a, b, rotation, style, canvas);
  return {std::move(patch),
          {Category::circular, region.label_id(), center,
           {{"center", json::array({center.x, center.y})},
            {"semi_axes", json::array({a, b})},
            {"rotation", rotation},
            {"intensity", style.intensity},
            {"alpha", style.alpha}}}};
}

Structure gen_ring(const GenConfig& cfg, const anatomy::RegionSample& region, Rng& rng) {
  const Size canvas = region.canvas();
  const double thickness = cfg.structures.ring_thickness_px.sample(rng) * pixel_scale(cfg, canvas);
  const double floor_px = std::max(min_axis(cfg, canvas), thickness / 2.0 + 1.0);
  const double a = sample_axis(cfg, region, floor_px, rng);
  const double b = sample_axis(cfg, region, floor_px, rng);
  const Pixel center = anatomy::sample_point_in_region(region, rng);
  const double rotation = rng.uniform(0.0, std::numbers::pi);
  const raster::StrokeStyle style{thickness, sample_f(cfg.bright_intensity, rng), sample_f(cfg.opacity, rng)};
  AlphaPatch patch = raster::stroke_ellipse(to_point(center), a, b, rotation, style, canvas);
  return {std::move(patch),
          {Category::ring, region.label_id(), center,
           {{"center", json::array({center.x, center.y})},
            {"semi_axes", json::array({a, b})},
            {"rotation", rotation},
            {"thickness", thickness},
            {"intensity", style.intensity},
            {"alpha", style.alpha}}}};
}

Structure gen_rect(const GenConfig& cfg, Size canvas, Rng& rng) {
  const auto& rel = cfg.structures.rect_size_rel;
  const int w = std::clamp(static_cast<int>(std::lround(rel.sample(rng) * canvas.width)), 1, canvas.width);
  const int h = std::clamp(static_cast<int>(std::lround(rel.sample(rng) * canvas.height)), 1, canvas.height);
  const BBox box{static_cast<int>(rng.uniform_int(0, canvas.width - w)),
                 static_cast<int>(rng.uniform_int(0, canvas.height - h)), w, h};
  const raster::FillStyle style{sample_f(full_intensity(cfg), rng), sample_f(cfg.opacity, rng)};
  AlphaPatch patch = raster::fill_rect(box, style, canvas);
  return {std::move(patch),
          {Category::rectangular, std::nullopt, std::nullopt,
           {{"bbox", json::array({box.x, box.y, box.w, box.h})},
            {"intensity", style.intensity},
            {"alpha", style.alpha}}}};
}

std::vector<Structure> gen_clips(const GenConfig& cfg, const anatomy::RegionSample& region, Rng& rng,
                                 int max_count) {
  const auto& s = cfg.structures;
  const Size canvas = region.canvas();
  const double scale = pixel_scale(cfg, canvas);
  const auto boundary = anatomy::region_boundary(region);
  if (static_cast<double>(boundary.size()) < std::max(2.0, s.clip_length_px.lo * scale))
    throw Error(Errc::region_too_small, "region too small");

  const int count = static_cast<int>(rng.uniform_int(1, std::max(1, std::min(s.clip_max_count, max_count))));
  const double max_angle = s.clip_max_angle_deg * std::numbers::pi / 180.0;
  const float intensity = sample_f(cfg.bright_intensity, rng);
  const float alpha = sample_f(cfg.opacity, rng);

  std::vector<Structure> out;
  for (int c = 0; c < count; ++c) {
    const double length = std::max(2.0, s.clip_length_px.sample(rng) * scale);
    const double thickness = std::min(length, std::max(1.0, s.clip_thickness_px.sample(rng) * scale));
    const std::size_t i = rng.below(boundary.size());
    const Pixel mid = boundary[i];

    // Outward normal from the contour tangent over a +-2 vertex window.
    const Pixel a = boundary[i >= 2 ? i - 2 : 0];
    const Pixel b = boundary[std::min(i + 2, boundary.size() - 1)];
    double nx = double(b.y - a.y), ny = -double(b.x - a.x);
    double base_angle;
    if (nx == 0.0 && ny == 0.0) {
      base_angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    } else {
      const double n = std::hypot(nx, ny);
      nx /= n;
      ny /= n;
      if (region.contains(static_cast<int>(std::lround(mid.x + 2 * nx)), static_cast<int>(std::lround(mid.y + 2 * ny)))) {
        nx = -nx;
        ny = -ny;
      }
      base_angle = std::atan2(ny, nx);
    }
    const double angle = base_angle + rng.uniform(-max_angle, max_angle);
    try {
      AlphaPatch patch =
          raster::fill_oriented_box(to_point(mid), length, thickness, angle, {intensity, alpha}, canvas);
      out.push_back({std::move(patch),
                     {Category::clip, region.label_id(), mid,
                      {{"midpoint", json::array({mid.x, mid.y})},
                       {"angle", angle},
                       {"normal_angle", base_angle},
                       {"length", length},
                       {"thickness", thickness},
                       {"intensity", intensity},
                       {"alpha", alpha}}}});
    } catch (const Error& e) {
      if (e.code() != Errc::empty_footprint) throw;
    }
  }
  if (out.empty()) throw Error(Errc::region_too_small, "region too small");
  return out;
}

std::vector<int> GridLayout::degrees() const {
  std::vector<int> deg(nodes.size(), 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

GridLayout build_grid_layout(const anatomy::RegionSample& region, double spacing, double jitter, Rng& rng) {
  if (!(spacing > 0.0)) throw Error(Errc::domain, "grid spacing must be positive");
  if (jitter < 0.0 || jitter > 0.25) throw Error(Errc::domain, "grid jitter must lie in [0, 0.25]");
  const BBox& box = region.bbox();
  if (static_cast<double>(region.area()) < 4.0 * spacing * spacing)
    throw Error(Errc::region_too_small, "region too small");

  GridLayout g;
  g.spacing = spacing;
  g.columns = static_cast<int>(std::ceil(box.w / spacing));
  g.rows = static_cast<int>(std::ceil(box.h / spacing));
  const double amp = jitter * spacing;
  std::vector<std::ptrdiff_t> slot(static_cast<std::size_t>(g.columns) * g.rows, -1);
  for (int j = 0; j < g.rows; ++j)
    for (int i = 0; i < g.columns; ++i) {
      const double x = box.x + i * spacing + rng.uniform(-amp, amp);
      const double y = box.y + j * spacing + rng.uniform(-amp, amp);
      if (!region.contains(static_cast<int>(std::lround(x)), static_cast<int>(std::lround(y)))) continue;
      slot[static_cast<std::size_t>(j) * g.columns + i] = static_cast<std::ptrdiff_t>(g.nodes.size());
      g.nodes.push_back({i, j, {x, y}});
    }
  for (const auto& n : g.nodes) {
    const std::size_t self = static_cast<std::size_t>(slot[static_cast<std::size_t>(n.j) * g.columns + n.i]);
    if (n.i + 1 < g.columns) {
      const auto right = slot[static_cast<std::size_t>(n.j) * g.columns + n.i + 1];
      if (right >= 0) g.edges.emplace_back(self, static_cast<std::size_t>(right));
    }
    if (n.j + 1 < g.rows) {
      const auto down = slot[static_cast<std::size_t>(n.j + 1) * g.columns + n.i];
      if (down >= 0) g.edges.emplace_back(self, static_cast<std::size_t>(down));
    }
  }
  if (g.nodes.size() < 2) throw Error(Errc::region_too_small, "region too small");
  return g;
}

Structure gen_grid(const GenConfig& cfg, const anatomy::RegionSample& region, Rng& rng) {
  const auto& s = cfg.structures;
  const Size canvas = region.canvas();
  const double scale = pixel_scale(cfg, canvas);
  const double spacing = std::max(2.0, s.grid_spacing_px.sample(rng) * scale);
  const GridLayout grid = build_grid_layout(region, spacing, s.grid_jitter, rng);
  if (grid.edges.empty()) throw Error(Errc::region_too_small, "region too small");

  const double thickness = s.grid_thickness_px.sample(rng) * scale;
  const double radius = std::max(thickness / 2.0, raster::kMinStrokeRadius);
  const float base = sample_f(cfg.bright_intensity, rng);
  const float alpha = sample_f(cfg.opacity, rng);

  const BBox box = region.bbox().expanded(static_cast<int>(std::ceil(spacing * 0.25 + radius)) + 1)
                       .intersect({0, 0, canvas.width, canvas.height});
  AlphaPatch patch(box.w, box.h, {box.x, box.y});
  for (const auto& [a, b] : grid.edges) {
    const double shade = rng.uniform(-s.grid_shade_jitter, s.grid_shade_jitter);
    const auto edge_intensity = static_cast<float>(
        std::clamp(base + shade, cfg.bright_intensity.lo, cfg.bright_intensity.hi));
    const std::array<Point, 2> seg = {grid.nodes[a].position, grid.nodes[b].position};
    raster::stamp_polyline(patch, seg, radius, edge_intensity, alpha);
  }
  patch.trim();

  const Pixel anchor{static_cast<int>(std::lround(grid.nodes.front().position.x)),
                     static_cast<int>(std::lround(grid.nodes.front().position.y))};
  return {std::move(patch),
          {Category::grid, region.label_id(), anchor,
           {{"spacing", spacing},
            {"jitter", s.grid_jitter},
            {"thickness", thickness},
            {"base_intensity", base},
            {"alpha", alpha},
            {"nodes", grid.nodes.size()},
            {"edges", grid.edges.size()},
            {"lattice", json::array({grid.columns, grid.rows})}}}};
}

raster::BezierChain random_chain(Point start, int segments, Size canvas, Rng& rng) {
  std::vector<raster::CubicSegment> segs;
  Point p0 = start;
  const auto random_point = [&] {
    return Point{rng.uniform(0.0, canvas.width - 1.0), rng.uniform(0.0, canvas.height - 1.0)};
  };
  for (int i = 0; i < segments; ++i) {
    raster::CubicSegment seg{p0, random_point(), random_point(), random_point()};
    segs.push_back(seg);
    p0 = seg[3];
  }
  return raster::BezierChain(std::move(segs));
}

namespace {

Point exterior_start(const ImageAnatomy& anatomy, Rng& rng) {
  const auto& ext = anatomy.exterior();
  if (ext.empty()) throw Error(Errc::no_exterior_start, "no exterior start point");
  const std::uint32_t idx = ext[rng.below(ext.size())];
  const int w = anatomy.canvas().width;
  return {double(idx % w), double(idx / w)};
}

json chain_json(const raster::BezierChain& chain) {
  json segs = json::array();
  for (const auto& seg : chain.segments())
    segs.push_back(json::array({point_json(seg[0]), point_json(seg[1]), point_json(seg[2]), point_json(seg[3])}));
  return segs;
}

}  // namespace

Structure gen_line(const GenConfig& cfg, const ImageAnatomy& anatomy, Rng& rng) {
  const Size canvas = anatomy.canvas();
  const Point start = exterior_start(anatomy, rng);
  const int segments = static_cast<int>(rng.uniform_int(1, cfg.structures.line_max_segments));
  const auto chain = random_chain(start, segments, canvas, rng);
  bool bright = false;
  const float intensity = sample_polar_intensity(cfg, rng, bright);
  const raster::StrokeStyle style{cfg.structures.line_thickness_px.sample(rng) * pixel_scale(cfg, canvas),
                                  intensity, sample_f(cfg.opacity, rng)};
  AlphaPatch patch = raster::stroke_chain(chain, style, canvas);
  return {std::move(patch),
          {Category::line, std::nullopt, std::nullopt,
           {{"segments", chain_json(chain)},
            {"thickness", style.thickness},
            {"intensity", style.intensity},
            {"alpha", style.alpha}}}};
}

TubeOutline offset_tube(std::span<const Point> center, double width) {
  TubeOutline t;
  for (const Point& p : center)
    if (t.center.empty() || !(p == t.center.back())) t.center.push_back(p);
  const std::size_t n = t.center.size();
  if (n < 2) throw Error(Errc::empty_footprint, "empty footprint: degenerate tube");

  const auto seg_normal = [&](std::size_t i) {
    const Point d = t.center[i + 1] - t.center[i];
    const double len = std::hypot(d.x, d.y);
    return Point{-d.y / len, d.x / len};
  };
  const double h = width / 2.0;
  for (std::size_t i = 0; i < n; ++i) {
    Point nrm;
    if (i == 0) {
      nrm = seg_normal(0);
    } else if (i + 1 == n) {
      nrm = seg_normal(n - 2);
    } else {
      const Point a = seg_normal(i - 1), b = seg_normal(i);
      nrm = a + b;
      const double len = std::hypot(nrm.x, nrm.y);
      nrm = len > 1e-9 ? Point{nrm.x / len, nrm.y / len} : b;
    }
    t.left.push_back(t.center[i] + h * nrm);
    t.right.push_back(t.center[i] - h * nrm);
  }
  return t;
}

Structure gen_parallel_lines(const GenConfig& cfg, const ImageAnatomy& anatomy, Rng& rng) {
  const auto& s = cfg.structures;
  const Size canvas = anatomy.canvas();
  const double scale = pixel_scale(cfg, canvas);
  const Point start = exterior_start(anatomy, rng);
  const int segments = static_cast<int>(rng.uniform_int(1, s.tube_max_segments));
  const auto chain = random_chain(start, segments, canvas, rng);
  const double width = s.tube_width_px.sample(rng) * scale;
  const double wall = s.tube_wall_px.sample(rng) * scale;
  const float wall_intensity = sample_f(cfg.bright_intensity, rng);
  const float wall_alpha = sample_f(cfg.opacity, rng);
  const float fill_intensity = sample_f(s.tube_fill_intensity, rng);
  const float fill_alpha = sample_f(cfg.opacity, rng);

  const auto flat = chain.flatten();
  const auto tube = offset_tube(raster::simplify_polyline(flat), width);
  const double wall_r = std::max(wall / 2.0, raster::kMinStrokeRadius);
  const BBox box = raster::polyline_bounds(tube.center, width / 2.0 + wall_r + 1.0)
                       .intersect({0, 0, canvas.width, canvas.height});
  if (box.empty()) throw Error(Errc::empty_footprint, "empty footprint: tube outside canvas");
  AlphaPatch patch(box.w, box.h, {box.x, box.y});
  raster::stamp_polyline(patch, tube.center, width / 2.0, fill_intensity, fill_alpha);
  raster::stamp_polyline(patch, tube.left, wall_r, wall_intensity, wall_alpha);
  raster::stamp_polyline(patch, tube.right, wall_r, wall_intensity, wall_alpha);
  patch.trim();

  return {std::move(patch),
          {Category::parallel_lines, std::nullopt, std::nullopt,
           {{"segments", chain_json(chain)},
            {"width", width},
            {"wall", wall},
            {"wall_intensity", wall_intensity},
            {"wall_alpha", wall_alpha},
            {"fill_intensity", fill_intensity},
            {"fill_alpha", fill_alpha}}}};
}

}  // namespace fbsynth::structures
