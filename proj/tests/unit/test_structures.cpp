// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "fbsynth/error.hpp"
#include "fbsynth/structures.hpp"
#include "test_support.hpp"

using namespace fbsynth;
using namespace fbsynth::structures;
using fbsynth::testing::count_components;
using fbsynth::testing::footprint_on;
using fbsynth::testing::map_from;

namespace {

constexpr double kPi = std::numbers::pi;

GenConfig unit_config() {
  GenConfig cfg;
  cfg.reference_width = 256;  // pixel quantities used as-is on 256 px canvases
  return cfg;
}

anatomy::LabelMap disk_map(int size, Point c, double r, std::uint16_t id = 1) {
  return map_from(size, size, [=](int x, int y) {
    return std::uint16_t(std::hypot(x - c.x, y - c.y) <= r ? id : 0);
  });
}

Point as_point(const nlohmann::json& j) { return {j[0].get<double>(), j[1].get<double>()}; }

double seg_distance(Point p, Point a, Point b) {
  const double vx = b.x - a.x, vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  double t = len2 > 0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * vx), p.y - (a.y + t * vy));
}

double polyline_distance(Point p, const std::vector<Point>& pts) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) d = std::min(d, seg_distance(p, pts[i], pts[i + 1]));
  return d;
}

bool touches_border(const AlphaPatch& p, Size canvas) {
  const BBox b = p.bounds();
  return b.x == 0 || b.y == 0 || b.right() == canvas.width || b.bottom() == canvas.height;
}

bool inside_canvas(const AlphaPatch& p, Size canvas) {
  const BBox b = p.bounds();
  return b.x >= 0 && b.y >= 0 && b.right() <= canvas.width && b.bottom() <= canvas.height;
}

}  // namespace

TEST_CASE("gen_text respects its parameter ranges") {
  const GenConfig cfg = unit_config();
  const Size canvas{256, 256};
  std::set<std::string> fonts;
  for (std::size_t f = 0; f < raster::font_count(); ++f) fonts.insert(std::string(raster::font_name(f)));
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Structure s = gen_text(cfg, canvas, rng);
    CHECK(s.spec.family == Category::text);
    CHECK(!s.spec.anchor_region);
    CHECK(inside_canvas(s.patch, canvas));
    CHECK(s.patch.footprint_count() > 0);
    const auto text = s.spec.params["text"].get<std::string>();
    CHECK(text.size() >= std::size_t(cfg.structures.text_min_length));
    CHECK(text.size() <= std::size_t(cfg.structures.text_max_length));
    for (char c : text) CHECK((c >= 33 && c <= 126));
    CHECK(fonts.count(s.spec.params["font"].get<std::string>()) == 1);
    CHECK(s.spec.params["scale"].get<int>() >= 1);
    CHECK(cfg.opacity.contains(s.spec.params["alpha"].get<double>()));
  }
}

TEST_CASE("gen_text shrinks to fit a tiny canvas") {
  GenConfig cfg = unit_config();
  cfg.structures.text_scale = {3.0, 3.0};
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    try {
      const Structure s = gen_text(cfg, Size{40, 40}, rng);
      CHECK(inside_canvas(s.patch, Size{40, 40}));
    } catch (const Error& e) {
      CHECK(e.code() == Errc::region_too_small);
    }
  }
}

TEST_CASE("gen_circular and gen_ring are anchored in the region") {
  const GenConfig cfg = unit_config();
  const auto map = disk_map(256, {128, 128}, 50, 4);
  const auto region = map.region(4);
  const double diag = std::hypot(region.bbox().w, region.bbox().h);
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const Structure c = gen_circular(cfg, region, rng);
    CHECK(c.spec.anchor_region == std::optional<std::uint16_t>(4));
    REQUIRE(c.spec.anchor_point);
    CHECK(region.contains(c.spec.anchor_point->x, c.spec.anchor_point->y));
    for (int k = 0; k < 2; ++k) {
      const double a = c.spec.params["semi_axes"][k].get<double>();
      CHECK(a >= std::max(cfg.structures.ellipse_axis_rel.lo * diag, cfg.structures.min_axis_px) - 1e-9);
      CHECK(a <= cfg.structures.ellipse_axis_rel.hi * diag + 1e-9);
    }
    CHECK(cfg.bright_intensity.contains(c.spec.params["intensity"].get<double>()));
    const auto fp = footprint_on(c.patch, map.size());
    CHECK(fp.at(c.spec.anchor_point->x, c.spec.anchor_point->y));

    const Structure r = gen_ring(cfg, region, rng);
    CHECK(r.spec.family == Category::ring);
    REQUIRE(r.spec.anchor_point);
    CHECK(region.contains(r.spec.anchor_point->x, r.spec.anchor_point->y));
    CHECK(cfg.structures.ring_thickness_px.contains(r.spec.params["thickness"].get<double>()));
    CHECK(r.patch.footprint_count() > 0);
  }
}

TEST_CASE("region families reject regions that are too small") {
  const GenConfig cfg = unit_config();
  const auto map = map_from(64, 64, [](int x, int y) { return std::uint16_t(x == 10 && y == 10); });
  Rng rng(1);
  for (auto gen : {gen_circular, gen_ring, gen_grid}) {
    try {
      gen(cfg, map.region(1), rng);
      FAIL("expected region_too_small");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::region_too_small);
    }
  }
  CHECK_THROWS_AS(gen_clips(cfg, map.region(1), rng), Error);
}

TEST_CASE("gen_rect fills its box") {
  const GenConfig cfg = unit_config();
  const Size canvas{200, 120};
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const Structure s = gen_rect(cfg, canvas, rng);
    const auto& b = s.spec.params["bbox"];
    const BBox box{b[0].get<int>(), b[1].get<int>(), b[2].get<int>(), b[3].get<int>()};
    CHECK(s.patch.bounds() == box);
    CHECK(s.patch.footprint_count() == static_cast<std::size_t>(box.w) * box.h);
    CHECK(inside_canvas(s.patch, canvas));
    CHECK(box.w >= 1);
    CHECK(box.w <= std::lround(cfg.structures.rect_size_rel.hi * canvas.width));
  }
}

TEST_CASE("gen_clips sit on the region boundary") {
  const GenConfig cfg = unit_config();
  const auto map = disk_map(256, {128, 128}, 40, 2);
  const auto region = map.region(2);
  const auto boundary = anatomy::region_boundary(region);
  const std::set<Pixel> on_boundary(boundary.begin(), boundary.end());
  const double max_angle = cfg.structures.clip_max_angle_deg * kPi / 180.0;
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const int budget = 1 + i % 6;
    const auto clips = gen_clips(cfg, region, rng, budget);
    CHECK(!clips.empty());
    CHECK(clips.size() <= std::size_t(budget));
    for (const auto& c : clips) {
      CHECK(c.spec.family == Category::clip);
      const Pixel mid{c.spec.params["midpoint"][0].get<int>(), c.spec.params["midpoint"][1].get<int>()};
      CHECK(on_boundary.count(mid) == 1);
      const double length = c.spec.params["length"].get<double>();
      const double thickness = c.spec.params["thickness"].get<double>();
      const double angle = c.spec.params["angle"].get<double>();
      CHECK(cfg.structures.clip_length_px.contains(length));
      CHECK(thickness <= length);
      CHECK(std::abs(angle - c.spec.params["normal_angle"].get<double>()) <= max_angle + 1e-12);

      // Extent of the footprint along the clip axis matches the length, and
      // its centroid matches the midpoint.
      double lo = 1e9, hi = -1e9, cx = 0, cy = 0;
      std::size_t n = 0;
      const BBox b = c.patch.bounds();
      for (int y = 0; y < b.h; ++y)
        for (int x = 0; x < b.w; ++x) {
          if (!c.patch.in_footprint(x, y)) continue;
          const double px = b.x + x, py = b.y + y;
          const double u = (px - mid.x) * std::cos(angle) + (py - mid.y) * std::sin(angle);
          lo = std::min(lo, u);
          hi = std::max(hi, u);
          cx += px;
          cy += py;
          ++n;
        }
      REQUIRE(n > 0);
      CHECK(std::abs((hi - lo + 1.0) - length) <= std::max(0.2 * length, 1.0));
      CHECK(std::hypot(cx / n - mid.x, cy / n - mid.y) <= 2.0);
    }
  }
}

TEST_CASE("grid layout without jitter covers the full lattice") {
  const auto map = map_from(200, 200, [](int x, int y) { return std::uint16_t(x >= 20 && x < 120 && y >= 30 && y < 90); });
  Rng rng(3);
  const auto g = build_grid_layout(map.region(1), 10.0, 0.0, rng);
  CHECK(g.columns == 10);
  CHECK(g.rows == 6);
  CHECK(g.nodes.size() == 60);
  CHECK(g.edges.size() == 9 * 6 + 10 * 5);
  const auto deg = g.degrees();
  CHECK(std::count(deg.begin(), deg.end(), 4) == 8 * 4);
  CHECK(std::count(deg.begin(), deg.end(), 2) == 4);

  CHECK_THROWS_AS(build_grid_layout(map.region(1), 0.0, 0.0, rng), Error);
  CHECK_THROWS_AS(build_grid_layout(map.region(1), 10.0, 0.3, rng), Error);
  CHECK_THROWS_AS(build_grid_layout(map.region(1), 60.0, 0.0, rng), Error);
}

TEST_CASE("grid layout properties on random regions") {
  Rng rng(101);
  int built = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const BinaryMask blob = fbsynth::testing::random_blob(96, 96, 300 + rng.below(2500), rng);
    const auto map = map_from(96, 96, [&](int x, int y) { return std::uint16_t(blob.at(x, y)); });
    const auto region = map.region(1);
    const double spacing = rng.uniform(3.0, 10.0);
    const double jitter = rng.uniform(0.0, 0.25);
    GridLayout g;
    try {
      g = build_grid_layout(region, spacing, jitter, rng);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::region_too_small);
      continue;
    }
    ++built;
    CHECK(g.nodes.size() <= std::size_t(g.columns) * g.rows);
    for (int d : g.degrees()) CHECK(d <= 4);
    for (const auto& n : g.nodes) {
      CHECK(region.contains(int(std::lround(n.position.x)), int(std::lround(n.position.y))));
      CHECK(std::abs(n.position.x - (region.bbox().x + n.i * spacing)) <= jitter * spacing + 1e-9);
      CHECK(std::abs(n.position.y - (region.bbox().y + n.j * spacing)) <= jitter * spacing + 1e-9);
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& [a, b] : g.edges) {
      CHECK(std::abs(g.nodes[a].i - g.nodes[b].i) + std::abs(g.nodes[a].j - g.nodes[b].j) == 1);
      CHECK(seen.insert({std::min(a, b), std::max(a, b)}).second);
    }
  }
  CHECK(built > 50);
}

TEST_CASE("gen_grid draws inside the canvas") {
  const GenConfig cfg = unit_config();
  const auto map = disk_map(256, {128, 128}, 80);
  Rng rng(6);
  for (int i = 0; i < 30; ++i) {
    const Structure s = gen_grid(cfg, map.region(1), rng);
    CHECK(inside_canvas(s.patch, map.size()));
    CHECK(s.patch.footprint_count() > 0);
    CHECK(s.spec.params["edges"].get<std::size_t>() > 0);
    REQUIRE(s.spec.anchor_point);
    CHECK(map.region(1).contains(s.spec.anchor_point->x, s.spec.anchor_point->y));
  }
}

TEST_CASE("lines start outside the body") {
  const GenConfig cfg = unit_config();
  const ImageAnatomy anatomy(disk_map(128, {64, 64}, 40));
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Structure line = gen_line(cfg, anatomy, rng);
    const Point start = as_point(line.spec.params["segments"][0][0]);
    CHECK(!anatomy.body().at(int(start.x), int(start.y)));
    CHECK(line.spec.params["segments"].size() <= std::size_t(cfg.structures.line_max_segments));

    const Structure tube = gen_parallel_lines(cfg, anatomy, rng);
    const Point tstart = as_point(tube.spec.params["segments"][0][0]);
    CHECK(!anatomy.body().at(int(tstart.x), int(tstart.y)));
    CHECK(tube.spec.params["segments"].size() <= std::size_t(cfg.structures.tube_max_segments));
  }

  const ImageAnatomy full(map_from(16, 16, [](int, int) { return std::uint16_t{1}; }));
  try {
    gen_line(cfg, full, rng);
    FAIL("expected no exterior start");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_exterior_start);
  }
  CHECK_THROWS_AS(gen_parallel_lines(cfg, full, rng), Error);
}

TEST_CASE("offset_tube keeps walls at half width") {
  const std::vector<Point> straight{{0, 0}, {10, 0}, {10, 0}, {20, 0}};
  const auto t = offset_tube(straight, 6.0);
  CHECK(t.center.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(t.left[i].y == doctest::Approx(3.0));
    CHECK(t.right[i].y == doctest::Approx(-3.0));
  }
  CHECK_THROWS_AS(offset_tube(std::vector<Point>{{1, 1}, {1, 1}}, 4.0), Error);

  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto chain = random_chain({rng.uniform(0, 255), rng.uniform(0, 255)}, 1 + int(rng.below(3)), Size{256, 256}, rng);
    const auto center = raster::simplify_polyline(chain.flatten());
    if (center.size() < 2) continue;
    const double d = rng.uniform(8.0, 24.0);
    const auto tube = offset_tube(center, d);
    for (std::size_t i = 0; i < tube.center.size(); ++i) {
      CHECK(std::hypot(tube.left[i].x - tube.center[i].x, tube.left[i].y - tube.center[i].y) ==
            doctest::Approx(d / 2));
      CHECK(std::hypot(tube.right[i].x - tube.center[i].x, tube.right[i].y - tube.center[i].y) ==
            doctest::Approx(d / 2));
      // At gentle joints the wall stays about d/2 from both adjacent segments.
      if (i == 0 || i + 1 == tube.center.size()) continue;
      const Point a = tube.center[i] - tube.center[i - 1], b = tube.center[i + 1] - tube.center[i];
      const double cosang = (a.x * b.x + a.y * b.y) / (std::hypot(a.x, a.y) * std::hypot(b.x, b.y));
      if (cosang < 0.99) continue;
      const std::vector<Point> local{tube.center[i - 1], tube.center[i], tube.center[i + 1]};
      CHECK(std::abs(polyline_distance(tube.left[i], local) - d / 2) <= 1.0);
      CHECK(std::abs(polyline_distance(tube.right[i], local) - d / 2) <= 1.0);
    }
  }
}

TEST_CASE("parallel lines: constant fill between 4-connected walls") {
  const GenConfig cfg = unit_config();
  const ImageAnatomy anatomy(disk_map(256, {128, 128}, 60));
  Rng rng(17);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const Structure s = gen_parallel_lines(cfg, anatomy, rng);
    const auto& p = s.spec.params;
    const float fill = p["fill_intensity"].get<float>(), wall = p["wall_intensity"].get<float>();
    const float fill_a = p["fill_alpha"].get<float>(), wall_a = p["wall_alpha"].get<float>();
    CHECK(cfg.structures.tube_fill_intensity.contains(fill));
    for (std::size_t k = 0; k < s.patch.alpha.size(); ++k) {
      if (s.patch.alpha[k] <= 0.0f) continue;
      const bool is_fill = s.patch.intensity[k] == fill && s.patch.alpha[k] == fill_a;
      const bool is_wall = s.patch.intensity[k] == wall && s.patch.alpha[k] == wall_a;
      CHECK((is_fill || is_wall));
    }
    if (touches_border(s.patch, anatomy.canvas())) continue;
    ++checked;
    CHECK(count_components(footprint_on(s.patch, anatomy.canvas()), false) == 1);
  }
  CHECK(checked > 10);
}

TEST_CASE("generators are reproducible from the stream") {
  const GenConfig cfg = unit_config();
  const ImageAnatomy anatomy(disk_map(256, {128, 128}, 60));
  const auto region = anatomy.map().region(1);
  const auto run = [&](std::uint64_t seed) {
    Rng rng(seed);
    std::vector<AlphaPatch> out;
    out.push_back(gen_text(cfg, anatomy.canvas(), rng).patch);
    out.push_back(gen_circular(cfg, region, rng).patch);
    out.push_back(gen_ring(cfg, region, rng).patch);
    out.push_back(gen_rect(cfg, anatomy.canvas(), rng).patch);
    for (auto& c : gen_clips(cfg, region, rng)) out.push_back(c.patch);
    out.push_back(gen_grid(cfg, region, rng).patch);
    out.push_back(gen_line(cfg, anatomy, rng).patch);
    out.push_back(gen_parallel_lines(cfg, anatomy, rng).patch);
    return out;
  };
  const auto a = run(5), b = run(5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].bounds() == b[i].bounds());
    CHECK(a[i].alpha == b[i].alpha);
    CHECK(a[i].intensity == b[i].intensity);
  }
}
