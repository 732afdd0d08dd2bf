// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <set>

#include "fbsynth/coco.hpp"
#include "fbsynth/error.hpp"
#include "fbsynth/image_io.hpp"
#include "fbsynth/preview.hpp"
#include "test_support.hpp"

using namespace fbsynth;
using namespace fbsynth::preview;
using fbsynth::testing::TempDir;

namespace {

InstanceRecord box_record(Size s, BBox b, Category c) {
  BinaryMask m(s.width, s.height);
  for (int y = b.y; y < b.bottom(); ++y)
    for (int x = b.x; x < b.right(); ++x) m.set(x, y);
  InstanceRecord r;
  r.mask = InstanceMask::from_canvas(m);
  r.category = c;
  return r;
}

Color pixel(const io::Rgb8& img, int x, int y) {
  const std::size_t i = 3 * (static_cast<std::size_t>(y) * img.width + x);
  return {img.data[i], img.data[i + 1], img.data[i + 2]};
}

}  // namespace

TEST_CASE("category colors are distinct and saturated") {
  std::set<Color> seen;
  for (std::size_t i = 0; i < kCategoryCount; ++i) {
    const Color c = category_color(static_cast<Category>(i));
    CHECK(seen.insert(c).second);
    CHECK(std::max({c[0], c[1], c[2]}) - std::min({c[0], c[1], c[2]}) >= 100);
  }
}

TEST_CASE("contour of a box is its outline") {
  BinaryMask m(10, 10);
  for (int y = 2; y < 7; ++y)
    for (int x = 3; x < 8; ++x) m.set(x, y);
  const BinaryMask c = contour(m);
  CHECK(c.count() == 16);
  CHECK(!c.at(5, 4));
  CHECK(c.at(3, 2));

  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const BinaryMask r = fbsynth::testing::random_mask(12, 9, rng.unit(), rng);
    const BinaryMask rc = contour(r);
    for (int y = 0; y < 9; ++y)
      for (int x = 0; x < 12; ++x) {
        const bool outside = !r.get(x - 1, y) || !r.get(x + 1, y) || !r.get(x, y - 1) || !r.get(x, y + 1);
        CHECK(rc.at(x, y) == (r.at(x, y) && outside));
      }
  }
}

TEST_CASE("render_preview draws contours in category colors") {
  const Size s{64, 48};
  GrayImage img(64, 48, 0.5f);
  const auto ring = box_record(s, {10, 10, 8, 8}, Category::ring);
  const auto text = box_record(s, {30, 20, 10, 6}, Category::text);
  const io::Rgb8 out = render_preview(img, {ring, text});
  CHECK(out.width == 64);
  CHECK(out.height > 48);
  CHECK(pixel(out, 10, 10) == category_color(Category::ring));
  CHECK(pixel(out, 30, 20) == category_color(Category::text));
  const Color gray = pixel(out, 13, 13);
  CHECK(gray[0] == gray[1]);
  CHECK(gray[1] == gray[2]);
  CHECK(pixel(out, 0, 0) == Color{io::to_u8(0.5f), io::to_u8(0.5f), io::to_u8(0.5f)});

  // The legend shows both colors somewhere below the image.
  std::set<Color> legend;
  for (int y = 48; y < out.height; ++y)
    for (int x = 0; x < out.width; ++x) legend.insert(pixel(out, x, y));
  CHECK(legend.count(category_color(Category::ring)) == 1);
  CHECK(legend.count(category_color(Category::text)) == 1);
  CHECK(legend.count(category_color(Category::grid)) == 0);
}

TEST_CASE("run_preview reads a dataset directory") {
  TempDir dir("preview");
  std::filesystem::create_directories(dir.path() / "images");
  const Size s{32, 32};
  std::vector<coco::CocoImageSpec> specs;
  for (int i = 0; i < 3; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "images/%06d.png", i);
    io::write_gray8(dir.str(name), GrayImage(32, 32, 0.1f * float(i + 1)));
    specs.push_back({name, s, {box_record(s, {4 + i, 4, 6, 6}, Category::clip)}});
  }
  coco::write_coco(specs, CategoriesMode::per_family, dir.str("annotations.json"));
  const auto written = run_preview(dir.str(), 2, dir.str("out"));
  REQUIRE(written.size() == 2);
  for (const auto& p : written) {
    const io::Rgb8 img = io::read_rgb(p);
    CHECK(img.width == 32);
    CHECK(pixel(img, 5, 4) == category_color(Category::clip));
  }

  TempDir empty("preview_empty");
  coco::write_coco({}, CategoriesMode::per_family, empty.str("annotations.json"));
  try {
    run_preview(empty.str(), 2, empty.str("out"));
    FAIL("expected format error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::format);
  }
}
