// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "fbsynth/coco.hpp"
#include "fbsynth/error.hpp"
#include "fbsynth/extract.hpp"
#include "test_support.hpp"

using namespace fbsynth;
using namespace fbsynth::extract;
using fbsynth::testing::TempDir;

namespace {

GrayImage gradient_clean(int w, int h) {
  GrayImage img(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) img.at(x, y) = 0.2f + 0.6f * float(x + y) / float(w + h);
  return img;
}

void paint(ColorImage& img, const BinaryMask& m, float r, float g, float b) {
  for (int y = 0; y < m.height(); ++y)
    for (int x = 0; x < m.width(); ++x)
      if (m.at(x, y)) img.set(x, y, r, g, b);
}

BinaryMask rect_outline(Size s, BBox b) {
  BinaryMask m(s.width, s.height);
  for (int y = b.y; y < b.bottom(); ++y)
    for (int x = b.x; x < b.right(); ++x)
      if (x == b.x || y == b.y || x == b.right() - 1 || y == b.bottom() - 1) m.set(x, y);
  return m;
}

BinaryMask disk(Size s, int cx, int cy, int r) {
  BinaryMask m(s.width, s.height);
  for (int y = 0; y < s.height; ++y)
    for (int x = 0; x < s.width; ++x)
      if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r) m.set(x, y);
  return m;
}

}  // namespace

TEST_CASE("hue and hue bins") {
  CHECK(hue_degrees(1, 0, 0) == doctest::Approx(0));
  CHECK(hue_degrees(1, 1, 0) == doctest::Approx(60));
  CHECK(hue_degrees(0, 1, 0) == doctest::Approx(120));
  CHECK(hue_degrees(0, 1, 1) == doctest::Approx(180));
  CHECK(hue_degrees(0, 0, 1) == doctest::Approx(240));
  CHECK(hue_degrees(1, 0, 1) == doctest::Approx(300));
  CHECK(hue_degrees(0.5f, 0.5f, 0.5f) == 0.0);
  CHECK(hue_bin(0.0, 12) == 0);
  CHECK(hue_bin(14.9, 12) == 0);
  CHECK(hue_bin(15.0, 12) == 1);
  CHECK(hue_bin(345.0, 12) == 0);
  CHECK(hue_bin(344.9, 12) == 11);
  CHECK(hue_bin(120.0, 12) == 4);
  CHECK(hue_bin(200.0, 1) == 0);
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const double hue = rng.uniform(0.0, 359.999);
    const int b = hue_bin(hue, 12);
    double centre = b * 30.0, d = std::abs(hue - centre);
    d = std::min(d, 360.0 - d);
    CHECK(d <= 15.0 + 1e-9);
  }
}

TEST_CASE("extract_masks recovers painted strokes exactly") {
  const Size s{80, 60};
  const GrayImage clean = gradient_clean(s.width, s.height);
  ColorImage annotated = ColorImage::from_gray(clean);
  const BinaryMask red = rect_outline(s, {5, 5, 20, 15});
  const BinaryMask green = disk(s, 50, 20, 6);
  const BinaryMask tiny = disk(s, 70, 50, 1);  // 5 pixels, below min_area
  BinaryMask blue(s.width, s.height);
  for (int x = 10; x < 60; ++x) blue.set(x, 45);
  // Blue line touching the red outline is still a separate instance.
  for (int y = 20; y < 45; ++y) blue.set(10, y);
  paint(annotated, red, 1, 0, 0);
  paint(annotated, green, 0.1f, 0.9f, 0.1f);
  paint(annotated, tiny, 1, 1, 0);
  paint(annotated, blue, 0, 0, 1);

  const auto recs = extract_masks(annotated, clean);
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].mask.full() == red);
  CHECK(recs[1].mask.full() == green);
  CHECK(recs[2].mask.full() == blue);
  CHECK(recs[0].params["hue_bin"] == 0);
  CHECK(recs[1].params["hue_bin"] == 4);
  CHECK(recs[2].params["hue_bin"] == 8);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(recs[i].category == Category::cutpaste);
    CHECK(recs[i].z_order == int(i));
    CHECK(recs[i].params["source"] == "extracted");
  }

  ExtractParams loose;
  loose.min_area = 1;
  CHECK(extract_masks(annotated, clean, loose).size() == 4);
}

TEST_CASE("weakly colored strokes need a luma change") {
  const Size s{40, 40};
  const GrayImage clean(s.width, s.height, 0.5f);
  ColorImage annotated = ColorImage::from_gray(clean);
  // Chroma 0.1: below the main threshold, above the saturation floor.
  const BinaryMask faint = rect_outline(s, {2, 2, 10, 10});
  paint(annotated, faint, 0.5f, 0.45f, 0.4f);   // luma ~ 0.46, not enough change
  const BinaryMask dark = rect_outline(s, {20, 20, 10, 10});
  paint(annotated, dark, 0.25f, 0.15f, 0.15f);  // luma ~ 0.18
  const auto recs = extract_masks(annotated, clean);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].mask.full() == dark);
}

TEST_CASE("plain grayscale yields nothing; mismatched sizes are rejected") {
  Rng rng(2);
  GrayImage clean(32, 32);
  for (float& v : clean.data()) v = float(rng.unit());
  GrayImage edited = clean;
  for (int x = 0; x < 32; ++x) edited.at(x, 10) = 1.0f;  // gray edits carry no color
  CHECK(extract_masks(ColorImage::from_gray(edited), clean).empty());
  try {
    extract_masks(ColorImage(32, 31), clean);
    FAIL("expected alignment error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::alignment);
  }
}

TEST_CASE("extracted masks export as class-agnostic COCO") {
  const Size s{30, 30};
  const GrayImage clean(30, 30, 0.3f);
  ColorImage annotated = ColorImage::from_gray(clean);
  const BinaryMask m = disk(s, 15, 15, 5);
  paint(annotated, m, 0.9f, 0.1f, 0.8f);
  const auto recs = extract_masks(annotated, clean);
  REQUIRE(recs.size() == 1);
  TempDir dir("extract");
  export_extracted(recs, s, "scan.png", dir.str("ann.json"));
  const auto ds = coco::load_coco(dir.str("ann.json"));
  REQUIRE(ds.annotations.size() == 1);
  CHECK(ds.categories.at(1) == "foreign_body");
  CHECK(ds.images[0].file_name == "scan.png");
  CHECK(coco::rle_decode(ds.annotations[0].segmentation) == m);
  CHECK(ds.annotations[0].area == m.count());
}
