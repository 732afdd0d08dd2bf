// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fbsynth/cutpaste.hpp"
#include "fbsynth/error.hpp"
#include "fbsynth/image_io.hpp"
#include "test_support.hpp"

using namespace fbsynth;
using namespace fbsynth::cutpaste;
using fbsynth::testing::map_from;
using fbsynth::testing::TempDir;

namespace {

Crop blob_crop(const std::string& id, int w, int h, Rng& rng, std::size_t target) {
  Crop c;
  c.source_id = id;
  c.category = "foreign_body";
  c.mask = fbsynth::testing::random_blob(w, h, target, rng);
  c.intensity = GrayImage(w, h);
  for (float& v : c.intensity.data()) v = static_cast<float>(rng.unit());
  return tighten(c);
}

BinaryMask mirror(const BinaryMask& m) {
  BinaryMask out(m.width(), m.height());
  for (int y = 0; y < m.height(); ++y)
    for (int x = 0; x < m.width(); ++x) out.set(x, y, m.at(m.width() - 1 - x, y));
  return out;
}

}  // namespace

TEST_CASE("CropLibrary sorts and indexes") {
  Rng rng(1);
  std::vector<Crop> crops{blob_crop("c", 10, 10, rng, 20), blob_crop("a", 10, 10, rng, 20), blob_crop("b", 10, 10, rng, 20)};
  crops[0].category = "wire";
  const CropLibrary lib(crops);
  REQUIRE(lib.size() == 3);
  CHECK(lib[0].source_id == "a");
  CHECK(lib[2].source_id == "c");
  CHECK(lib.by_category("wire") == std::vector<std::size_t>{2});
  CHECK(lib.by_category("foreign_body") == std::vector<std::size_t>{0, 1});
  CHECK(lib.by_category("none").empty());
}

TEST_CASE("tighten keeps a one-pixel context margin") {
  Crop c;
  c.intensity = GrayImage(20, 20, 0.5f);
  c.mask = BinaryMask(20, 20);
  c.mask.set(5, 7);
  c.mask.set(9, 8);
  const Crop t = tighten(c);
  CHECK(t.mask.size() == Size{7, 4});
  CHECK(t.mask.bounds() == BBox{1, 1, 5, 2});
  CHECK(t.mask.count() == 2);

  c.mask = BinaryMask(20, 20);
  c.mask.set(0, 19);
  const Crop edge = tighten(c);
  CHECK(edge.mask.size() == Size{2, 2});
  CHECK(edge.mask.at(0, 1));
  CHECK(edge.mask.count() == 1);

  c.mask = BinaryMask(20, 20);
  CHECK_THROWS_AS(tighten(c), Error);
}

TEST_CASE("crop library save/load round trip and warnings") {
  TempDir dir("crops");
  Rng rng(2);
  const Crop a = blob_crop("a", 30, 20, rng, 80);
  Crop b = blob_crop("b", 16, 16, rng, 40);
  b.category = "coin";
  save_crop(a, dir.str());
  save_crop(b, dir.str());

  // Broken pairs: missing mask, mismatched dimensions, empty mask.
  io::write_gray8(dir.str("lonely.png"), GrayImage(4, 4, 0.5f));
  io::write_gray8(dir.str("mismatch.png"), GrayImage(4, 4, 0.5f));
  io::write_mask(dir.str("mismatch.mask.png"), BinaryMask(5, 4, true));
  io::write_gray8(dir.str("blank.png"), GrayImage(4, 4, 0.5f));
  io::write_mask(dir.str("blank.mask.png"), BinaryMask(4, 4));
  // No sidecar: default category.
  io::write_gray8(dir.str("plain.png"), GrayImage(3, 3, 0.25f));
  io::write_mask(dir.str("plain.mask.png"), BinaryMask(3, 3, true));

  const auto loaded = load_crop_library(dir.str());
  CHECK(loaded.warnings.size() == 3);
  REQUIRE(loaded.library.size() == 3);
  const Crop& la = loaded.library[0];
  CHECK(la.source_id == "a");
  CHECK(la.mask == a.mask);
  for (std::size_t i = 0; i < la.intensity.data().size(); ++i)
    CHECK(std::abs(la.intensity.data()[i] - a.intensity.data()[i]) <= 0.5f / 255.0f + 1e-6f);
  CHECK(loaded.library[1].category == "coin");
  CHECK(loaded.library[2].category == "foreign_body");
  CHECK(loaded.library[2].mask.size() == Size{3, 3});

  TempDir empty("nocrops");
  try {
    load_crop_library(empty.str());
    FAIL("expected io error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::io);
  }
  CHECK_THROWS_AS(load_crop_library(empty.str("missing")), Error);
}

TEST_CASE("augmentation: identity, flip and gain") {
  Rng rng(3);
  const Crop c = blob_crop("x", 24, 24, rng, 120);
  const Crop same = apply_augmentation(c, AugmentDraw{});
  CHECK(same.mask == c.mask);
  CHECK(same.intensity == c.intensity);

  const Crop flipped = apply_augmentation(c, AugmentDraw{true, 0.0, 1.0, 1.0});
  CHECK(flipped.mask == mirror(c.mask));
  CHECK(apply_augmentation(flipped, AugmentDraw{true, 0.0, 1.0, 1.0}).mask == c.mask);

  const Crop bright = apply_augmentation(c, AugmentDraw{false, 0.0, 1.0, 1.5});
  CHECK(bright.mask == c.mask);
  for (std::size_t i = 0; i < c.intensity.data().size(); ++i)
    CHECK(bright.intensity.data()[i] == std::min(1.0f, static_cast<float>(c.intensity.data()[i] * 1.5)));
}

TEST_CASE("augmentation: rotation and scale preserve area approximately") {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Crop c = blob_crop("x", 60, 60, rng, 800 + rng.below(1000));
    const AugmentDraw d{rng.bernoulli(0.5), rng.uniform(-15, 15), rng.uniform(0.7, 1.3), rng.uniform(0.8, 1.2)};
    const Crop out = apply_augmentation(c, d);
    const double ratio = double(out.mask.count()) / double(c.mask.count());
    CHECK(ratio == doctest::Approx(d.scale * d.scale).epsilon(0.15));
    CHECK(out.mask.bounds().x == 1);
    CHECK(out.mask.bounds().y == 1);
    for (float v : out.intensity.data()) CHECK((v >= 0.0f && v <= 1.0f));
  }

  // Rotating by 180 degrees maps the mask onto its point reflection.
  const Crop c = blob_crop("y", 30, 30, rng, 200);
  const Crop r = apply_augmentation(c, AugmentDraw{false, 180.0, 1.0, 1.0});
  REQUIRE(r.mask.size() == c.mask.size());
  for (int y = 0; y < c.mask.height(); ++y)
    for (int x = 0; x < c.mask.width(); ++x)
      CHECK(r.mask.at(x, y) == c.mask.at(c.mask.width() - 1 - x, c.mask.height() - 1 - y));
}

TEST_CASE("augment_crop gives up on vanishing crops") {
  Crop dot;
  // A lone off-center pixel vanishes when the crop shrinks to one sample.
  dot.intensity = GrayImage(9, 9, 0.5f);
  dot.mask = BinaryMask(9, 9);
  dot.mask.set(1, 1);
  dot.source_id = "dot";
  AugmentParams p;
  p.scale = {0.05, 0.05};
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    try {
      augment_crop(dot, rng, p);
      FAIL("expected region_too_small");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::region_too_small);
    }
  }
  p.scale = {1.0, 1.0};
  CHECK(augment_crop(dot, rng, p).mask.count() >= 1);
}

TEST_CASE("paste_crop places the crop at an in-region anchor") {
  Rng rng(6);
  const auto map = map_from(128, 128, [](int x, int y) { return std::uint16_t(x >= 40 && x < 90 && y >= 30 && y < 100 ? 3 : 0); });
  for (int i = 0; i < 30; ++i) {
    const Crop c = blob_crop("p", 20, 16, rng, 60);
    const GrayImage before(128, 128, 0.1f);
    GrayImage canvas = before;
    const auto res = paste_crop(canvas, c, map.region(3), BlendMode::direct, rng, {});
    REQUIRE(res.record.anchor_point);
    const Pixel anchor = *res.record.anchor_point;
    CHECK(map.at(anchor.x, anchor.y) == 3);
    CHECK(res.record.anchor_anatomy == std::optional<std::uint16_t>(3));
    CHECK(res.record.category == Category::cutpaste);
    CHECK(res.record.params["source_id"] == "p");
    CHECK(res.record.params["blend_applied"] == "direct");
    const Pixel origin{anchor.x - c.intensity.width() / 2, anchor.y - c.intensity.height() / 2};
    CHECK(res.record.mask.area() == c.mask.count());
    for (int y = 0; y < 128; ++y)
      for (int x = 0; x < 128; ++x) {
        const int lx = x - origin.x, ly = y - origin.y;
        const bool in = c.mask.get(lx, ly);
        CHECK(res.record.mask.contains(x, y) == in);
        CHECK(canvas.at(x, y) == (in ? c.intensity.at(lx, ly) : before.at(x, y)));
      }
  }
}

TEST_CASE("paste_crop fails when the crop cannot fit") {
  Rng rng(7);
  const auto map = map_from(32, 32, [](int, int) { return std::uint16_t{1}; });
  Crop big;
  big.source_id = "big";
  big.intensity = GrayImage(40, 40, 0.5f);
  big.mask = BinaryMask(40, 40, true);
  GrayImage canvas(32, 32, 0.0f);
  try {
    paste_crop(canvas, big, map.region(1), BlendMode::poisson_normal, rng, {});
    FAIL("expected placement failure");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::placement_failed);
  }
  CHECK(canvas == GrayImage(32, 32, 0.0f));
}
