// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <map>
#include <set>

#include "fbsynth/anatomy.hpp"
#include "fbsynth/error.hpp"
#include "test_support.hpp"

using namespace fbsynth;
using namespace fbsynth::anatomy;
using fbsynth::testing::map_from;
using fbsynth::testing::TempDir;

namespace {

// Dilate then erode with a disk, straight from the definition.
BinaryMask brute_close(const BinaryMask& m, int r) {
  const int w = m.width(), h = m.height();
  BinaryMask dil(w, h), out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      bool any = false;
      for (int dy = -r; dy <= r && !any; ++dy)
        for (int dx = -r; dx <= r && !any; ++dx)
          if (dx * dx + dy * dy <= r * r) any = m.get(x + dx, y + dy);
      dil.set(x, y, any);
    }
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      bool all = true;
      for (int dy = -r; dy <= r && all; ++dy)
        for (int dx = -r; dx <= r && all; ++dx) {
          if (dx * dx + dy * dy > r * r) continue;
          const int nx = x + dx, ny = y + dy;
          if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
          all = dil.at(nx, ny);
        }
      out.set(x, y, all);
    }
  return out;
}

BinaryMask union_mask(const LabelMap& map) {
  BinaryMask m(map.width(), map.height());
  for (int y = 0; y < map.height(); ++y)
    for (int x = 0; x < map.width(); ++x) m.set(x, y, map.at(x, y) != 0);
  return m;
}

}  // namespace

TEST_CASE("LabelMap creation and validation") {
  const auto empty = map_from(8, 8, [](int, int) { return std::uint16_t{0}; });
  CHECK(empty.region_ids().empty());

  std::vector<std::uint16_t> labels(16, 0);
  labels[3] = 3;
  labels[7] = 7;
  try {
    LabelMap::create(4, 4, labels, {{3, "a"}});
    FAIL("expected unknown label");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_label);
    CHECK(std::string(e.what()).find("unknown label id 7") != std::string::npos);
  }
  CHECK_THROWS_AS(LabelMap::create(4, 5, labels, {{3, "a"}, {7, "b"}}), Error);

  LabelMap::Catalog big;
  for (std::uint16_t i = 1; i <= kMaxCatalogSize + 1; ++i) big[i] = "x";
  CHECK_THROWS_AS(LabelMap::create(4, 4, labels, big), Error);

  const auto ok = LabelMap::create(4, 4, labels, {{3, "a"}, {7, "b"}});
  CHECK(ok.region_ids() == std::vector<std::uint16_t>{3, 7});
  CHECK(ok.region(3).area() == 1);
  CHECK(ok.region(7).pixel(0) == Pixel{3, 1});
}

TEST_CASE("label map save/load round trip") {
  TempDir dir("labels");
  const auto map = map_from(40, 30, [](int x, int y) { return static_cast<std::uint16_t>((x / 10 + y / 10) % 4 * 100); });
  const std::string path = dir.str("m.png");
  save_label_map(map, path);
  const auto back = load_label_map(path, Size{40, 30});
  CHECK(back.labels() == map.labels());
  CHECK(back.catalog() == map.catalog());
  CHECK_THROWS_AS(load_label_map(path, Size{41, 30}), Error);
  CHECK_THROWS_AS(load_label_map(dir.str("missing.png")), Error);
}

TEST_CASE("sample_regions") {
  const auto single = map_from(10, 10, [](int x, int) { return std::uint16_t(x < 5 ? 2 : 0); });
  Rng rng(3);
  const auto one = sample_regions(single, rng, 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0].label_id() == 2);

  const auto quads = map_from(20, 20, [](int x, int y) { return std::uint16_t(1 + (x >= 10) + 2 * (y >= 10)); });
  const auto all = sample_regions(quads, rng, 4);
  std::set<std::uint16_t> ids;
  for (const auto& r : all) ids.insert(r.label_id());
  CHECK(ids == std::set<std::uint16_t>{1, 2, 3, 4});

  for (int i = 0; i < 500; ++i) {
    const auto two = sample_regions(quads, rng, 2);
    CHECK(two[0].label_id() != two[1].label_id());
  }

  std::map<std::uint16_t, int> hist;
  const int n = 10000;
  for (int i = 0; i < n; ++i) ++hist[sample_regions(quads, rng, 1)[0].label_id()];
  for (auto [id, c] : hist) CHECK(std::abs(c / double(n) - 0.25) <= 0.02);

  const auto none = map_from(4, 4, [](int, int) { return std::uint16_t{0}; });
  try {
    sample_regions(none, rng, 1);
    FAIL("expected no anatomy");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_anatomy);
  }
}

TEST_CASE("sample_point_in_region") {
  const auto map = map_from(16, 16, [](int x, int y) {
    if (x == 4 && y == 9) return std::uint16_t{5};
    if ((x == 1 && y == 1) || (x == 14 && y == 2)) return std::uint16_t{6};
    return std::uint16_t(x > 8 && y > 8 ? 7 : 0);
  });
  Rng rng(8);
  CHECK(sample_point_in_region(map.region(5), rng) == Pixel{4, 9});

  int first = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) first += sample_point_in_region(map.region(6), rng) == Pixel{1, 1};
  CHECK(std::abs(first / double(n) - 0.5) <= 0.05);

  const auto big = map.region(7);
  for (int i = 0; i < 1000; ++i) {
    const Pixel p = sample_point_in_region(big, rng);
    CHECK(map.at(p.x, p.y) == 7);
  }
}

TEST_CASE("body_mask") {
  CHECK(body_mask(map_from(32, 32, [](int, int) { return std::uint16_t{0}; })).count() == 0);

  const auto rect = map_from(64, 64, [](int x, int y) { return std::uint16_t(x >= 10 && x < 40 && y >= 5 && y < 30); });
  CHECK(body_mask(rect) == union_mask(rect));

  // Two labels with a 2-pixel gap: closing fills it.
  const auto gap = map_from(64, 64, [](int x, int y) {
    if (y < 20 || y >= 40) return std::uint16_t{0};
    if (x >= 10 && x < 30) return std::uint16_t{1};
    if (x >= 32 && x < 52) return std::uint16_t{2};
    return std::uint16_t{0};
  });
  const BinaryMask closed = body_mask(gap);
  CHECK(closed.at(30, 30));
  CHECK(closed.at(31, 30));
  CHECK(closed == brute_close(union_mask(gap), closing_radius(64)));

  CHECK(closing_radius(1024) == 3);
  CHECK(closing_radius(2048) == 6);
  CHECK(closing_radius(100) == 1);
}

TEST_CASE("body_mask matches the closing oracle and is monotone on random maps") {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const int w = static_cast<int>(rng.uniform_int(8, 40)), h = static_cast<int>(rng.uniform_int(8, 40));
    std::vector<std::uint16_t> labels(static_cast<std::size_t>(w) * h);
    for (auto& l : labels) l = rng.bernoulli(0.3) ? static_cast<std::uint16_t>(rng.uniform_int(1, 3)) : 0;
    const auto map = LabelMap::create(w, h, labels, {{1, "a"}, {2, "b"}, {3, "c"}});
    const BinaryMask body = body_mask(map);
    CHECK(body == brute_close(union_mask(map), closing_radius(w)));

    auto more = labels;
    const std::size_t extra = rng.below(more.size());
    more[extra] = 1;
    const BinaryMask grown = body_mask(LabelMap::create(w, h, more, {{1, "a"}, {2, "b"}, {3, "c"}}));
    for (std::size_t i = 0; i < body.bits().size(); ++i)
      if (body.bits()[i]) CHECK(grown.bits()[i]);
  }
}

TEST_CASE("region_boundary") {
  const auto square = map_from(7, 7, [](int x, int y) { return std::uint16_t(x >= 2 && x <= 4 && y >= 2 && y <= 4); });
  const auto contour = region_boundary(square.region(1));
  std::set<Pixel> got(contour.begin(), contour.end());
  std::set<Pixel> expect;
  for (int y = 2; y <= 4; ++y)
    for (int x = 2; x <= 4; ++x)
      if (!(x == 3 && y == 3)) expect.insert({x, y});
  CHECK(got == expect);
  CHECK(contour.size() == 8);
  // Consecutive contour pixels are 8-adjacent.
  for (std::size_t i = 0; i + 1 < contour.size(); ++i)
    CHECK(std::max(std::abs(contour[i].x - contour[i + 1].x), std::abs(contour[i].y - contour[i + 1].y)) == 1);

  const auto dot = map_from(5, 5, [](int x, int y) { return std::uint16_t(x == 2 && y == 3); });
  CHECK(region_boundary(dot.region(1)) == std::vector<Pixel>{{2, 3}});
}

TEST_CASE("region_boundary pixels touch the background on random blobs") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const BinaryMask blob = fbsynth::testing::random_blob(32, 32, 30 + rng.below(200), rng);
    const auto map = map_from(32, 32, [&](int x, int y) { return std::uint16_t(blob.at(x, y)); });
    const auto contour = region_boundary(map.region(1));
    REQUIRE(!contour.empty());
    for (const Pixel& p : contour) {
      CHECK(blob.at(p.x, p.y));
      const bool edge = p.x == 0 || p.y == 0 || p.x == 31 || p.y == 31;
      bool open = false;
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) open = open || !blob.get(p.x + dx, p.y + dy);
      CHECK((edge || open));
    }
  }
}
