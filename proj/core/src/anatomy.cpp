// SPDX-License-Identifier: Apache-2.0
#include "fbsynth/anatomy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>

#include <nlohmann/json.hpp>

#include "fbsynth/error.hpp"
#include "fbsynth/image_io.hpp"

namespace fbsynth::anatomy {

struct RegionData {
  std::uint16_t label_id = 0;
  Size canvas;
  BBox bbox;
  std::vector<std::uint32_t> pixels;  // raster indices, ascending
  BinaryMask local;
};

struct LabelMap::Shared {
  int width = 0;
  int height = 0;
  std::vector<std::uint16_t> labels;
  Catalog catalog;
  std::vector<std::uint16_t> ids;
  std::map<std::uint16_t, std::shared_ptr<const RegionData>> regions;
};

std::uint16_t RegionSample::label_id() const { return data_->label_id; }
const BBox& RegionSample::bbox() const { return data_->bbox; }
std::size_t RegionSample::area() const { return data_->pixels.size(); }
Size RegionSample::canvas() const { return data_->canvas; }
const BinaryMask& RegionSample::local_mask() const { return data_->local; }

bool RegionSample::contains(int x, int y) const {
  const BBox& b = data_->bbox;
  return b.contains(x, y) && data_->local.at(x - b.x, y - b.y);
}

Pixel RegionSample::pixel(std::size_t i) const {
  const std::uint32_t idx = data_->pixels.at(i);
  return {static_cast<int>(idx % data_->canvas.width), static_cast<int>(idx / data_->canvas.width)};
}

LabelMap LabelMap::create(int width, int height, std::vector<std::uint16_t> labels, Catalog catalog) {
  if (width <= 0 || height <= 0 || labels.size() != static_cast<std::size_t>(width) * height)
    throw Error(Errc::dimension_mismatch, "label raster length does not match dimensions");
  if (catalog.size() > kMaxCatalogSize)
    throw Error(Errc::corrupt_file, "catalog has " + std::to_string(catalog.size()) + " entries; at most " +
                                        std::to_string(kMaxCatalogSize) + " allowed");
  if (catalog.count(0)) throw Error(Errc::corrupt_file, "label id 0 is reserved for background");

  auto d = std::make_shared<Shared>();
  d->width = width;
  d->height = height;

  std::map<std::uint16_t, std::vector<std::uint32_t>> pixels;
  std::uint16_t last = 0;
  std::vector<std::uint32_t>* bucket = nullptr;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::uint16_t id = labels[i];
    if (id == 0) continue;
    if (!bucket || id != last) {
      if (!catalog.count(id)) throw Error(Errc::unknown_label, "unknown label id " + std::to_string(id));
      bucket = &pixels[id];
      last = id;
    }
    bucket->push_back(static_cast<std::uint32_t>(i));
  }

  for (auto& [id, px] : pixels) {
    auto r = std::make_shared<RegionData>();
    r->label_id = id;
    r->canvas = {width, height};
    int x0 = width, y0 = height, x1 = -1, y1 = -1;
    for (std::uint32_t idx : px) {
      const int x = static_cast<int>(idx % width), y = static_cast<int>(idx / width);
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
    r->bbox = {x0, y0, x1 - x0 + 1, y1 - y0 + 1};
    r->local = BinaryMask(r->bbox.w, r->bbox.h);
    for (std::uint32_t idx : px)
      r->local.set(static_cast<int>(idx % width) - x0, static_cast<int>(idx / width) - y0);
    r->pixels = std::move(px);
    d->ids.push_back(id);
    d->regions.emplace(id, std::move(r));
  }
  d->labels = std::move(labels);
  d->catalog = std::move(catalog);

  LabelMap m;
  m.d_ = std::move(d);
  return m;
}

int LabelMap::width() const { return d_ ? d_->width : 0; }
int LabelMap::height() const { return d_ ? d_->height : 0; }
std::uint16_t LabelMap::at(int x, int y) const { return d_->labels[static_cast<std::size_t>(y) * d_->width + x]; }
const std::vector<std::uint16_t>& LabelMap::labels() const { return d_->labels; }
const LabelMap::Catalog& LabelMap::catalog() const { return d_->catalog; }
const std::vector<std::uint16_t>& LabelMap::region_ids() const { return d_->ids; }

RegionSample LabelMap::region(std::uint16_t id) const {
  auto it = d_->regions.find(id);
  if (it == d_->regions.end()) throw Error(Errc::unknown_label, "label " + std::to_string(id) + " has no pixels");
  return RegionSample(it->second);
}

std::string sidecar_path(const std::string& png_path) {
  std::filesystem::path p(png_path);
  return (p.parent_path() / (p.stem().string() + ".labels.json")).string();
}

LabelMap load_label_map(const std::string& path, std::optional<Size> expected) {
  io::Label16 raw = io::read_label16(path);
  if (expected && (expected->width != raw.width || expected->height != raw.height))
    throw Error(Errc::dimension_mismatch, path + ": label map is " + std::to_string(raw.width) + "x" +
                                              std::to_string(raw.height) + ", image is " +
                                              std::to_string(expected->width) + "x" + std::to_string(expected->height));

  const std::string side = sidecar_path(path);
  std::ifstream in(side);
  if (!in) throw Error(Errc::io, "missing label catalog " + side);
  LabelMap::Catalog catalog;
  try {
    const auto j = nlohmann::json::parse(in);
    for (const auto& [key, name] : j.at("labels").items()) {
      const long id = std::stol(key);
      if (id <= 0 || id > 0xffff) throw Error(Errc::corrupt_file, side + ": label id out of range: " + key);
      catalog.emplace(static_cast<std::uint16_t>(id), name.get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::corrupt_file, side + ": " + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(Errc::corrupt_file, side + ": label ids must be integers");
  }
  return LabelMap::create(raw.width, raw.height, std::move(raw.data), std::move(catalog));
}

void save_label_map(const LabelMap& map, const std::string& path) {
  io::write_label16(path, {map.width(), map.height(), map.labels()});
  nlohmann::json labels = nlohmann::json::object();
  for (const auto& [id, name] : map.catalog()) labels[std::to_string(id)] = name;
  std::ofstream out(sidecar_path(path));
  if (!out) throw Error(Errc::io, "cannot write " + sidecar_path(path));
  out << nlohmann::json{{"labels", labels}}.dump(2) << '\n';
}

std::vector<RegionSample> sample_regions(const LabelMap& map, Rng& rng, std::size_t k) {
  std::vector<std::uint16_t> ids = map.region_ids();
  if (ids.empty()) throw Error(Errc::no_anatomy, "no anatomy available");
  k = std::min(k, ids.size());
  std::vector<RegionSample> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.below(ids.size() - i);
    std::swap(ids[i], ids[j]);
    out.push_back(map.region(ids[i]));
  }
  return out;
}

Pixel sample_point_in_region(const RegionSample& region, Rng& rng) {
  return region.pixel(rng.below(region.area()));
}

int closing_radius(int width) { return std::max(1, static_cast<int>(std::lround(3.0 * width / 1024.0))); }

namespace {

// Row-wise prefix counts so a disk window query costs O(radius) per pixel.
std::vector<std::uint32_t> row_prefix(const BinaryMask& m) {
  const int w = m.width();
  std::vector<std::uint32_t> pre(static_cast<std::size_t>(w + 1) * m.height(), 0);
  for (int y = 0; y < m.height(); ++y) {
    std::uint32_t* row = pre.data() + static_cast<std::size_t>(y) * (w + 1);
    for (int x = 0; x < w; ++x) row[x + 1] = row[x] + (m.at(x, y) ? 1u : 0u);
  }
  return pre;
}

std::vector<int> disk_half_widths(int radius) {
  std::vector<int> hw(2 * radius + 1);
  for (int dy = -radius; dy <= radius; ++dy)
    hw[dy + radius] = static_cast<int>(std::floor(std::sqrt(double(radius * radius - dy * dy))));
  return hw;
}

template <typename Keep>
BinaryMask disk_filter(const BinaryMask& mask, int radius, Keep keep) {
  const int w = mask.width(), h = mask.height();
  const auto pre = row_prefix(mask);
  const auto hw = disk_half_widths(radius);
  BinaryMask out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      std::uint32_t set = 0, total = 0;
      for (int dy = -radius; dy <= radius; ++dy) {
        const int yy = y + dy;
        if (yy < 0 || yy >= h) continue;
        const int x0 = std::max(0, x - hw[dy + radius]);
        const int x1 = std::min(w - 1, x + hw[dy + radius]);
        const std::uint32_t* row = pre.data() + static_cast<std::size_t>(yy) * (w + 1);
        set += row[x1 + 1] - row[x0];
        total += static_cast<std::uint32_t>(x1 - x0 + 1);
      }
      if (keep(set, total)) out.set(x, y);
    }
  return out;
}

}  // namespace

BinaryMask dilate(const BinaryMask& mask, int radius) {
  if (radius <= 0) return mask;
  return disk_filter(mask, radius, [](std::uint32_t set, std::uint32_t) { return set > 0; });
}

BinaryMask erode(const BinaryMask& mask, int radius) {
  if (radius <= 0) return mask;
  return disk_filter(mask, radius, [](std::uint32_t set, std::uint32_t total) { return set == total; });
}

BinaryMask close(const BinaryMask& mask, int radius) { return erode(dilate(mask, radius), radius); }

BinaryMask body_mask(const LabelMap& map) {
  BinaryMask m(map.width(), map.height());
  const auto& labels = map.labels();
  auto bits = m.bits();
  for (std::size_t i = 0; i < labels.size(); ++i) bits[i] = labels[i] != 0 ? 1 : 0;
  return close(m, closing_radius(map.width()));
}

namespace {

constexpr std::array<Pixel, 8> kDirs = {{{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};

int direction_of(Pixel from, Pixel to) {
  for (int d = 0; d < 8; ++d)
    if (from.x + kDirs[d].x == to.x && from.y + kDirs[d].y == to.y) return d;
  return -1;
}

}  // namespace

std::vector<Pixel> trace_outer_boundary(const BinaryMask& mask) {
  const int w = mask.width(), h = mask.height();
  std::vector<Pixel> out;
  std::vector<std::uint8_t> visited(static_cast<std::size_t>(w) * h, 0);
  std::vector<std::uint8_t> emitted(static_cast<std::size_t>(w) * h, 0);
  std::vector<Pixel> stack;

  for (int sy = 0; sy < h; ++sy)
    for (int sx = 0; sx < w; ++sx) {
      if (!mask.at(sx, sy) || visited[static_cast<std::size_t>(sy) * w + sx]) continue;

      // Moore-neighbor tracing from the component's first raster pixel, whose
      // west neighbor is background; stops when (pixel, backtrack) repeats.
      const Pixel start{sx, sy};
      const Pixel start_back{sx - 1, sy};
      Pixel cur = start, back = start_back;
      const std::size_t guard = 4 * static_cast<std::size_t>(w) * h + 16;
      for (std::size_t step = 0; step < guard; ++step) {
        const std::size_t ci = static_cast<std::size_t>(cur.y) * w + cur.x;
        if (!emitted[ci]) {
          emitted[ci] = 1;
          out.push_back(cur);
        }
        const int db = direction_of(cur, back);
        Pixel next{-1, -1}, next_back = back;
        for (int k = 1; k <= 8; ++k) {
          const int d = (db + k) % 8;
          const Pixel cand{cur.x + kDirs[d].x, cur.y + kDirs[d].y};
          if (mask.get(cand.x, cand.y)) {
            next = cand;
            break;
          }
          next_back = cand;
        }
        if (next.x < 0) break;  // isolated pixel
        back = next_back;
        cur = next;
        if (cur == start && back == start_back) break;
      }

      stack.push_back(start);
      visited[static_cast<std::size_t>(sy) * w + sx] = 1;
      while (!stack.empty()) {
        const Pixel p = stack.back();
        stack.pop_back();
        for (const Pixel& d : kDirs) {
          const int nx = p.x + d.x, ny = p.y + d.y;
          if (!mask.get(nx, ny)) continue;
          auto& v = visited[static_cast<std::size_t>(ny) * w + nx];
          if (v) continue;
          v = 1;
          stack.push_back({nx, ny});
        }
      }
    }
  return out;
}

std::vector<Pixel> region_boundary(const RegionSample& region) {
  auto pts = trace_outer_boundary(region.local_mask());
  for (Pixel& p : pts) {
    p.x += region.bbox().x;
    p.y += region.bbox().y;
  }
  return pts;
}

}  // namespace fbsynth::anatomy
