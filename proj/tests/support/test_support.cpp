// SPDX-License-Identifier: Apache-2.0
#include "test_support.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>

#include <unistd.h>

namespace fs = std::filesystem;

namespace fbsynth::testing {

TempDir::TempDir(const std::string& tag) {
  static std::uint64_t counter = 0;
  const auto stamp = std::to_string(::getpid()) + "_" + std::to_string(counter++);
  path_ = fs::temp_directory_path() / ("fbsynth_" + tag + "_" + stamp);
  fs::remove_all(path_);
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

anatomy::LabelMap map_from(int width, int height, const std::function<std::uint16_t(int, int)>& label) {
  std::vector<std::uint16_t> labels(static_cast<std::size_t>(width) * height);
  anatomy::LabelMap::Catalog catalog;
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      const std::uint16_t id = label(x, y);
      labels[static_cast<std::size_t>(y) * width + x] = id;
      if (id) catalog[id] = "label_" + std::to_string(id);
    }
  return anatomy::LabelMap::create(width, height, std::move(labels), catalog);
}

BinaryMask random_blob(int width, int height, std::size_t target, Rng& rng) {
  BinaryMask m(width, height);
  std::vector<Pixel> frontier{{width / 2, height / 2}};
  m.set(width / 2, height / 2);
  std::size_t n = 1;
  while (n < target && !frontier.empty()) {
    const std::size_t k = rng.below(frontier.size());
    const Pixel p = frontier[k];
    const int dx = static_cast<int>(rng.uniform_int(-1, 1)), dy = static_cast<int>(rng.uniform_int(-1, 1));
    const Pixel q{p.x + dx, p.y + dy};
    if (q.x < 1 || q.y < 1 || q.x >= width - 1 || q.y >= height - 1 || m.at(q.x, q.y)) {
      if (rng.bernoulli(0.05)) frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(k));
      continue;
    }
    m.set(q.x, q.y);
    frontier.push_back(q);
    ++n;
  }
  return m;
}

BinaryMask random_mask(int width, int height, double density, Rng& rng) {
  BinaryMask m(width, height);
  for (auto& b : m.bits()) b = rng.bernoulli(density) ? 1 : 0;
  return m;
}

std::size_t count_components(const BinaryMask& mask, bool eight_connected) {
  std::vector<int> seen(mask.size().area(), 0);
  std::size_t comps = 0;
  std::vector<Pixel> stack;
  for (int y = 0; y < mask.height(); ++y)
    for (int x = 0; x < mask.width(); ++x) {
      if (!mask.at(x, y) || seen[static_cast<std::size_t>(y) * mask.width() + x]) continue;
      ++comps;
      stack.assign(1, {x, y});
      seen[static_cast<std::size_t>(y) * mask.width() + x] = 1;
      while (!stack.empty()) {
        const Pixel p = stack.back();
        stack.pop_back();
        for (int dy = -1; dy <= 1; ++dy)
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            if (!eight_connected && dx != 0 && dy != 0) continue;
            const int nx = p.x + dx, ny = p.y + dy;
            if (!mask.get(nx, ny)) continue;
            int& s = seen[static_cast<std::size_t>(ny) * mask.width() + nx];
            if (s) continue;
            s = 1;
            stack.push_back({nx, ny});
          }
      }
    }
  return comps;
}

BinaryMask footprint_on(const AlphaPatch& patch, Size canvas) {
  BinaryMask m(canvas.width, canvas.height);
  for (int y = 0; y < patch.height; ++y)
    for (int x = 0; x < patch.width; ++x)
      if (patch.in_footprint(x, y) && canvas.contains(patch.origin.x + x, patch.origin.y + y))
        m.set(patch.origin.x + x, patch.origin.y + y);
  return m;
}

std::uint64_t file_checksum(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::uint64_t h = 1469598103934665603ull;
  for (std::istreambuf_iterator<char> it(in), end; it != end; ++it) {
    h ^= static_cast<unsigned char>(*it);
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t tree_checksum(const std::string& dir, const std::function<bool(const std::string&)>& keep) {
  std::map<std::string, std::uint64_t> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    const std::string rel = fs::relative(e.path(), dir).generic_string();
    if (keep(rel)) files[rel] = file_checksum(e.path().string());
  }
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& [rel, sum] : files) {
    for (char c : rel) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    h = (h ^ sum) * 1099511628211ull;
  }
  return h;
}

}  // namespace fbsynth::testing
