// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "fbsynth/anatomy.hpp"
#include "fbsynth/image.hpp"
#include "fbsynth/random.hpp"

namespace fbsynth::testing {

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string str(const std::string& child = "") const { return (path_ / child).string(); }

 private:
  std::filesystem::path path_;
};

/// Label map built from a per-pixel function; catalog names are "label_<id>".
anatomy::LabelMap map_from(int width, int height, const std::function<std::uint16_t(int, int)>& label);

/// Random 8-connected blob grown from a seed pixel, kept one pixel away from the raster edge.
BinaryMask random_blob(int width, int height, std::size_t target, Rng& rng);

BinaryMask random_mask(int width, int height, double density, Rng& rng);

/// Brute-force 8-connected component count.
std::size_t count_components(const BinaryMask& mask, bool eight_connected = true);

/// Footprint of an AlphaPatch placed on a canvas of the given size.
BinaryMask footprint_on(const AlphaPatch& patch, Size canvas);

/// FNV-1a over a file's bytes.
std::uint64_t file_checksum(const std::string& path);

/// Checksum of every regular file below `dir` that matches `keep` (relative path), in path order.
std::uint64_t tree_checksum(const std::string& dir, const std::function<bool(const std::string&)>& keep);

}  // namespace fbsynth::testing
