// SPDX-License-Identifier: Apache-2.0
#pragma once

// Procedural chest-radiograph stand-ins with matching anatomy label maps and a
// synthetic crop library, for demos, tests and benchmarks.

#include <cstdint>
#include <string>
#include <vector>

#include "fbsynth/anatomy.hpp"
#include "fbsynth/cutpaste.hpp"
#include "fbsynth/image.hpp"

namespace fbsynth::phantom {

struct Phantom {
  GrayImage image;
  anatomy::LabelMap labels;
};

/// Anatomy names in label-id order (id = index + 1).
const std::vector<std::string>& anatomy_names();

/// Deterministic in (seed, size).
Phantom make_phantom(std::uint64_t seed, Size size);

/// Synthetic foreign-body crop (device, coin, screw, wire loop, ...).
cutpaste::Crop make_crop(std::uint64_t seed, int index);

struct CorpusPaths {
  std::string manifest;
  std::string crops;
};

/// Writes images/, anatomy/ and manifest.txt for `count` phantoms, plus
/// `crop_count` crops under crops/ (skipped when zero).
CorpusPaths write_corpus(const std::string& dir, std::size_t count, Size size, std::size_t crop_count,
                         std::uint64_t seed = 1);

}  // namespace fbsynth::phantom
