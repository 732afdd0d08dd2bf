// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fbsynth/image.hpp"

namespace fbsynth::io {

/// 8- or 16-bit grayscale PNG, normalized to [0,1]. Throws Errc::io / corrupt_file.
GrayImage read_gray(const std::string& path);
/// Quantizes to 8 bits with round-to-nearest.
void write_gray8(const std::string& path, const GrayImage& img);
std::vector<std::uint8_t> encode_gray8(const GrayImage& img);

struct Label16 {
  int width = 0;
  int height = 0;
  std::vector<std::uint16_t> data;
};
Label16 read_label16(const std::string& path);
void write_label16(const std::string& path, const Label16& labels);

/// Nonzero pixels are set.
BinaryMask read_mask(const std::string& path);
/// 0 / 255 8-bit PNG.
void write_mask(const std::string& path, const BinaryMask& mask);

struct Rgb8 {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // interleaved R, G, B
};
Rgb8 read_rgb(const std::string& path);
void write_rgb(const std::string& path, const Rgb8& img);

std::uint8_t to_u8(float v);

}  // namespace fbsynth::io
