// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace fbsynth::raster::detail {

inline constexpr char kFirstGlyph = 32;
inline constexpr char kLastGlyph = 126;
inline constexpr std::size_t kGlyphCount = kLastGlyph - kFirstGlyph + 1;
inline constexpr std::size_t kFontCount = 3;

// One bitmap per printable ASCII glyph; bit x of row y set => ink at (x, y).
struct BakedFont {
  const char* name;
  int height;
  int cell_width;
  const std::uint32_t* rows;     // kGlyphCount * height entries
  const std::uint8_t* advance;   // kGlyphCount entries
};

extern const std::array<BakedFont, kFontCount> kFonts;

}  // namespace fbsynth::raster::detail
