// SPDX-License-Identifier: Apache-2.0
// Generated by tools/gen_fonts.py from the Hershey fonts. Do not edit.
#include "font_data.hpp"

namespace fbsynth::raster::detail {

static constexpr std::uint32_t k_plain_rows[] = {
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // ' '
    0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x0u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '!'
    0x0u, 0x0u, 0x0u, 0x0u, 0x1eu, 0x12u, 0x12u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '"'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x190u, 0x198u, 0x3feu, 0x98u, 0x88u, 0x88u, 0x3feu, 0xc8u, 0x48u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '#'
    0x0u, 0x0u, 0x10u, 0x30u, 0xfcu, 0x1c6u, 0x186u, 0x6u, 0x1cu, 0x78u, 0x1c0u, 0x180u, 0x182u, 0x1ceu, 0xfcu, 0x30u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '$'
    0x0u, 0x0u, 0x0u, 0x0u, 0x61eu, 0x312u, 0x112u, 0x92u, 0xdeu, 0x260u, 0x7a0u, 0x490u, 0x488u, 0x48cu, 0x704u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '%'
    0x0u, 0x0u, 0x0u, 0x0u, 0x78u, 0xccu, 0xc4u, 0x4cu, 0x38u, 0x23cu, 0x266u, 0x3c6u, 0x186u, 0x3c6u, 0x67cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '&'
    0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x2u, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // "'"
    0x0u, 0x0u, 0x60u, 0x30u, 0x10u, 0x18u, 0x18u, 0x18u, 0x18u, 0x18u, 0x18u, 0x18u, 0x18u, 0x18u, 0x10u, 0x70u, 0x60u, 0x0u, 0x0u, 0x0u, 0x0u,  // '('
    0x0u, 0x0u, 0x18u, 0x30u, 0x20u, 0x20u, 0x60u, 0x60u, 0x60u, 0x60u, 0x60u, 0x60u, 0x60u, 0x20u, 0x20u, 0x38u, 0x18u, 0x0u, 0x0u, 0x0u, 0x0u,  // ')'
    0x0u, 0x0u, 0x0u, 0x8u, 0x8u, 0x3eu, 0x1cu, 0x14u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '*'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x30u, 0x30u, 0x30u, 0x30u, 0x1feu, 0x30u, 0x30u, 0x30u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '+'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // ','
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x7eu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '-'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '.'
    0x0u, 0x0u, 0x40u, 0x40u, 0x60u, 0x20u, 0x30u, 0x10u, 0x10u, 0x18u, 0x8u, 0xcu, 0x4u, 0x6u, 0x2u, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '/'
    0x0u, 0x0u, 0x0u, 0x0u, 0xfcu, 0xccu, 0x1c6u, 0x1a6u, 0x1a2u, 0x192u, 0x192u, 0x196u, 0x18eu, 0xccu, 0x78u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '0'
    0x0u, 0x0u, 0x0u, 0x0u, 0x30u, 0x3cu, 0x24u, 0x20u, 0x20u, 0x20u, 0x20u, 0x20u, 0x20u, 0x30u, 0x1feu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '1'
    0x0u, 0x0u, 0x0u, 0x0u, 0x78u, 0xccu, 0x186u, 0x180u, 0xc0u, 0xe0u, 0x70u, 0x38u, 0x1cu, 0xeu, 0x1feu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '2'
    0x0u, 0x0u, 0x0u, 0x0u, 0xfeu, 0xc0u, 0x60u, 0x30u, 0x38u, 0xf8u, 0x180u, 0x180u, 0x182u, 0xc6u, 0x7cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '3'
    0x0u, 0x0u, 0x0u, 0x0u, 0xe0u, 0xf0u, 0xd0u, 0xd8u, 0xccu, 0xc4u, 0xc6u, 0x1ffu, 0xc0u, 0xc0u, 0xc0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '4'
    0x0u, 0x0u, 0x0u, 0x0u, 0xfcu, 0x4u, 0x4u, 0x4u, 0x7cu, 0xc4u, 0x180u, 0x180u, 0x186u, 0xceu, 0x7cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '5'
    0x0u, 0x0u, 0x0u, 0x0u, 0x60u, 0x30u, 0x18u, 0x18u, 0xfcu, 0x186u, 0x186u, 0x106u, 0x186u, 0xccu, 0x78u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '6'
    0x0u, 0x0u, 0x0u, 0x0u, 0x1feu, 0x80u, 0xc0u, 0xc0u, 0x40u, 0x60u, 0x20u, 0x30u, 0x10u, 0x18u, 0x18u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '7'
    0x0u, 0x0u, 0x0u, 0x0u, 0xfcu, 0x86u, 0x186u, 0x186u, 0xfcu, 0xfcu, 0x186u, 0x182u, 0x186u, 0x1ceu, 0x7cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '8'
    0x0u, 0x0u, 0x0u, 0x0u, 0x7cu, 0xc6u, 0x186u, 0x182u, 0x186u, 0xccu, 0xf8u, 0x60u, 0x30u, 0x30u, 0x18u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '9'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // ':'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // ';'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x60u, 0x30u, 0xcu, 0x6u, 0x6u, 0xcu, 0x38u, 0x60u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '<'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0xfeu, 0x0u, 0x0u, 0x0u, 0xfeu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '='
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0xcu, 0x38u, 0x60u, 0x60u, 0x30u, 0x1cu, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '>'
    0x0u, 0x0u, 0x0u, 0x0u, 0x7cu, 0xc6u, 0xc2u, 0xc0u, 0x60u, 0x30u, 0x10u, 0x10u, 0x0u, 0x10u, 0x18u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '?'
    0x0u, 0x0u, 0x0u, 0x0u, 0xe0u, 0x7f8u, 0x40cu, 0x946u, 0x9f2u, 0x912u, 0x912u, 0x912u, 0xfb2u, 0x6e6u, 0x4u, 0x638u, 0x1e0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '@'
    0x0u, 0x0u, 0x0u, 0x0u, 0x70u, 0x70u, 0x58u, 0xd8u, 0x88u, 0x8cu, 0x184u, 0x1feu, 0x306u, 0x302u, 0x203u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'A'
    0x0u, 0x0u, 0x0u, 0x0u, 0xfeu, 0x186u, 0x306u, 0x106u, 0x1c6u, 0x1feu, 0x106u, 0x306u, 0x306u, 0x186u, 0xfeu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'B'
    0x0u, 0x0u, 0x0u, 0x0u, 0xf8u, 0x18cu, 0x306u, 0x6u, 0x6u, 0x6u, 0x6u, 0x306u, 0x306u, 0x19cu, 0xf8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'C'
    0x0u, 0x0u, 0x0u, 0x0u, 0xfeu, 0x1c6u, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x1c6u, 0xfeu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'D'
    0x0u, 0x0u, 0x0u, 0x0u, 0x1feu, 0x6u, 0x6u, 0x6u, 0x6u, 0xfeu, 0x6u, 0x6u, 0x6u, 0x6u, 0x1feu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'E'
    0x0u, 0x0u, 0x0u, 0x0u, 0x1feu, 0x6u, 0x6u, 0x6u, 0x6u, 0xfeu, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'F'
    0x0u, 0x0u, 0x0u, 0x0u, 0xf8u, 0x18cu, 0x306u, 0x6u, 0x6u, 0x3c6u, 0x306u, 0x306u, 0x306u, 0x19cu, 0xf8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'G'
    0x0u, 0x0u, 0x0u, 0x0u, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x3feu, 0x306u, 0x306u, 0x306u, 0x306u, 0x206u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'H'
    0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'I'
    0x0u, 0x0u, 0x0u, 0x0u, 0x1feu, 0x180u, 0x180u, 0x180u, 0x180u, 0x180u, 0x180u, 0x182u, 0x182u, 0xe6u, 0x7cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'J'
    0x0u, 0x0u, 0x0u, 0x0u, 0x186u, 0xc6u, 0x66u, 0x36u, 0x1eu, 0xeu, 0x1eu, 0x36u, 0x66u, 0xc6u, 0x186u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'K'
    0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x1feu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'L'
    0x0u, 0x0u, 0x0u, 0x0u, 0x406u, 0x60eu, 0x70eu, 0x71eu, 0x596u, 0x4b6u, 0x4e6u, 0x466u, 0x406u, 0x406u, 0x406u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'M'
    0x0u, 0x0u, 0x0u, 0x0u, 0x306u, 0x30eu, 0x31eu, 0x31eu, 0x336u, 0x326u, 0x366u, 0x3c6u, 0x386u, 0x386u, 0x306u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'N'
    0x0u, 0x0u, 0x0u, 0x0u, 0xf8u, 0x18cu, 0x106u, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x106u, 0x1dcu, 0xf8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'O'
    0x0u, 0x0u, 0x0u, 0x0u, 0xfeu, 0x186u, 0x306u, 0x306u, 0x106u, 0x1feu, 0x3eu, 0x6u, 0x6u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'P'
    0x0u, 0x0u, 0x0u, 0x0u, 0xf8u, 0x18cu, 0x106u, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x1dcu, 0x1f8u, 0x300u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'Q'
    0x0u, 0x0u, 0x0u, 0x0u, 0xfeu, 0x186u, 0x106u, 0x106u, 0x186u, 0xfeu, 0xe6u, 0xc6u, 0x186u, 0x186u, 0x306u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'R'
    0x0u, 0x0u, 0x0u, 0x0u, 0xfcu, 0x1c6u, 0x186u, 0x6u, 0x1cu, 0xf8u, 0x1c0u, 0x180u, 0x182u, 0x1ceu, 0xfcu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'S'
    0x0u, 0x0u, 0x0u, 0x0u, 0x1ffu, 0x30u, 0x10u, 0x10u, 0x10u, 0x10u, 0x10u, 0x10u, 0x10u, 0x10u, 0x10u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'T'
    0x0u, 0x0u, 0x0u, 0x0u, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x304u, 0x1dcu, 0xf8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'U'
    0x0u, 0x0u, 0x0u, 0x0u, 0x302u, 0x306u, 0x106u, 0x184u, 0x8cu, 0x8cu, 0xc8u, 0x58u, 0x78u, 0x70u, 0x30u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'V'
    0x0u, 0x0u, 0x0u, 0x0u, 0x802u, 0xc06u, 0xc46u, 0x466u, 0x4e4u, 0x4a4u, 0x6bcu, 0x79cu, 0x31cu, 0x318u, 0x308u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'W'
    0x0u, 0x0u, 0x0u, 0x0u, 0x106u, 0x186u, 0xccu, 0x58u, 0x70u, 0x30u, 0x78u, 0xc8u, 0xccu, 0x186u, 0x302u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'X'
    0x0u, 0x0u, 0x0u, 0x0u, 0x302u, 0x186u, 0x18cu, 0xccu, 0x58u, 0x70u, 0x30u, 0x30u, 0x30u, 0x30u, 0x30u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'Y'
    0x0u, 0x0u, 0x0u, 0x0u, 0x1feu, 0x1c0u, 0xc0u, 0x60u, 0x30u, 0x30u, 0x18u, 0xcu, 0x6u, 0x6u, 0x1feu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'Z'
    0x0u, 0x0u, 0x0u, 0x1eu, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x1eu, 0xcu, 0x0u, 0x0u, 0x0u,  // '['
    0x0u, 0x0u, 0x0u, 0x2u, 0x6u, 0x4u, 0x4u, 0xcu, 0x8u, 0x18u, 0x10u, 0x10u, 0x30u, 0x20u, 0x60u, 0x40u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '\\'
    0x0u, 0x0u, 0x0u, 0xeu, 0x8u, 0x8u, 0x8u, 0x8u, 0x8u, 0x8u, 0x8u, 0x8u, 0x8u, 0x8u, 0x8u, 0x8u, 0xeu, 0xeu, 0x0u, 0x0u, 0x0u,  // ']'
    0x0u, 0x0u, 0x0u, 0x0u, 0x1cu, 0x22u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '^'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x7feu, 0x7feu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '_'
    0x0u, 0x0u, 0x0u, 0x6u, 0xcu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '`'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x7cu, 0xc6u, 0xc0u, 0xf8u, 0xc6u, 0xc2u, 0xe6u, 0xfcu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'a'
    0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x6u, 0xfeu, 0xc6u, 0x186u, 0x186u, 0x186u, 0x186u, 0xceu, 0x7eu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'b'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x7cu, 0xc6u, 0x86u, 0x2u, 0x2u, 0x86u, 0xc6u, 0x7cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'c'
    0x0u, 0x0u, 0x0u, 0x0u, 0x80u, 0x80u, 0x80u, 0xfcu, 0xc6u, 0x86u, 0x82u, 0x82u, 0x86u, 0xc6u, 0xbcu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'd'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x7cu, 0xc6u, 0x82u, 0xfeu, 0x6u, 0x6u, 0xc4u, 0x78u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'e'
    0x0u, 0x0u, 0x0u, 0x38u, 0x1cu, 0xcu, 0xcu, 0x3fu, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'f'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0xfcu, 0xc6u, 0x86u, 0x82u, 0x82u, 0xc6u, 0xceu, 0xbcu, 0x80u, 0xc6u, 0x7cu, 0x0u, 0x0u, 0x0u,  // 'g'
    0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x6u, 0xfeu, 0xc6u, 0x186u, 0x186u, 0x186u, 0x186u, 0x186u, 0x186u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'h'
    0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x0u, 0x0u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'i'
    0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x0u, 0x0u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x3u, 0x0u, 0x0u, 0x0u,  // 'j'
    0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x6u, 0x66u, 0x36u, 0x1eu, 0xeu, 0x1eu, 0x36u, 0x66u, 0xc6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'k'
    0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'l'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0xf7eu, 0x18c6u, 0x10c6u, 0x10c6u, 0x10c6u, 0x10c6u, 0x10c6u, 0x10c6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'm'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0xfeu, 0xc6u, 0x86u, 0x186u, 0x186u, 0x186u, 0x186u, 0x186u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'n'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x7cu, 0xc6u, 0x86u, 0x82u, 0x82u, 0xc6u, 0xceu, 0x7cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'o'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0xfeu, 0xc6u, 0x186u, 0x186u, 0x186u, 0x186u, 0xceu, 0x7eu, 0x6u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u,  // 'p'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0xfcu, 0xc6u, 0x86u, 0x82u, 0x82u, 0x86u, 0xc6u, 0xbcu, 0x80u, 0x80u, 0x80u, 0x0u, 0x0u, 0x0u,  // 'q'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x3eu, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'r'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x7cu, 0x46u, 0x6u, 0x1cu, 0x70u, 0x40u, 0x66u, 0x3cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 's'
    0x0u, 0x0u, 0x0u, 0x0u, 0x4u, 0x4u, 0xcu, 0x3fu, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0xcu, 0x38u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 't'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x86u, 0x86u, 0x86u, 0x86u, 0x86u, 0x86u, 0xccu, 0xbcu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'u'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x82u, 0xc6u, 0x46u, 0x64u, 0x6cu, 0x28u, 0x38u, 0x18u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'v'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x842u, 0xce2u, 0xce6u, 0x4a4u, 0x7b4u, 0x71cu, 0x318u, 0x318u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'w'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0xc6u, 0x64u, 0x3cu, 0x18u, 0x38u, 0x6cu, 0x46u, 0xc2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'x'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x82u, 0xc6u, 0x44u, 0x64u, 0x6cu, 0x38u, 0x38u, 0x10u, 0x18u, 0x8u, 0xcu, 0x0u, 0x0u, 0x0u,  // 'y'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x7eu, 0x60u, 0x30u, 0x18u, 0x8u, 0xcu, 0x6u, 0xfeu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'z'
    0x0u, 0x0u, 0x0u, 0x18u, 0xcu, 0x4u, 0x4u, 0x4u, 0x4u, 0x6u, 0x6u, 0x6u, 0x4u, 0x4u, 0x4u, 0xcu, 0x18u, 0x0u, 0x0u, 0x0u, 0x0u,  // '{'
    0x0u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u,  // '|'
    0x0u, 0x0u, 0x0u, 0x6u, 0xcu, 0xcu, 0x8u, 0x8u, 0x8u, 0x18u, 0x18u, 0x8u, 0x8u, 0x8u, 0xcu, 0xcu, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u,  // '}'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x8cu, 0xfeu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '~'
};
static constexpr std::uint8_t k_plain_advance[] = {
    5, 4, 6, 12, 10, 13, 12, 4, 10, 10, 8, 10, 5, 8, 5, 8, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 5, 5, 8, 10, 8, 9, 14, 11, 11, 11, 12, 10, 10, 11, 12, 5, 11, 10, 10, 13, 12, 11, 11, 11, 11, 10, 10, 12, 11, 13, 11, 11, 10, 6, 8, 6, 7, 12, 6, 9, 10, 9, 10, 9, 7, 10, 10, 4, 5, 9, 4, 15, 10, 10, 10, 10, 7, 9, 7, 10, 9, 13, 9, 9, 9, 6, 4, 6, 9
};

static constexpr std::uint32_t k_simplex_rows[] = {
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // ' '
    0x0u, 0x0u, 0x0u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x0u, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '!'
    0x0u, 0x0u, 0x0u, 0xau, 0xau, 0xau, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '"'
    0x0u, 0x0u, 0x0u, 0x0u, 0x48u, 0xfeu, 0x6cu, 0x28u, 0x6cu, 0xfeu, 0x24u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '#'
    0x0u, 0x0u, 0x8u, 0x3cu, 0x66u, 0x2u, 0x6u, 0x3cu, 0x60u, 0x40u, 0x42u, 0x3cu, 0x18u, 0x0u, 0x0u, 0x0u, 0x0u,  // '$'
    0x0u, 0x0u, 0x0u, 0x8eu, 0x8au, 0x4au, 0x2au, 0x10u, 0x150u, 0x128u, 0x104u, 0x1c2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '%'
    0x0u, 0x0u, 0x0u, 0x1cu, 0x24u, 0x24u, 0x1cu, 0x9cu, 0x96u, 0xe2u, 0x62u, 0xbcu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '&'
    0x0u, 0x0u, 0x0u, 0x2u, 0x2u, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // "'"
    0x0u, 0x0u, 0x10u, 0x8u, 0x8u, 0x8u, 0x8u, 0xcu, 0x8u, 0x8u, 0x8u, 0x8u, 0x18u, 0x0u, 0x0u, 0x0u, 0x0u,  // '('
    0x0u, 0x0u, 0x8u, 0x10u, 0x10u, 0x10u, 0x10u, 0x10u, 0x10u, 0x10u, 0x10u, 0x10u, 0x8u, 0x0u, 0x0u, 0x0u, 0x0u,  // ')'
    0x0u, 0x0u, 0x0u, 0x4u, 0x1eu, 0xcu, 0x8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '*'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x18u, 0x18u, 0x18u, 0x7eu, 0x18u, 0x18u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '+'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x2u, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u,  // ','
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x1eu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '-'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x2u, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '.'
    0x0u, 0x0u, 0x20u, 0x10u, 0x10u, 0x8u, 0x8u, 0x8u, 0x4u, 0x4u, 0x2u, 0x2u, 0x3u, 0x0u, 0x0u, 0x0u, 0x0u,  // '/'
    0x0u, 0x0u, 0x0u, 0x3cu, 0x66u, 0x72u, 0x52u, 0x42u, 0x4au, 0x4eu, 0x66u, 0x3cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '0'
    0x0u, 0x0u, 0x0u, 0x18u, 0x1cu, 0x12u, 0x10u, 0x10u, 0x10u, 0x10u, 0x10u, 0x7eu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '1'
    0x0u, 0x0u, 0x0u, 0x3cu, 0x66u, 0x42u, 0x60u, 0x30u, 0x18u, 0xcu, 0x6u, 0x7eu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '2'
    0x0u, 0x0u, 0x0u, 0x7eu, 0x20u, 0x10u, 0x18u, 0x38u, 0x40u, 0x40u, 0x62u, 0x3cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '3'
    0x0u, 0x0u, 0x0u, 0x30u, 0x38u, 0x28u, 0x24u, 0x26u, 0x22u, 0x7fu, 0x20u, 0x20u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '4'
    0x0u, 0x0u, 0x0u, 0x7cu, 0x6u, 0x6u, 0x1eu, 0x66u, 0x40u, 0x42u, 0x66u, 0x3cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '5'
    0x0u, 0x0u, 0x0u, 0x10u, 0x18u, 0xcu, 0x3cu, 0x66u, 0x42u, 0x42u, 0x66u, 0x3cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '6'
    0x0u, 0x0u, 0x0u, 0x7eu, 0x60u, 0x20u, 0x20u, 0x10u, 0x10u, 0x18u, 0x8u, 0xcu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '7'
    0x0u, 0x0u, 0x0u, 0x3cu, 0x66u, 0x42u, 0x66u, 0x3cu, 0x42u, 0x42u, 0x42u, 0x3cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '8'
    0x0u, 0x0u, 0x0u, 0x3cu, 0x66u, 0x42u, 0x42u, 0x66u, 0x3cu, 0x10u, 0x18u, 0x8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '9'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x2u, 0x2u, 0x0u, 0x0u, 0x0u, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // ':'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x2u, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u,  // ';'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x10u, 0xcu, 0x6u, 0x2u, 0xcu, 0x18u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '<'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x3eu, 0x0u, 0x0u, 0x3eu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '='
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0xcu, 0x30u, 0x30u, 0x8u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '>'
    0x0u, 0x0u, 0x0u, 0x1cu, 0x22u, 0x22u, 0x30u, 0x10u, 0x8u, 0x8u, 0x0u, 0x8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '?'
    0x0u, 0x0u, 0x0u, 0x0u, 0x1dcu, 0x106u, 0x272u, 0x24au, 0x24au, 0x24au, 0x1f2u, 0x6u, 0x1dcu, 0x0u, 0x0u, 0x0u, 0x0u,  // '@'
    0x0u, 0x0u, 0x0u, 0x18u, 0x38u, 0x28u, 0x24u, 0x64u, 0x46u, 0xfeu, 0x82u, 0x83u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'A'
    0x0u, 0x0u, 0x0u, 0x7eu, 0x42u, 0xc2u, 0x42u, 0x7eu, 0xc2u, 0xc2u, 0xc2u, 0x7eu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'B'
    0x0u, 0x0u, 0x0u, 0x7cu, 0xc6u, 0x82u, 0x2u, 0x2u, 0x2u, 0x82u, 0xc6u, 0x7cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'C'
    0x0u, 0x0u, 0x0u, 0x3eu, 0x62u, 0xc2u, 0x82u, 0x82u, 0x82u, 0x82u, 0xc2u, 0x7eu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'D'
    0x0u, 0x0u, 0x0u, 0x7eu, 0x2u, 0x2u, 0x2u, 0x7eu, 0x2u, 0x2u, 0x2u, 0x7eu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'E'
    0x0u, 0x0u, 0x0u, 0x7eu, 0x2u, 0x2u, 0x2u, 0x7eu, 0x6u, 0x2u, 0x2u, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'F'
    0x0u, 0x0u, 0x0u, 0x7cu, 0xc6u, 0x82u, 0x2u, 0xe2u, 0x82u, 0x82u, 0x46u, 0x3cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'G'
    0x0u, 0x0u, 0x0u, 0x82u, 0x82u, 0x82u, 0x82u, 0xfeu, 0x82u, 0x82u, 0x82u, 0x82u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'H'
    0x0u, 0x0u, 0x0u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'I'
    0x0u, 0x0u, 0x0u, 0x7eu, 0x40u, 0x40u, 0x40u, 0x40u, 0x40u, 0x42u, 0x62u, 0x3cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'J'
    0x0u, 0x0u, 0x0u, 0x42u, 0x32u, 0x1au, 0xeu, 0x6u, 0xeu, 0x12u, 0x22u, 0x42u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'K'
    0x0u, 0x0u, 0x0u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x7eu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'L'
    0x0u, 0x0u, 0x0u, 0x106u, 0x186u, 0x18eu, 0x14au, 0x15au, 0x132u, 0x122u, 0x102u, 0x102u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'M'
    0x0u, 0x0u, 0x0u, 0x82u, 0x86u, 0x8eu, 0x8au, 0x92u, 0xb2u, 0xe2u, 0xc2u, 0xc2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'N'
    0x0u, 0x0u, 0x0u, 0x3cu, 0x46u, 0xc2u, 0x82u, 0x82u, 0x82u, 0xc2u, 0x46u, 0x3cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'O'
    0x0u, 0x0u, 0x0u, 0x3eu, 0x42u, 0xc2u, 0xc2u, 0x7eu, 0x6u, 0x2u, 0x2u, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'P'
    0x0u, 0x0u, 0x0u, 0x3cu, 0x46u, 0xc2u, 0x82u, 0x82u, 0x82u, 0xc2u, 0x46u, 0x7cu, 0xc0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'Q'
    0x0u, 0x0u, 0x0u, 0x3eu, 0x42u, 0xc2u, 0x42u, 0x7eu, 0x36u, 0x62u, 0x42u, 0xc2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'R'
    0x0u, 0x0u, 0x0u, 0x3cu, 0x66u, 0x2u, 0x6u, 0x3cu, 0x60u, 0x40u, 0x42u, 0x3cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'S'
    0x0u, 0x0u, 0x0u, 0x7fu, 0x8u, 0x8u, 0x8u, 0x8u, 0x8u, 0x8u, 0x8u, 0x8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'T'
    0x0u, 0x0u, 0x0u, 0x82u, 0x82u, 0x82u, 0x82u, 0x82u, 0x82u, 0xc6u, 0x44u, 0x7cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'U'
    0x0u, 0x0u, 0x0u, 0x82u, 0xc2u, 0x42u, 0x44u, 0x64u, 0x24u, 0x28u, 0x18u, 0x18u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'V'
    0x0u, 0x0u, 0x0u, 0x302u, 0x102u, 0x132u, 0x132u, 0x136u, 0x1d4u, 0xccu, 0xccu, 0x8cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'W'
    0x0u, 0x0u, 0x0u, 0x42u, 0x66u, 0x24u, 0x18u, 0x18u, 0x38u, 0x24u, 0x46u, 0xc3u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'X'
    0x0u, 0x0u, 0x0u, 0x82u, 0x42u, 0x64u, 0x2cu, 0x18u, 0x18u, 0x10u, 0x10u, 0x10u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'Y'
    0x0u, 0x0u, 0x0u, 0x7eu, 0x60u, 0x30u, 0x10u, 0x18u, 0xcu, 0x4u, 0x6u, 0x7eu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'Z'
    0x0u, 0x0u, 0xeu, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0xeu, 0x0u, 0x0u, 0x0u,  // '['
    0x0u, 0x0u, 0x3u, 0x2u, 0x2u, 0x4u, 0x4u, 0x8u, 0x8u, 0x8u, 0x10u, 0x10u, 0x20u, 0x0u, 0x0u, 0x0u, 0x0u,  // '\\'
    0x0u, 0x0u, 0x7u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x7u, 0x0u, 0x0u, 0x0u,  // ']'
    0x0u, 0x0u, 0x0u, 0xcu, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '^'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0xfeu, 0xfeu, 0x0u, 0x0u, 0x0u, 0x0u,  // '_'
    0x0u, 0x0u, 0x0u, 0x4u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '`'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x1cu, 0x36u, 0x20u, 0x3cu, 0x22u, 0x32u, 0x3eu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'a'
    0x0u, 0x0u, 0x0u, 0x2u, 0x2u, 0x1au, 0x26u, 0x42u, 0x42u, 0x42u, 0x66u, 0x3eu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'b'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x1cu, 0x36u, 0x2u, 0x2u, 0x2u, 0x22u, 0x3cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'c'
    0x0u, 0x0u, 0x0u, 0x60u, 0x60u, 0x7cu, 0x76u, 0x62u, 0x62u, 0x62u, 0x62u, 0x7cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'd'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x1cu, 0x26u, 0x22u, 0x7eu, 0x2u, 0x22u, 0x3cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'e'
    0x0u, 0x0u, 0x0u, 0xcu, 0x4u, 0xeu, 0x6u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'f'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x1cu, 0x76u, 0x62u, 0x62u, 0x62u, 0x62u, 0x7cu, 0x60u, 0x26u, 0x1cu, 0x0u, 0x0u,  // 'g'
    0x0u, 0x0u, 0x0u, 0x2u, 0x2u, 0x1au, 0x26u, 0x62u, 0x42u, 0x42u, 0x42u, 0x42u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'h'
    0x0u, 0x0u, 0x0u, 0x2u, 0x0u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'i'
    0x0u, 0x0u, 0x0u, 0x2u, 0x0u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x3u, 0x0u, 0x0u, 0x0u,  // 'j'
    0x0u, 0x0u, 0x0u, 0x2u, 0x2u, 0x22u, 0x12u, 0xeu, 0x6u, 0xeu, 0x12u, 0x22u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'k'
    0x0u, 0x0u, 0x0u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'l'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x19au, 0x276u, 0x222u, 0x622u, 0x622u, 0x622u, 0x622u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'm'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x1au, 0x26u, 0x62u, 0x42u, 0x42u, 0x42u, 0x42u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'n'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x1cu, 0x36u, 0x62u, 0x62u, 0x62u, 0x22u, 0x3cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'o'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x1au, 0x26u, 0x42u, 0x42u, 0x42u, 0x66u, 0x3eu, 0x2u, 0x2u, 0x0u, 0x0u, 0x0u,  // 'p'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x1cu, 0x76u, 0x62u, 0x62u, 0x62u, 0x62u, 0x7cu, 0x60u, 0x60u, 0x0u, 0x0u, 0x0u,  // 'q'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0xau, 0xeu, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'r'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x1cu, 0x32u, 0x2u, 0x1cu, 0x30u, 0x22u, 0x1eu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 's'
    0x0u, 0x0u, 0x0u, 0x4u, 0x4u, 0xeu, 0x6u, 0x4u, 0x4u, 0x4u, 0x4u, 0x1cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 't'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x2u, 0x42u, 0x42u, 0x42u, 0x62u, 0x66u, 0x7cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'u'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x22u, 0x22u, 0x34u, 0x14u, 0x1cu, 0x8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'v'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x200u, 0x332u, 0x132u, 0x152u, 0x1ccu, 0xccu, 0x8cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'w'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x22u, 0x36u, 0x1cu, 0xcu, 0x1cu, 0x36u, 0x22u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'x'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x22u, 0x22u, 0x34u, 0x14u, 0x1cu, 0x8u, 0x8u, 0x4u, 0x0u, 0x0u, 0x0u,  // 'y'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x3eu, 0x30u, 0x18u, 0x8u, 0x4u, 0x6u, 0x3eu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'z'
    0x0u, 0x0u, 0x8u, 0x4u, 0x4u, 0x4u, 0x6u, 0x2u, 0x2u, 0x6u, 0x6u, 0x4u, 0x4u, 0xcu, 0x0u, 0x0u, 0x0u,  // '{'
    0x0u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x2u, 0x0u, 0x0u,  // '|'
    0x0u, 0x0u, 0x3u, 0x6u, 0x4u, 0x4u, 0x4u, 0x8u, 0x8u, 0x4u, 0x4u, 0x4u, 0x4u, 0x3u, 0x0u, 0x0u, 0x0u,  // '}'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x4u, 0x3eu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '~'
};
static constexpr std::uint8_t k_simplex_advance[] = {
    4, 4, 5, 9, 8, 10, 9, 3, 8, 8, 6, 8, 4, 7, 4, 7, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 4, 4, 7, 8, 7, 7, 11, 9, 9, 9, 9, 8, 8, 9, 10, 4, 9, 8, 8, 11, 9, 9, 9, 9, 9, 8, 8, 10, 9, 11, 9, 9, 8, 5, 7, 5, 6, 10, 5, 8, 8, 8, 8, 8, 5, 8, 8, 4, 4, 7, 4, 12, 8, 8, 8, 8, 5, 7, 6, 8, 8, 11, 7, 8, 7, 5, 3, 5, 8
};

static constexpr std::uint32_t k_complex_small_rows[] = {
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // ' '
    0x0u, 0x0u, 0x0u, 0x0u, 0x4u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x0u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '!'
    0x0u, 0x0u, 0x0u, 0x0u, 0x36u, 0x36u, 0x36u, 0x16u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '"'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x230u, 0x330u, 0x330u, 0xffeu, 0x110u, 0x110u, 0x118u, 0x7feu, 0x7feu, 0x188u, 0x88u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '#'
    0x0u, 0x0u, 0x20u, 0x20u, 0x70u, 0x1fcu, 0x304u, 0x306u, 0x6u, 0x1cu, 0xf8u, 0x3c0u, 0x300u, 0x202u, 0x306u, 0x3deu, 0x1f8u, 0x20u, 0x20u, 0x0u, 0x0u, 0x0u, 0x0u,  // '$'
    0x0u, 0x0u, 0x0u, 0x0u, 0x808u, 0xc36u, 0x622u, 0x322u, 0x122u, 0x1beu, 0xc8u, 0xf60u, 0x1920u, 0x1130u, 0x1118u, 0x190cu, 0xe04u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '%'
    0x0u, 0x0u, 0x0u, 0x0u, 0x70u, 0xf8u, 0x18cu, 0x18cu, 0xccu, 0x78u, 0x438u, 0xc6cu, 0x4c6u, 0x786u, 0x306u, 0x7ccu, 0xcf8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '&'
    0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // "'"
    0x0u, 0x0u, 0xc0u, 0xe0u, 0x30u, 0x30u, 0x10u, 0x10u, 0x10u, 0x10u, 0x10u, 0x10u, 0x10u, 0x10u, 0x10u, 0x30u, 0x30u, 0x60u, 0xc0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '('
    0x0u, 0x0u, 0x18u, 0x38u, 0x60u, 0x40u, 0x40u, 0xc0u, 0xc0u, 0xc0u, 0xc0u, 0xc0u, 0xc0u, 0xc0u, 0x40u, 0x40u, 0x60u, 0x30u, 0x38u, 0x0u, 0x0u, 0x0u, 0x0u,  // ')'
    0x0u, 0x0u, 0x0u, 0x0u, 0x18u, 0x5eu, 0x7eu, 0x18u, 0x3cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '*'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x20u, 0x20u, 0x20u, 0x60u, 0x7feu, 0x60u, 0x20u, 0x20u, 0x20u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '+'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // ','
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0xfeu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '-'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '.'
    0x0u, 0x0u, 0x0u, 0x80u, 0xc0u, 0x40u, 0x60u, 0x20u, 0x30u, 0x30u, 0x10u, 0x18u, 0x8u, 0xcu, 0xcu, 0x4u, 0x6u, 0x2u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '/'
    0x0u, 0x0u, 0x0u, 0x0u, 0xf0u, 0x1fcu, 0x38cu, 0x3c6u, 0x346u, 0x366u, 0x326u, 0x326u, 0x316u, 0x316u, 0x31eu, 0x1dcu, 0xf8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '0'
    0x0u, 0x0u, 0x0u, 0x0u, 0x60u, 0x70u, 0x7cu, 0x6cu, 0x60u, 0x60u, 0x60u, 0x60u, 0x60u, 0x60u, 0x60u, 0x3fcu, 0x3fcu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '1'
    0x0u, 0x0u, 0x0u, 0x0u, 0x70u, 0x1fcu, 0x18cu, 0x306u, 0x300u, 0x180u, 0x1c0u, 0xe0u, 0x70u, 0x38u, 0x1cu, 0x3feu, 0x3feu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '2'
    0x0u, 0x0u, 0x0u, 0x0u, 0x1fcu, 0x3fcu, 0x180u, 0xc0u, 0x60u, 0x30u, 0x1f0u, 0x380u, 0x300u, 0x300u, 0x306u, 0x1dcu, 0xf8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '3'
    0x0u, 0x0u, 0x0u, 0x0u, 0xc0u, 0x1c0u, 0x1e0u, 0x1b0u, 0x198u, 0x198u, 0x18cu, 0x186u, 0x3feu, 0x7feu, 0x180u, 0x180u, 0x180u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '4'
    0x0u, 0x0u, 0x0u, 0x0u, 0x1fcu, 0x1fcu, 0xcu, 0xcu, 0xcu, 0xfcu, 0x18cu, 0x300u, 0x300u, 0x306u, 0x306u, 0x1dcu, 0xf8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '5'
    0x0u, 0x0u, 0x0u, 0x0u, 0x40u, 0x60u, 0x30u, 0x30u, 0x38u, 0x1fcu, 0x38cu, 0x306u, 0x206u, 0x306u, 0x306u, 0x1dcu, 0xf8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '6'
    0x0u, 0x0u, 0x0u, 0x0u, 0x3fcu, 0x3fcu, 0x100u, 0x180u, 0x180u, 0xc0u, 0xc0u, 0x60u, 0x60u, 0x20u, 0x30u, 0x30u, 0x18u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '7'
    0x0u, 0x0u, 0x0u, 0x0u, 0xf0u, 0x1fcu, 0x304u, 0x306u, 0x304u, 0x1dcu, 0x1fcu, 0x38eu, 0x306u, 0x206u, 0x306u, 0x38cu, 0xf8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '8'
    0x0u, 0x0u, 0x0u, 0x0u, 0x70u, 0x1fcu, 0x38eu, 0x306u, 0x306u, 0x306u, 0x38cu, 0x1fcu, 0xe0u, 0xc0u, 0x60u, 0x30u, 0x18u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '9'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x4u, 0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // ':'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0xeu, 0x4u, 0x0u, 0x0u, 0x0u, 0x0u, 0x4u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // ';'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0xe0u, 0x70u, 0x18u, 0xeu, 0x6u, 0xeu, 0x18u, 0x70u, 0xc0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '<'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x1feu, 0x0u, 0x0u, 0x0u, 0x1feu, 0x1fcu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '='
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x1cu, 0x30u, 0xe0u, 0xc0u, 0xe0u, 0x38u, 0x1cu, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '>'
    0x0u, 0x0u, 0x0u, 0x0u, 0x78u, 0xfcu, 0x186u, 0x182u, 0x180u, 0xc0u, 0x60u, 0x30u, 0x30u, 0x30u, 0x0u, 0x30u, 0x30u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '?'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x7e0u, 0xe38u, 0x180cu, 0x3084u, 0x33e6u, 0x2222u, 0x2232u, 0x2232u, 0x3622u, 0x1fe6u, 0x884u, 0xcu, 0xc18u, 0x7f0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '@'
    0x0u, 0x0u, 0x0u, 0x0u, 0x60u, 0xe0u, 0xf0u, 0xb0u, 0x198u, 0x198u, 0x308u, 0x30cu, 0x30cu, 0x7fcu, 0x606u, 0x406u, 0xc03u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'A'
    0x0u, 0x0u, 0x0u, 0x0u, 0xfcu, 0x3fcu, 0x704u, 0x604u, 0x604u, 0x38cu, 0x3fcu, 0x704u, 0x604u, 0x604u, 0x604u, 0x38cu, 0x1fcu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'B'
    0x0u, 0x0u, 0x0u, 0x0u, 0xf0u, 0x3f8u, 0x70cu, 0x606u, 0x406u, 0x6u, 0x6u, 0x6u, 0x6u, 0x606u, 0x60cu, 0x3bcu, 0x1f8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'C'
    0x0u, 0x0u, 0x0u, 0x0u, 0x7cu, 0x3fcu, 0x704u, 0x604u, 0x604u, 0x404u, 0x404u, 0x404u, 0x604u, 0x604u, 0x604u, 0x3fcu, 0x1fcu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'D'
    0x0u, 0x0u, 0x0u, 0x0u, 0x3fcu, 0x3fcu, 0x4u, 0x4u, 0x4u, 0x4u, 0x3fcu, 0xcu, 0x4u, 0x4u, 0x4u, 0x3fcu, 0x3fcu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'E'
    0x0u, 0x0u, 0x0u, 0x0u, 0x3fcu, 0x3fcu, 0x4u, 0x4u, 0x4u, 0x4u, 0x1fcu, 0x1fcu, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'F'
    0x0u, 0x0u, 0x0u, 0x0u, 0xf0u, 0x3f8u, 0x70cu, 0x606u, 0x6u, 0x6u, 0x786u, 0x786u, 0x406u, 0x606u, 0x60cu, 0x3bcu, 0x1f8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'G'
    0x0u, 0x0u, 0x0u, 0x0u, 0x404u, 0x404u, 0x404u, 0x404u, 0x404u, 0x60cu, 0x7fcu, 0x60cu, 0x404u, 0x404u, 0x404u, 0x404u, 0x404u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'H'
    0x0u, 0x0u, 0x0u, 0x0u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'I'
    0x0u, 0x0u, 0x0u, 0x0u, 0x3fcu, 0x3feu, 0x300u, 0x300u, 0x300u, 0x300u, 0x300u, 0x300u, 0x300u, 0x306u, 0x306u, 0x1deu, 0xf8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'J'
    0x0u, 0x0u, 0x0u, 0x0u, 0x304u, 0x384u, 0xc4u, 0x64u, 0x34u, 0x1cu, 0x1cu, 0x3cu, 0x74u, 0xe4u, 0x1c4u, 0x384u, 0x304u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'K'
    0x0u, 0x0u, 0x0u, 0x0u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x1fcu, 0x3fcu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'L'
    0x0u, 0x0u, 0x0u, 0x0u, 0x1804u, 0x180cu, 0x1c0cu, 0x1c1cu, 0x1e1cu, 0x1b34u, 0x1b24u, 0x19e4u, 0x19c4u, 0x18c4u, 0x1804u, 0x1804u, 0x1804u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'M'
    0x0u, 0x0u, 0x0u, 0x0u, 0x404u, 0x60cu, 0x61cu, 0x61cu, 0x634u, 0x664u, 0x664u, 0x6c4u, 0x684u, 0x784u, 0x704u, 0x704u, 0x604u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'N'
    0x0u, 0x0u, 0x0u, 0x0u, 0xf0u, 0x3f8u, 0x70cu, 0x606u, 0x606u, 0x606u, 0x606u, 0x606u, 0x606u, 0x606u, 0x70cu, 0x3fcu, 0x1f8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'O'
    0x0u, 0x0u, 0x0u, 0x0u, 0xfcu, 0x3fcu, 0x704u, 0x604u, 0x604u, 0x604u, 0x3ccu, 0x1fcu, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'P'
    0x0u, 0x0u, 0x0u, 0x0u, 0xf0u, 0x3f8u, 0x30cu, 0x606u, 0x606u, 0x606u, 0x606u, 0x606u, 0x606u, 0x606u, 0x70cu, 0x3fcu, 0x3f8u, 0x600u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'Q'
    0x0u, 0x0u, 0x0u, 0x0u, 0x7cu, 0x3fcu, 0x704u, 0x604u, 0x604u, 0x304u, 0x3fcu, 0x1fcu, 0x184u, 0x184u, 0x304u, 0x604u, 0x604u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'R'
    0x0u, 0x0u, 0x0u, 0x0u, 0xf8u, 0x1fcu, 0x306u, 0x306u, 0x6u, 0x1cu, 0xf8u, 0x3c0u, 0x300u, 0x202u, 0x306u, 0x3dcu, 0x1f8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'S'
    0x0u, 0x0u, 0x0u, 0x0u, 0x3feu, 0x3feu, 0x30u, 0x30u, 0x30u, 0x30u, 0x30u, 0x30u, 0x30u, 0x30u, 0x30u, 0x30u, 0x30u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'T'
    0x0u, 0x0u, 0x0u, 0x0u, 0x404u, 0x606u, 0x606u, 0x606u, 0x606u, 0x606u, 0x606u, 0x606u, 0x604u, 0x60cu, 0x60cu, 0x3b8u, 0x1f0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'U'
    0x0u, 0x0u, 0x0u, 0x0u, 0x402u, 0x606u, 0x606u, 0x204u, 0x30cu, 0x30cu, 0x188u, 0x198u, 0x198u, 0xd0u, 0xf0u, 0xf0u, 0x60u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'V'
    0x0u, 0x0u, 0x0u, 0x0u, 0x1002u, 0x3006u, 0x1006u, 0x18c6u, 0x18c4u, 0x19ccu, 0x196cu, 0x96cu, 0xf2cu, 0xe38u, 0xe38u, 0xe18u, 0x418u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'W'
    0x0u, 0x0u, 0x0u, 0x0u, 0x602u, 0x306u, 0x30cu, 0x198u, 0xd8u, 0xf0u, 0x70u, 0xf0u, 0xd8u, 0x198u, 0x30cu, 0x306u, 0x602u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'X'
    0x0u, 0x0u, 0x0u, 0x0u, 0x402u, 0x606u, 0x304u, 0x30cu, 0x198u, 0xd8u, 0xf0u, 0x70u, 0x60u, 0x60u, 0x60u, 0x60u, 0x60u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'Y'
    0x0u, 0x0u, 0x0u, 0x0u, 0x3feu, 0x3feu, 0x180u, 0x180u, 0xc0u, 0x60u, 0x70u, 0x30u, 0x18u, 0xcu, 0xeu, 0x3feu, 0x3feu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'Z'
    0x0u, 0x0u, 0x0u, 0x1eu, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x1eu, 0x1eu, 0x0u, 0x0u, 0x0u,  // '['
    0x0u, 0x0u, 0x0u, 0x2u, 0x6u, 0x6u, 0x4u, 0xcu, 0x8u, 0x18u, 0x10u, 0x30u, 0x30u, 0x20u, 0x60u, 0x40u, 0xc0u, 0xc0u, 0x80u, 0x0u, 0x0u, 0x0u, 0x0u,  // '\\'
    0x0u, 0x0u, 0x0u, 0x1eu, 0x18u, 0x18u, 0x18u, 0x18u, 0x18u, 0x18u, 0x18u, 0x18u, 0x18u, 0x18u, 0x18u, 0x18u, 0x18u, 0x18u, 0x1eu, 0xeu, 0x0u, 0x0u, 0x0u,  // ']'
    0x0u, 0x0u, 0x0u, 0x0u, 0x18u, 0x3cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '^'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0xffeu, 0xffeu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '_'
    0x0u, 0x0u, 0x0u, 0x0u, 0xcu, 0x18u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '`'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x30u, 0xfcu, 0x186u, 0x180u, 0x1f0u, 0x1bcu, 0x186u, 0x182u, 0x1c6u, 0x1bcu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'a'
    0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x6u, 0x66u, 0x1feu, 0x18eu, 0x306u, 0x306u, 0x306u, 0x306u, 0x30eu, 0x1deu, 0xf6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'b'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x20u, 0xfcu, 0x18eu, 0x106u, 0x6u, 0x6u, 0x6u, 0x186u, 0x1dcu, 0xf8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'c'
    0x0u, 0x0u, 0x0u, 0x0u, 0x100u, 0x100u, 0x100u, 0x110u, 0x1fcu, 0x18eu, 0x186u, 0x106u, 0x106u, 0x106u, 0x186u, 0x1ccu, 0x178u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'd'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x20u, 0xfcu, 0x184u, 0x186u, 0x186u, 0x1feu, 0x6u, 0x4u, 0x1ccu, 0xf8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'e'
    0x0u, 0x0u, 0x0u, 0x0u, 0x78u, 0xcu, 0xcu, 0xcu, 0x7fu, 0xcu, 0xcu, 0xcu, 0xcu, 0xcu, 0xcu, 0xcu, 0xcu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'f'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x10u, 0x1fcu, 0x18eu, 0x186u, 0x106u, 0x106u, 0x106u, 0x186u, 0x1dcu, 0x178u, 0x100u, 0x186u, 0x1dcu, 0x78u, 0x0u, 0x0u,  // 'g'
    0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x6u, 0x66u, 0x1feu, 0x18eu, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'h'
    0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x0u, 0x0u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'i'
    0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x4u, 0x0u, 0x0u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x4u, 0x6u, 0x6u, 0x3u, 0x0u, 0x0u, 0x0u,  // 'j'
    0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x6u, 0x6u, 0xc6u, 0x66u, 0x3eu, 0x1eu, 0x1eu, 0x36u, 0x66u, 0xc6u, 0x186u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'k'
    0x0u, 0x0u, 0x0u, 0x0u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'l'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x820u, 0x3efeu, 0x638eu, 0x6186u, 0x6186u, 0x6186u, 0x6186u, 0x6186u, 0x6186u, 0x6186u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'm'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x60u, 0x1feu, 0x18eu, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'n'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x20u, 0xfcu, 0x18eu, 0x186u, 0x106u, 0x106u, 0x106u, 0x186u, 0x1ccu, 0xf8u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'o'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x60u, 0x1feu, 0x18eu, 0x306u, 0x306u, 0x306u, 0x306u, 0x30eu, 0x1deu, 0xf6u, 0x6u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u,  // 'p'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x10u, 0x1fcu, 0x18eu, 0x186u, 0x106u, 0x106u, 0x106u, 0x186u, 0x1ccu, 0x178u, 0x100u, 0x100u, 0x100u, 0x0u, 0x0u, 0x0u,  // 'q'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x7eu, 0xeu, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'r'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x10u, 0x7cu, 0xc6u, 0x6u, 0x1cu, 0x78u, 0xc0u, 0x80u, 0xc6u, 0x7cu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 's'
    0x0u, 0x0u, 0x0u, 0x0u, 0xcu, 0xcu, 0xcu, 0xcu, 0x3fu, 0xcu, 0xcu, 0xcu, 0xcu, 0xcu, 0xcu, 0x18u, 0x78u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 't'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x306u, 0x384u, 0x3dcu, 0x378u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'u'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x106u, 0x186u, 0x184u, 0xccu, 0xccu, 0x48u, 0x78u, 0x70u, 0x30u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'v'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x30c2u, 0x11c6u, 0x19c6u, 0x1964u, 0x1b2cu, 0xb2cu, 0xe38u, 0xe38u, 0x618u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'w'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x186u, 0xccu, 0x78u, 0x38u, 0x30u, 0x78u, 0xccu, 0xc6u, 0x182u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'x'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x106u, 0x186u, 0x84u, 0xccu, 0xccu, 0x78u, 0x78u, 0x30u, 0x30u, 0x10u, 0x18u, 0x18u, 0x0u, 0x0u, 0x0u,  // 'y'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0xfeu, 0xc0u, 0x60u, 0x30u, 0x18u, 0x1cu, 0xcu, 0xeu, 0x1feu, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // 'z'
    0x0u, 0x0u, 0x0u, 0x30u, 0x18u, 0xcu, 0xcu, 0xcu, 0xcu, 0xcu, 0x6u, 0x6u, 0x6u, 0xcu, 0xcu, 0xcu, 0xcu, 0xcu, 0x38u, 0x30u, 0x0u, 0x0u, 0x0u,  // '{'
    0x0u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x6u, 0x4u, 0x0u, 0x0u,  // '|'
    0x0u, 0x0u, 0x0u, 0x7u, 0xeu, 0x8u, 0x8u, 0x18u, 0x18u, 0x18u, 0x38u, 0x30u, 0x18u, 0x18u, 0x18u, 0x18u, 0x8u, 0xcu, 0xeu, 0x6u, 0x0u, 0x0u, 0x0u,  // '}'
    0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x1feu, 0xc0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u, 0x0u,  // '~'
};
static constexpr std::uint8_t k_complex_small_advance[] = {
    5, 5, 7, 13, 12, 14, 13, 4, 12, 12, 9, 12, 5, 9, 5, 9, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 5, 5, 9, 11, 9, 10, 16, 13, 13, 13, 13, 12, 11, 13, 13, 5, 12, 11, 11, 15, 13, 13, 12, 13, 12, 12, 11, 13, 12, 15, 12, 12, 11, 6, 9, 6, 8, 14, 7, 11, 11, 11, 11, 11, 7, 11, 12, 5, 5, 10, 5, 17, 12, 11, 11, 11, 7, 10, 8, 11, 11, 15, 10, 11, 10, 7, 5, 7, 11
};

const std::array<BakedFont, kFontCount> kFonts = {{
    {"plain", 21, 17, k_plain_rows, k_plain_advance},
    {"simplex", 17, 14, k_simplex_rows, k_simplex_advance},
    {"complex_small", 23, 19, k_complex_small_rows, k_complex_small_advance},
}};

}  // namespace fbsynth::raster::detail
