#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Bake the Hershey stroke fonts shipped with OpenCV into fixed bitmap tables.

Run once; the output is checked in as core/src/font_data.cpp so the library
itself never touches a font renderer.
"""
import sys

import cv2
import numpy as np

FONTS = [
    ("plain", cv2.FONT_HERSHEY_PLAIN, 1.0),
    ("simplex", cv2.FONT_HERSHEY_SIMPLEX, 0.45),
    ("complex_small", cv2.FONT_HERSHEY_COMPLEX_SMALL, 0.8),
]
FIRST, LAST = 32, 126


def bake(face, scale):
    ascent = descent = width = 0
    for c in range(FIRST, LAST + 1):
        (w, h), base = cv2.getTextSize(chr(c), face, scale, 1)
        ascent, descent, width = max(ascent, h), max(descent, base), max(width, w)
    height = ascent + descent + 2
    cell_w = width + 2
    glyphs = []
    for c in range(FIRST, LAST + 1):
        (w, _), _ = cv2.getTextSize(chr(c), face, scale, 1)
        img = np.zeros((height, cell_w), np.uint8)
        cv2.putText(img, chr(c), (0, ascent), face, scale, 255, 1, cv2.LINE_8)
        rows = []
        for y in range(height):
            bits = 0
            for x in range(cell_w):
                if img[y, x] > 127:
                    bits |= 1 << x
            rows.append(bits)
        glyphs.append((max(w, 1), rows))
    return height, cell_w, glyphs


def main(out):
    lines = [
        "// SPDX-License-Identifier: Apache-2.0",
        "// Generated by tools/gen_fonts.py from the Hershey fonts. Do not edit.",
        "#include \"font_data.hpp\"",
        "",
        "namespace fbsynth::raster::detail {",
        "",
    ]
    tables = []
    for name, face, scale in FONTS:
        height, cell_w, glyphs = bake(face, scale)
        assert cell_w <= 32
        lines.append(f"static constexpr std::uint32_t k_{name}_rows[] = {{")
        for c, (adv, rows) in zip(range(FIRST, LAST + 1), glyphs):
            lines.append("    " + ", ".join(f"0x{r:x}u" for r in rows) + f",  // {chr(c)!r}")
        lines.append("};")
        lines.append(f"static constexpr std::uint8_t k_{name}_advance[] = {{")
        lines.append("    " + ", ".join(str(a) for a, _ in glyphs))
        lines.append("};")
        lines.append("")
        tables.append((name, height, cell_w))
    lines.append("const std::array<BakedFont, kFontCount> kFonts = {{")
    for name, height, cell_w in tables:
        lines.append(
            f"    {{\"{name}\", {height}, {cell_w}, k_{name}_rows, k_{name}_advance}},"
        )
    lines.append("}};")
    lines.append("")
    lines.append("}  // namespace fbsynth::raster::detail")
    with open(out, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1])
