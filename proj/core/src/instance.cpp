// SPDX-License-Identifier: Apache-2.0
#include "fbsynth/instance.hpp"

#include "fbsynth/error.hpp"

namespace fbsynth {

InstanceMask InstanceMask::from_local(const BinaryMask& local, Pixel origin, Size canvas) {
  int x0 = canvas.width, y0 = canvas.height, x1 = -1, y1 = -1;
  for (int y = 0; y < local.height(); ++y)
    for (int x = 0; x < local.width(); ++x) {
      const int cx = origin.x + x, cy = origin.y + y;
      if (!local.at(x, y) || !canvas.contains(cx, cy)) continue;
      x0 = std::min(x0, cx);
      x1 = std::max(x1, cx);
      y0 = std::min(y0, cy);
      y1 = std::max(y1, cy);
    }
  if (x1 < 0) throw Error(Errc::empty_footprint, "instance mask is empty");
  InstanceMask m;
  m.canvas_ = canvas;
  m.box_ = {x0, y0, x1 - x0 + 1, y1 - y0 + 1};
  m.bits_ = BinaryMask(m.box_.w, m.box_.h);
  for (int y = 0; y < m.box_.h; ++y)
    for (int x = 0; x < m.box_.w; ++x)
      if (local.at(m.box_.x + x - origin.x, m.box_.y + y - origin.y)) {
        m.bits_.set(x, y);
        ++m.area_;
      }
  return m;
}

InstanceMask InstanceMask::from_canvas(const BinaryMask& full) { return from_local(full, {0, 0}, full.size()); }

InstanceMask InstanceMask::from_patch(const AlphaPatch& patch, Size canvas) {
  BinaryMask local(patch.width, patch.height);
  for (int y = 0; y < patch.height; ++y)
    for (int x = 0; x < patch.width; ++x)
      if (patch.in_footprint(x, y)) local.set(x, y);
  return from_local(local, patch.origin, canvas);
}

BinaryMask InstanceMask::full() const {
  BinaryMask out(canvas_.width, canvas_.height);
  for (int y = 0; y < box_.h; ++y)
    for (int x = 0; x < box_.w; ++x)
      if (bits_.at(x, y)) out.set(box_.x + x, box_.y + y);
  return out;
}

}  // namespace fbsynth
