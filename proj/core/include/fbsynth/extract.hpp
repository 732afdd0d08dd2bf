// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "fbsynth/error.hpp"
#include "fbsynth/image.hpp"
#include "fbsynth/image_io.hpp"
#include "fbsynth/instance.hpp"

namespace fbsynth::extract {

/// Interleaved RGB raster with channels in [0,1].
class ColorImage {
 public:
  ColorImage() = default;
  ColorImage(int width, int height);
  static ColorImage from_rgb8(const io::Rgb8& img);
  static ColorImage from_gray(const GrayImage& img);

  int width() const { return width_; }
  int height() const { return height_; }
  Size size() const { return {width_, height_}; }
  const float* at(int x, int y) const { return &data_[3 * (static_cast<std::size_t>(y) * width_ + x)]; }
  void set(int x, int y, float r, float g, float b);

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<float> data_;
};

struct ExtractParams {
  double chroma_threshold = 0.2;  // max(R,G,B) - min(R,G,B)
  double luma_threshold = 0.1;    // |luma - clean| for weakly colored strokes
  double min_saturation = 0.05;   // chroma floor for the luma rule
  int min_area = 20;
  int hue_bins = 12;              // bin 0 is centered on pure red
};

/// Hue in degrees [0, 360) and its bin; hue is 0 for achromatic pixels.
double hue_degrees(float r, float g, float b);
int hue_bin(double hue, int bins);

/// Colored-annotation pixels grouped by hue bin, then into 8-connected
/// components; components smaller than min_area are dropped. Records come in
/// raster order of their first pixel. Throws Errc::alignment on size mismatch.
std::vector<InstanceRecord> extract_masks(const ColorImage& annotated, const GrayImage& clean,
                                          const ExtractParams& params = {});

/// Single-image class-agnostic COCO file.
void export_extracted(const std::vector<InstanceRecord>& records, Size size, const std::string& file_name,
                      const std::string& path);

}  // namespace fbsynth::extract
