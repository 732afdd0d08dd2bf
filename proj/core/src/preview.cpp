// SPDX-License-Identifier: Apache-2.0
#include "fbsynth/preview.hpp"

#include <filesystem>
#include <set>

#include "fbsynth/coco.hpp"
#include "fbsynth/raster.hpp"

namespace fs = std::filesystem;

namespace fbsynth::preview {
namespace {

constexpr std::array<Color, kCategoryCount> kPalette{{
    {230, 25, 75},    // text
    {60, 180, 75},    // circular
    {255, 225, 25},   // ring
    {0, 130, 200},    // rectangular
    {245, 130, 48},   // clip
    {145, 30, 180},   // grid
    {70, 240, 240},   // line
    {240, 50, 230},   // parallel_lines
    {210, 245, 60},   // cutpaste
}};

constexpr int kLegendScale = 1;
constexpr int kLegendPad = 4;

void put(io::Rgb8& img, int x, int y, Color c) {
  std::uint8_t* p = &img.data[3 * (static_cast<std::size_t>(y) * img.width + x)];
  p[0] = c[0];
  p[1] = c[1];
  p[2] = c[2];
}

}  // namespace

Color category_color(Category c) { return kPalette[static_cast<std::size_t>(c)]; }

BinaryMask contour(const BinaryMask& mask) {
  BinaryMask out(mask.width(), mask.height());
  for (int y = 0; y < mask.height(); ++y)
    for (int x = 0; x < mask.width(); ++x)
      if (mask.at(x, y) && !(mask.get(x - 1, y) && mask.get(x + 1, y) && mask.get(x, y - 1) && mask.get(x, y + 1)))
        out.set(x, y);
  return out;
}

io::Rgb8 render_preview(const GrayImage& image, const std::vector<InstanceRecord>& instances) {
  std::set<Category> present;
  for (const auto& rec : instances) present.insert(rec.category);
  const int row_h = raster::font_height(0) * kLegendScale + kLegendPad;
  const int legend_h = static_cast<int>(present.size()) * row_h + (present.empty() ? 0 : kLegendPad);

  io::Rgb8 out{image.width(), image.height() + legend_h, {}};
  out.data.assign(3 * static_cast<std::size_t>(out.width) * out.height, 0);
  for (int y = 0; y < image.height(); ++y)
    for (int x = 0; x < image.width(); ++x) {
      const std::uint8_t v = io::to_u8(image.at(x, y));
      put(out, x, y, {v, v, v});
    }

  for (const auto& rec : instances) {
    const BBox& b = rec.bbox();
    const BinaryMask edge = contour(rec.mask.local());
    // The bbox is tight, so local-raster borders are mask borders too.
    for (int y = 0; y < b.h; ++y)
      for (int x = 0; x < b.w; ++x)
        if (edge.at(x, y)) put(out, b.x + x, b.y + y, category_color(rec.category));
  }

  int y0 = image.height() + kLegendPad;
  for (Category c : present) {
    const int sw = raster::font_height(0) * kLegendScale;
    for (int y = 0; y < sw && y0 + y < out.height; ++y)
      for (int x = 0; x < sw && kLegendPad + x < out.width; ++x) put(out, kLegendPad + x, y0 + y, category_color(c));
    const AlphaPatch label =
        raster::render_text(to_string(c), 0, kLegendScale, {1.0f, 1.0f}, raster::TextPolarity::bright);
    const int tx = 2 * kLegendPad + sw;
    for (int y = 0; y < label.height; ++y)
      for (int x = 0; x < label.width; ++x)
        if (label.in_footprint(x, y) && tx + x < out.width && y0 + y < out.height)
          put(out, tx + x, y0 + y, {255, 255, 255});
    y0 += row_h;
  }
  return out;
}

std::vector<std::string> run_preview(const std::string& dataset_dir, std::size_t k, const std::string& out_dir) {
  const coco::CocoDataset ds = coco::load_coco((fs::path(dataset_dir) / "annotations.json").string());
  if (ds.images.empty()) throw Error(Errc::format, "dataset " + dataset_dir + " has no images");
  fs::create_directories(out_dir);

  std::vector<std::string> written;
  for (std::size_t i = 0; i < std::min(k, ds.images.size()); ++i) {
    const coco::CocoImage& img = ds.images[i];
    const GrayImage gray = io::read_gray((fs::path(dataset_dir) / img.file_name).string());
    std::vector<InstanceRecord> recs;
    for (const auto& a : ds.annotations) {
      if (a.image_id != img.id) continue;
      InstanceRecord rec;
      rec.mask = InstanceMask::from_canvas(coco::rle_decode(a.segmentation));
      rec.category = Category::cutpaste;
      if (a.extension.is_object() && a.extension.contains("category"))
        rec.category = category_from_string(a.extension["category"].get<std::string>()).value_or(Category::cutpaste);
      recs.push_back(std::move(rec));
    }
    const std::string path = (fs::path(out_dir) / ("preview_" + std::to_string(img.id) + ".png")).string();
    io::write_rgb(path, render_preview(gray, recs));
    written.push_back(path);
  }
  return written;
}

}  // namespace fbsynth::preview
