// SPDX-License-Identifier: Apache-2.0
#include "fbsynth/coco.hpp"

#include <bit>
#include <numeric>

namespace fbsynth::coco {
namespace {

using nlohmann::json;

// Appends a run of `len` pixels with value `bit` to counts whose last run has value `last`.
struct RunBuilder {
  std::vector<std::uint32_t> counts{0};
  bool last = false;

  void push(bool bit, std::uint32_t len) {
    if (len == 0) return;
    if (bit != last) {
      counts.push_back(0);
      last = bit;
    }
    counts.back() += len;
  }
};

template <typename T>
T require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::format, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(Errc::format, std::string("bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

RleMask rle_encode(const BinaryMask& mask) {
  if (mask.width() <= 0 || mask.height() <= 0) throw Error(Errc::domain, "cannot encode an empty raster");
  RunBuilder rb;
  for (int x = 0; x < mask.width(); ++x)
    for (int y = 0; y < mask.height(); ++y) rb.push(mask.at(x, y), 1);
  return {mask.height(), mask.width(), std::move(rb.counts)};
}

RleMask rle_encode(const InstanceMask& mask) {
  const Size c = mask.canvas();
  if (c.width <= 0 || c.height <= 0) throw Error(Errc::domain, "cannot encode an empty raster");
  const BBox& b = mask.bbox();
  RunBuilder rb;
  rb.push(false, static_cast<std::uint32_t>(b.x) * c.height);
  for (int x = b.x; x < b.right(); ++x) {
    rb.push(false, b.y);
    for (int y = b.y; y < b.bottom(); ++y) rb.push(mask.local().at(x - b.x, y - b.y), 1);
    rb.push(false, c.height - b.bottom());
  }
  rb.push(false, static_cast<std::uint32_t>(c.width - b.right()) * c.height);
  return {c.height, c.width, std::move(rb.counts)};
}

BinaryMask rle_decode(const RleMask& rle) {
  if (rle.height <= 0 || rle.width <= 0) throw Error(Errc::format, "RLE size must be positive");
  const std::uint64_t total = std::accumulate(rle.counts.begin(), rle.counts.end(), std::uint64_t{0});
  if (total != static_cast<std::uint64_t>(rle.height) * rle.width)
    throw Error(Errc::format, "RLE counts sum to " + std::to_string(total) + ", expected " +
                                  std::to_string(static_cast<std::uint64_t>(rle.height) * rle.width));
  BinaryMask m(rle.width, rle.height);
  std::uint64_t pos = 0;
  bool bit = false;
  for (std::size_t i = 0; i < rle.counts.size(); ++i, bit = !bit) {
    if (i > 0 && rle.counts[i] == 0) throw Error(Errc::format, "RLE run after the first is empty");
    for (std::uint32_t k = 0; k < rle.counts[i]; ++k, ++pos)
      if (bit) m.set(static_cast<int>(pos / rle.height), static_cast<int>(pos % rle.height));
  }
  return m;
}

json rle_to_json(const RleMask& rle) { return {{"counts", rle.counts}, {"size", {rle.height, rle.width}}}; }

RleMask rle_from_json(const json& j) {
  RleMask r;
  const auto size = require<std::vector<int>>(j, "size");
  if (size.size() != 2) throw Error(Errc::format, "RLE size must be [height, width]");
  r.height = size[0];
  r.width = size[1];
  r.counts = require<std::vector<std::uint32_t>>(j, "counts");
  return r;
}

json categories_json(CategoriesMode mode) {
  json cats = json::array();
  if (mode == CategoriesMode::class_agnostic) {
    cats.push_back({{"id", 1}, {"name", kAgnosticName}, {"supercategory", kAgnosticName}});
    return cats;
  }
  for (std::size_t i = 0; i < kCategoryCount; ++i)
    cats.push_back({{"id", static_cast<int>(i) + 1}, {"name", to_string(static_cast<Category>(i))}, {"supercategory", kAgnosticName}});
  return cats;
}

int category_id(Category c, CategoriesMode mode) {
  return mode == CategoriesMode::class_agnostic ? 1 : static_cast<int>(c) + 1;
}

json image_json(int id, const std::string& file_name, Size size) {
  return {{"file_name", file_name}, {"height", size.height}, {"id", id}, {"width", size.width}};
}

json annotation_json(const InstanceRecord& rec, int ann_id, int image_id, CategoriesMode mode) {
  const BBox& b = rec.bbox();
  json ext = {{"category", to_string(rec.category)}, {"params", rec.params}, {"z_order", rec.z_order}};
  ext["anchor_anatomy"] = rec.anchor_anatomy ? json(*rec.anchor_anatomy) : json(nullptr);
  ext["anchor_point"] = rec.anchor_point ? json{rec.anchor_point->x, rec.anchor_point->y} : json(nullptr);
  return {{"area", rec.mask.area()},
          {"bbox", {b.x, b.y, b.w, b.h}},
          {"category_id", category_id(rec.category, mode)},
          {"id", ann_id},
          {"image_id", image_id},
          {"iscrowd", 0},
          {"segmentation", rle_to_json(rle_encode(rec.mask))},
          {kExtensionKey, std::move(ext)}};
}

CocoWriter::CocoWriter(const std::string& path, CategoriesMode mode) : path_(path), out_(path), mode_(mode) {
  if (!out_) throw Error(Errc::io, "cannot open " + path + " for writing");
  out_ << "{\"annotations\":[";
}

CocoWriter::~CocoWriter() {
  if (finished_) return;
  try {
    finish();
  } catch (...) {
  }
}

int CocoWriter::add_image(const std::string& file_name, Size size, const std::vector<InstanceRecord>& instances) {
  if (finished_) throw Error(Errc::io, "writer already finished");
  const int image_id = static_cast<int>(images_.size()) + 1;
  for (const auto& rec : instances) {
    if (!first_ann_) out_ << ',';
    first_ann_ = false;
    out_ << annotation_json(rec, next_ann_++, image_id, mode_).dump();
  }
  images_.push_back(image_json(image_id, file_name, size).dump());
  if (!out_) throw Error(Errc::io, "write failed: " + path_);
  return image_id;
}

void CocoWriter::finish() {
  if (finished_) return;
  finished_ = true;
  out_ << "],\"categories\":" << categories_json(mode_).dump() << ",\"images\":[";
  for (std::size_t i = 0; i < images_.size(); ++i) out_ << (i ? "," : "") << images_[i];
  out_ << "]}\n";
  out_.close();
  if (!out_) throw Error(Errc::io, "write failed: " + path_);
}

void write_coco(const std::vector<CocoImageSpec>& images, CategoriesMode mode, const std::string& path) {
  CocoWriter w(path, mode);
  for (const auto& img : images) w.add_image(img.file_name, img.size, img.instances);
  w.finish();
}

CocoDataset parse_coco(const json& doc) {
  if (!doc.is_object()) throw Error(Errc::format, "COCO document must be an object");
  CocoDataset ds;
  for (const auto& c : require<json>(doc, "categories"))
    ds.categories[require<int>(c, "id")] = require<std::string>(c, "name");
  std::map<int, std::size_t> image_index;
  for (const auto& i : require<json>(doc, "images")) {
    CocoImage img{require<int>(i, "id"), require<std::string>(i, "file_name"), require<int>(i, "width"),
                  require<int>(i, "height")};
    if (!image_index.emplace(img.id, ds.images.size()).second)
      throw Error(Errc::format, "duplicate image id " + std::to_string(img.id));
    ds.images.push_back(std::move(img));
  }
  for (const auto& a : require<json>(doc, "annotations")) {
    CocoAnnotation ann;
    ann.id = require<int>(a, "id");
    ann.image_id = require<int>(a, "image_id");
    ann.category_id = require<int>(a, "category_id");
    ann.segmentation = rle_from_json(require<json>(a, "segmentation"));
    const auto bbox = require<std::vector<int>>(a, "bbox");
    if (bbox.size() != 4) throw Error(Errc::format, "bbox must have four entries");
    std::copy(bbox.begin(), bbox.end(), ann.bbox.begin());
    ann.area = require<std::size_t>(a, "area");
    ann.iscrowd = require<int>(a, "iscrowd");
    if (a.contains(kExtensionKey)) ann.extension = a.at(std::string(kExtensionKey));
    auto it = image_index.find(ann.image_id);
    if (it == image_index.end())
      throw Error(Errc::format, "annotation " + std::to_string(ann.id) + " references unknown image");
    if (!ds.categories.contains(ann.category_id))
      throw Error(Errc::format, "annotation " + std::to_string(ann.id) + " references unknown category");
    const CocoImage& img = ds.images[it->second];
    if (ann.segmentation.width != img.width || ann.segmentation.height != img.height)
      throw Error(Errc::format, "annotation " + std::to_string(ann.id) + " size differs from its image");
    ds.annotations.push_back(std::move(ann));
  }
  return ds;
}

CocoDataset load_coco(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::format, path + ": " + e.what());
  }
  return parse_coco(doc);
}

json DatasetStats::to_json() const {
  json areas = json::object(), per_image = json::object();
  for (auto [bin, n] : area_log2_histogram) areas[std::to_string(bin)] = n;
  for (auto [k, n] : instances_per_image) per_image[std::to_string(k)] = n;
  return {{"images", images},
          {"annotations", annotations},
          {"per_category", per_category},
          {"area_log2_histogram", areas},
          {"instances_per_image", per_image},
          {"overlap_rate", overlap_rate}};
}

DatasetStats dataset_stats(const CocoDataset& ds) {
  DatasetStats st;
  st.images = ds.images.size();
  st.annotations = ds.annotations.size();
  std::map<int, std::vector<const CocoAnnotation*>> by_image;
  for (const auto& img : ds.images) by_image[img.id];
  for (const auto& a : ds.annotations) {
    by_image[a.image_id].push_back(&a);
    ++st.per_category[ds.categories.at(a.category_id)];
    if (a.area > 0) ++st.area_log2_histogram[std::bit_width(a.area) - 1];
  }
  std::size_t overlapping = 0;
  for (const auto& [id, anns] : by_image) {
    ++st.instances_per_image[anns.size()];
    std::vector<BinaryMask> masks;
    masks.reserve(anns.size());
    for (const auto* a : anns) masks.push_back(rle_decode(a->segmentation));
    for (std::size_t i = 0; i < anns.size(); ++i) {
      const BBox bi{anns[i]->bbox[0], anns[i]->bbox[1], anns[i]->bbox[2], anns[i]->bbox[3]};
      bool hit = false;
      for (std::size_t j = 0; j < anns.size() && !hit; ++j) {
        if (i == j) continue;
        const BBox bj{anns[j]->bbox[0], anns[j]->bbox[1], anns[j]->bbox[2], anns[j]->bbox[3]};
        const BBox box = bi.intersect(bj);
        for (int y = box.y; y < box.bottom() && !hit; ++y)
          for (int x = box.x; x < box.right() && !hit; ++x) hit = masks[i].at(x, y) && masks[j].at(x, y);
      }
      overlapping += hit;
    }
  }
  if (st.annotations) st.overlap_rate = static_cast<double>(overlapping) / static_cast<double>(st.annotations);
  return st;
}

DatasetStats dataset_stats(const std::string& path) { return dataset_stats(load_coco(path)); }

}  // namespace fbsynth::coco
