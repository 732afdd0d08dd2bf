// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fbsynth/config.hpp"
#include "fbsynth/error.hpp"
#include "fbsynth/image.hpp"
#include "fbsynth/instance.hpp"

namespace fbsynth::coco {

/// Uncompressed COCO run-length encoding: column-major runs alternating
/// zero/one, starting with a (possibly empty) zero run.
struct RleMask {
  int height = 0;
  int width = 0;
  std::vector<std::uint32_t> counts;

  friend bool operator==(const RleMask&, const RleMask&) = default;
};

RleMask rle_encode(const BinaryMask& mask);
RleMask rle_encode(const InstanceMask& mask);
/// Throws Errc::format if the counts do not sum to height*width.
BinaryMask rle_decode(const RleMask& rle);

nlohmann::json rle_to_json(const RleMask& rle);
RleMask rle_from_json(const nlohmann::json& j);

inline constexpr std::string_view kExtensionKey = "fbsynth";
inline constexpr std::string_view kAgnosticName = "foreign_body";

nlohmann::json categories_json(CategoriesMode mode);
int category_id(Category c, CategoriesMode mode);

nlohmann::json image_json(int id, const std::string& file_name, Size size);
nlohmann::json annotation_json(const InstanceRecord& rec, int ann_id, int image_id, CategoriesMode mode);

/// Streams a COCO document to disk: annotations are written as they arrive,
/// image entries are buffered and emitted on finish(). Keys appear in sorted
/// order so the output is byte-stable.
class CocoWriter {
 public:
  CocoWriter(const std::string& path, CategoriesMode mode);
  ~CocoWriter();
  CocoWriter(const CocoWriter&) = delete;
  CocoWriter& operator=(const CocoWriter&) = delete;

  /// Adds an image and its instances; returns the image id.
  int add_image(const std::string& file_name, Size size, const std::vector<InstanceRecord>& instances);
  void finish();

 private:
  std::string path_;
  std::ofstream out_;
  CategoriesMode mode_;
  std::vector<std::string> images_;
  int next_ann_ = 1;
  bool first_ann_ = true;
  bool finished_ = false;
};

struct CocoImageSpec {
  std::string file_name;
  Size size;
  std::vector<InstanceRecord> instances;
};

void write_coco(const std::vector<CocoImageSpec>& images, CategoriesMode mode, const std::string& path);

struct CocoAnnotation {
  int id = 0;
  int image_id = 0;
  int category_id = 0;
  RleMask segmentation;
  std::array<int, 4> bbox{};
  std::size_t area = 0;
  int iscrowd = 0;
  nlohmann::json extension;
};

struct CocoImage {
  int id = 0;
  std::string file_name;
  int width = 0;
  int height = 0;
};

struct CocoDataset {
  std::vector<CocoImage> images;
  std::vector<CocoAnnotation> annotations;
  std::map<int, std::string> categories;
};

/// Parses and checks referential integrity; errors are Errc::format.
CocoDataset load_coco(const std::string& path);
CocoDataset parse_coco(const nlohmann::json& doc);

struct DatasetStats {
  std::size_t images = 0;
  std::size_t annotations = 0;
  std::map<std::string, std::size_t> per_category;
  /// Bin k counts areas in [2^k, 2^(k+1)).
  std::map<int, std::size_t> area_log2_histogram;
  std::map<std::size_t, std::size_t> instances_per_image;
  /// Fraction of instances sharing a pixel with another instance of the same image.
  double overlap_rate = 0.0;

  nlohmann::json to_json() const;
};

DatasetStats dataset_stats(const CocoDataset& ds);
DatasetStats dataset_stats(const std::string& path);

}  // namespace fbsynth::coco
