// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fbsynth/anatomy.hpp"
#include "fbsynth/config.hpp"
#include "fbsynth/cutpaste.hpp"
#include "fbsynth/image.hpp"
#include "fbsynth/instance.hpp"
#include "fbsynth/random.hpp"
#include "fbsynth/structures.hpp"

namespace fbsynth::pipeline {

inline constexpr int kPlacementRetries = 8;

/// Source ids listed one per line; images live in `<root>/images/<id>.png`
/// and label maps in `<root>/anatomy/<id>.png` (+ sidecar catalog).
struct Manifest {
  std::string root;
  std::vector<std::string> ids;

  std::string image_path(std::size_t i) const;
  std::string anatomy_path(std::size_t i) const;
};

/// Blank lines and lines starting with '#' are skipped. `root` is the
/// manifest's directory. Missing file -> Errc::io, no ids -> Errc::config.
Manifest load_manifest(const std::string& path);

/// A source image with its anatomy, resampled to the configured image policy.
struct PreparedSource {
  std::string id;
  GrayImage image;
  structures::ImageAnatomy anatomy;
};

std::shared_ptr<const PreparedSource> load_source(const Manifest& manifest, std::size_t index, const GenConfig& cfg);

/// Bilinear intensity resampling (pixel centers aligned) and nearest-neighbor label resampling.
GrayImage resize_bilinear(const GrayImage& img, Size size);
anatomy::LabelMap resize_nearest(const anatomy::LabelMap& map, Size size);

struct GeneratedSample {
  GrayImage image;
  std::vector<InstanceRecord> instances;  // z_order == position
  std::string source_id;
  std::vector<std::uint64_t> seed_path;
  int attempts = 1;
};

/// Runs the insertion loop on one image. `crops` may be null when the
/// cut-paste weight is zero. Throws Errc::generation_failed when no instance
/// lands after one whole-image retry.
GeneratedSample generate_sample(const PreparedSource& src, const cutpaste::CropLibrary* crops, const GenConfig& cfg,
                                const SeedStream& stream);

enum class Split : std::uint8_t { train = 0, validation = 1 };

/// Root stream of a split; image i uses root.child(i).
SeedStream split_root(const GenConfig& cfg, Split split);
/// Which manifest entry image `index` draws (with replacement).
std::size_t source_index(const SeedStream& image_stream, std::size_t manifest_size);

struct DatasetOptions {
  std::string out_dir;
  std::size_t n_images = 1;
  int workers = 1;
  Split split = Split::train;
  /// Optional progress callback (images finished so far); called from the writer thread.
  std::function<void(std::size_t)> progress;
};

struct DatasetSummary {
  std::size_t requested = 0;
  std::size_t written = 0;
  std::size_t generation_failures = 0;
  std::size_t instances = 0;
  std::map<std::string, std::size_t> per_category;
  std::map<std::string, std::size_t> blend_applied;
  std::vector<std::string> failures;  // per-image messages
  std::vector<std::string> io_errors;
  double seconds = 0.0;

  nlohmann::json to_json() const;
};

/// Generates into out_dir: images/<index>.png, annotations.json, summary.json,
/// config.lock.json. Output bytes do not depend on `workers`.
DatasetSummary generate_dataset(const Manifest& manifest, const GenConfig& cfg, const DatasetOptions& opts);

/// Validation set: same as generate_dataset on the validation stream root.
DatasetSummary split_validation(const Manifest& manifest, const GenConfig& cfg, std::size_t n_val,
                                const std::string& out_dir, int workers = 1);

/// `images/000042.png` style file name for an image index.
std::string image_file_name(std::size_t index);

}  // namespace fbsynth::pipeline
