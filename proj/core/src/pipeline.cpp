// SPDX-License-Identifier: Apache-2.0
#include "fbsynth/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <list>
#include <mutex>
#include <thread>

#include "fbsynth/blend.hpp"
#include "fbsynth/coco.hpp"
#include "fbsynth/image_io.hpp"
#include "log.hpp"

namespace fs = std::filesystem;

namespace fbsynth::pipeline {
namespace {

constexpr std::size_t kSourceCacheSize = 16;

// Restricts a patch to the canvas; returns false when nothing visible remains.
bool clip_to_canvas(AlphaPatch& patch, Size canvas) {
  const BBox inside = patch.bounds().intersect({0, 0, canvas.width, canvas.height});
  if (inside.empty()) return false;
  if (inside != patch.bounds()) {
    for (int y = 0; y < patch.height; ++y)
      for (int x = 0; x < patch.width; ++x)
        if (!canvas.contains(patch.origin.x + x, patch.origin.y + y)) patch.alpha[patch.index(x, y)] = 0.0f;
  }
  if (patch.footprint_count() == 0) return false;
  patch.trim();
  return true;
}

bool recoverable(Errc c) {
  switch (c) {
    case Errc::empty_footprint:
    case Errc::degenerate_ring:
    case Errc::region_too_small:
    case Errc::no_exterior_start:
    case Errc::no_anatomy:
    case Errc::placement_failed:
    case Errc::solver_diverged:
      return true;
    default:
      return false;
  }
}

class Annotator {
 public:
  Annotator(const PreparedSource& src, const cutpaste::CropLibrary* crops, const GenConfig& cfg, GrayImage& canvas,
            std::vector<anatomy::RegionSample> regions)
      : src_(src), crops_(crops), cfg_(cfg), canvas_(canvas), regions_(std::move(regions)) {
    type_weights_ = cfg.annotation_type_weights;
    if (!crops_ || crops_->empty()) type_weights_[1] = 0.0;
  }

  // Attempts one annotation; may add several instances (clips). Returns the count added.
  int place(Rng& rng, int budget, std::vector<InstanceRecord>& out) {
    if (type_weights_[0] + type_weights_[1] <= 0.0) throw Error(Errc::config, "no annotation type available");
    const std::size_t type = rng.weighted(type_weights_);
    if (type == 1) return paste(rng, out);
    return plot(rng, budget, out);
  }

 private:
  const anatomy::RegionSample& pick_region(Category family, Rng& rng) const {
    std::vector<const anatomy::RegionSample*> eligible;
    for (const auto& r : regions_)
      if (family == Category::cutpaste || cfg_.eligible(family, r.label_id())) eligible.push_back(&r);
    if (eligible.empty()) throw Error(Errc::no_anatomy, "no eligible anatomy for " + std::string(to_string(family)));
    return *eligible[rng.below(eligible.size())];
  }

  int plot(Rng& rng, int budget, std::vector<InstanceRecord>& out) {
    const auto family = static_cast<Category>(rng.weighted(cfg_.structure_weights));
    const Size canvas = canvas_.size();
    std::vector<structures::Structure> made;
    switch (family) {
      case Category::text: made.push_back(structures::gen_text(cfg_, canvas, rng)); break;
      case Category::circular: made.push_back(structures::gen_circular(cfg_, pick_region(family, rng), rng)); break;
      case Category::ring: made.push_back(structures::gen_ring(cfg_, pick_region(family, rng), rng)); break;
      case Category::rectangular: made.push_back(structures::gen_rect(cfg_, canvas, rng)); break;
      case Category::clip:
        made = structures::gen_clips(cfg_, pick_region(family, rng), rng,
                                     std::min(budget, cfg_.structures.clip_max_count));
        break;
      case Category::grid: made.push_back(structures::gen_grid(cfg_, pick_region(family, rng), rng)); break;
      case Category::line: made.push_back(structures::gen_line(cfg_, src_.anatomy, rng)); break;
      case Category::parallel_lines: made.push_back(structures::gen_parallel_lines(cfg_, src_.anatomy, rng)); break;
      case Category::cutpaste: break;
    }
    int added = 0;
    for (auto& s : made) {
      if (!clip_to_canvas(s.patch, canvas)) continue;
      blend::composite_direct_into(canvas_, blend::Insertion::from_patch(s.patch));
      InstanceRecord rec;
      rec.mask = InstanceMask::from_patch(s.patch, canvas);
      rec.category = s.spec.family;
      rec.anchor_anatomy = s.spec.anchor_region;
      rec.anchor_point = s.spec.anchor_point;
      rec.params = std::move(s.spec.params);
      rec.params["blend_applied"] = to_string(BlendMode::direct);
      rec.z_order = static_cast<int>(out.size());
      out.push_back(std::move(rec));
      ++added;
    }
    if (added == 0) throw Error(Errc::empty_footprint, "structure left no visible pixels");
    return added;
  }

  int paste(Rng& rng, std::vector<InstanceRecord>& out) {
    const cutpaste::Crop& base = (*crops_)[rng.below(crops_->size())];
    const cutpaste::Crop crop = cutpaste::augment_crop(base, rng, cfg_.augment);
    const auto& region = pick_region(Category::cutpaste, rng);
    const auto mode = static_cast<BlendMode>(rng.weighted(cfg_.blend_mode_weights));
    auto res = cutpaste::paste_crop(canvas_, crop, region, mode, rng, blend::SolverOptions::from(cfg_.solver));
    res.record.z_order = static_cast<int>(out.size());
    out.push_back(std::move(res.record));
    return 1;
  }

  const PreparedSource& src_;
  const cutpaste::CropLibrary* crops_;
  const GenConfig& cfg_;
  GrayImage& canvas_;
  std::vector<anatomy::RegionSample> regions_;
  std::array<double, 2> type_weights_;
};

std::vector<anatomy::RegionSample> sample_subset(const anatomy::LabelMap& map, Rng& rng) {
  const auto& ids = map.region_ids();
  if (ids.empty()) return {};
  const auto k = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(ids.size())));
  return anatomy::sample_regions(map, rng, k);
}

// Bounded LRU of prepared sources shared by the workers.
class SourceCache {
 public:
  SourceCache(const Manifest& m, const GenConfig& cfg) : manifest_(m), cfg_(cfg) {}

  std::shared_ptr<const PreparedSource> get(std::size_t index) {
    {
      std::lock_guard lock(mu_);
      for (auto it = entries_.begin(); it != entries_.end(); ++it)
        if (it->first == index) {
          entries_.splice(entries_.begin(), entries_, it);
          return it->second;
        }
    }
    auto src = load_source(manifest_, index, cfg_);
    std::lock_guard lock(mu_);
    entries_.emplace_front(index, src);
    if (entries_.size() > kSourceCacheSize) entries_.pop_back();
    return src;
  }

 private:
  const Manifest& manifest_;
  const GenConfig& cfg_;
  std::mutex mu_;
  std::list<std::pair<std::size_t, std::shared_ptr<const PreparedSource>>> entries_;
};

struct Finished {
  bool ok = false;
  std::string message;
  bool io_error = false;
  Size size;
  std::vector<InstanceRecord> instances;
};

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace

std::string Manifest::image_path(std::size_t i) const { return (fs::path(root) / "images" / (ids.at(i) + ".png")).string(); }

std::string Manifest::anatomy_path(std::size_t i) const {
  return (fs::path(root) / "anatomy" / (ids.at(i) + ".png")).string();
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open manifest " + path);
  Manifest m;
  m.root = fs::absolute(path).parent_path().string();
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    m.ids.push_back(line.substr(b, e - b + 1));
  }
  if (m.ids.empty()) throw Error(Errc::config, "manifest " + path + " lists no sources");
  return m;
}

GrayImage resize_bilinear(const GrayImage& img, Size size) {
  if (img.size() == size) return img;
  GrayImage out(size.width, size.height);
  const double sx = static_cast<double>(img.width()) / size.width;
  const double sy = static_cast<double>(img.height()) / size.height;
  for (int y = 0; y < size.height; ++y) {
    const double fy = std::clamp((y + 0.5) * sy - 0.5, 0.0, img.height() - 1.0);
    const int y0 = static_cast<int>(fy), y1 = std::min(y0 + 1, img.height() - 1);
    const double wy = fy - y0;
    for (int x = 0; x < size.width; ++x) {
      const double fx = std::clamp((x + 0.5) * sx - 0.5, 0.0, img.width() - 1.0);
      const int x0 = static_cast<int>(fx), x1 = std::min(x0 + 1, img.width() - 1);
      const double wx = fx - x0;
      const double top = (1 - wx) * img.at(x0, y0) + wx * img.at(x1, y0);
      const double bot = (1 - wx) * img.at(x0, y1) + wx * img.at(x1, y1);
      out.at(x, y) = static_cast<float>((1 - wy) * top + wy * bot);
    }
  }
  return out;
}

anatomy::LabelMap resize_nearest(const anatomy::LabelMap& map, Size size) {
  if (map.size() == size) return map;
  std::vector<std::uint16_t> labels(size.area());
  for (int y = 0; y < size.height; ++y) {
    const int sy = std::min(map.height() - 1, static_cast<int>((y + 0.5) * map.height() / size.height));
    for (int x = 0; x < size.width; ++x) {
      const int sx = std::min(map.width() - 1, static_cast<int>((x + 0.5) * map.width() / size.width));
      labels[static_cast<std::size_t>(y) * size.width + x] = map.at(sx, sy);
    }
  }
  return anatomy::LabelMap::create(size.width, size.height, std::move(labels), map.catalog());
}

std::shared_ptr<const PreparedSource> load_source(const Manifest& manifest, std::size_t index, const GenConfig& cfg) {
  GrayImage image = io::read_gray(manifest.image_path(index));
  anatomy::LabelMap map = anatomy::load_label_map(manifest.anatomy_path(index), image.size());
  if (cfg.image.mode == ImagePolicy::Mode::fixed) {
    const Size target{cfg.image.width, cfg.image.height};
    image = resize_bilinear(image, target);
    map = resize_nearest(map, target);
  }
  return std::make_shared<PreparedSource>(
      PreparedSource{manifest.ids[index], std::move(image), structures::ImageAnatomy(std::move(map))});
}

GeneratedSample generate_sample(const PreparedSource& src, const cutpaste::CropLibrary* crops, const GenConfig& cfg,
                                const SeedStream& stream) {
  std::string last_error = "no instance could be placed";
  for (int attempt = 0; attempt < 2; ++attempt) {
    const SeedStream attempt_stream = stream.child(static_cast<std::uint64_t>(attempt));
    Rng rng = attempt_stream.engine();
    GeneratedSample sample{src.image, {}, src.id, attempt_stream.path(), attempt + 1};
    const int n = sample_num_annotations(cfg, rng);
    Annotator annotator(src, crops, cfg, sample.image, sample_subset(src.anatomy.map(), rng));

    for (int j = 0; j < n && static_cast<int>(sample.instances.size()) < cfg.max_annotations; ++j) {
      const SeedStream ann_stream = attempt_stream.child(static_cast<std::uint64_t>(j) + 1);
      const int budget = cfg.max_annotations - static_cast<int>(sample.instances.size());
      for (int t = 0; t < kPlacementRetries; ++t) {
        Rng arng = ann_stream.child(static_cast<std::uint64_t>(t)).engine();
        try {
          annotator.place(arng, std::min(budget, n - j), sample.instances);
          break;
        } catch (const Error& e) {
          if (!recoverable(e.code())) throw;
          last_error = e.what();
          detail::logger().debug("{}: annotation {} try {} failed: {}", src.id, j, t, e.what());
        }
      }
    }
    if (!sample.instances.empty()) return sample;
  }
  throw Error(Errc::generation_failed, "generation failed for image " + src.id + ": " + last_error);
}

SeedStream split_root(const GenConfig& cfg, Split split) {
  return SeedStream(cfg.master_seed).child(static_cast<std::uint64_t>(split));
}

std::size_t source_index(const SeedStream& image_stream, std::size_t manifest_size) {
  return static_cast<std::size_t>(image_stream.child(0).engine().below(manifest_size));
}

std::string image_file_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "images/%06zu.png", index);
  return buf;
}

nlohmann::json DatasetSummary::to_json() const {
  return {{"requested", requested},
          {"written", written},
          {"generation_failures", generation_failures},
          {"instances", instances},
          {"per_category", per_category},
          {"blend_applied", blend_applied},
          {"failures", failures},
          {"io_errors", io_errors},
          {"seconds", seconds}};
}

DatasetSummary generate_dataset(const Manifest& manifest, const GenConfig& cfg, const DatasetOptions& opts) {
  if (opts.n_images == 0) throw Error(Errc::config, "n_images must be at least 1");
  if (const auto issues = validate_config(cfg); !issues.empty())
    throw Error(Errc::config, "invalid config: " + issues.front().path + ": " + issues.front().message);
  const auto start = std::chrono::steady_clock::now();

  std::optional<cutpaste::CropLibrary> crops;
  if (cfg.annotation_type_weights[1] > 0.0) {
    if (cfg.inputs.crops.empty()) throw Error(Errc::config, "inputs.crops is required when cut-paste is enabled");
    auto loaded = cutpaste::load_crop_library(cfg.inputs.crops);
    for (const auto& w : loaded.warnings) detail::logger().warn("crop library: {}", w);
    crops = std::move(loaded.library);
  }

  const fs::path out(opts.out_dir);
  fs::create_directories(out / "images");
  write_json((out / "config.lock.json").string(), to_json(cfg));

  const SeedStream root = split_root(cfg, opts.split);
  SourceCache cache(manifest, cfg);
  const int workers = std::max(1, opts.workers);
  const std::size_t window = static_cast<std::size_t>(workers) * 4;

  std::mutex mu;
  std::condition_variable cv;
  std::map<std::size_t, Finished> ready;
  std::size_t next_write = 0;
  std::atomic<std::size_t> next_task{0};
  std::atomic<bool> abort{false};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next_task.fetch_add(1);
      if (i >= opts.n_images || abort) return;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return i < next_write + window || abort; });
      }
      Finished f;
      try {
        const SeedStream s = root.child(i);
        const auto src = cache.get(source_index(s, manifest.ids.size()));
        GeneratedSample sample = generate_sample(*src, crops ? &*crops : nullptr, cfg, s.child(1));
        io::write_gray8((out / image_file_name(i)).string(), sample.image);
        f.ok = true;
        f.size = sample.image.size();
        f.instances = std::move(sample.instances);
      } catch (const Error& e) {
        f.message = "image " + std::to_string(i) + ": " + e.what();
        f.io_error = e.code() != Errc::generation_failed;
      } catch (const std::exception& e) {
        f.message = "image " + std::to_string(i) + ": " + e.what();
        f.io_error = true;
      }
      std::lock_guard lock(mu);
      ready.emplace(i, std::move(f));
      cv.notify_all();
    }
  };

  DatasetSummary summary;
  summary.requested = opts.n_images;
  coco::CocoWriter writer((out / "annotations.json").string(), cfg.categories);

  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);

  try {
    while (next_write < opts.n_images) {
      Finished f;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return ready.contains(next_write); });
        f = std::move(ready.at(next_write));
        ready.erase(next_write);
      }
      if (f.ok) {
        writer.add_image(image_file_name(next_write), f.size, f.instances);
        ++summary.written;
        summary.instances += f.instances.size();
        for (const auto& rec : f.instances) {
          ++summary.per_category[std::string(to_string(rec.category))];
          if (rec.params.contains("blend_applied"))
            ++summary.blend_applied[rec.params["blend_applied"].get<std::string>()];
        }
      } else if (f.io_error) {
        summary.io_errors.push_back(f.message);
      } else {
        ++summary.generation_failures;
        summary.failures.push_back(f.message);
      }
      {
        std::lock_guard lock(mu);
        ++next_write;
      }
      cv.notify_all();
      if (opts.progress) opts.progress(next_write);
    }
  } catch (...) {
    abort = true;
    cv.notify_all();
    for (auto& t : pool) t.join();
    throw;
  }
  for (auto& t : pool) t.join();
  writer.finish();

  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_json((out / "summary.json").string(), summary.to_json());
  return summary;
}

DatasetSummary split_validation(const Manifest& manifest, const GenConfig& cfg, std::size_t n_val,
                                const std::string& out_dir, int workers) {
  DatasetOptions opts;
  opts.out_dir = out_dir;
  opts.n_images = n_val;
  opts.workers = workers;
  opts.split = Split::validation;
  return generate_dataset(manifest, cfg, opts);
}

}  // namespace fbsynth::pipeline
