// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fbsynth/coco.hpp"
#include "fbsynth/config.hpp"
#include "fbsynth/error.hpp"
#include "fbsynth/extract.hpp"
#include "fbsynth/image_io.hpp"
#include "fbsynth/pipeline.hpp"
#include "fbsynth/preview.hpp"
#include "fbsynth/selftest.hpp"
#include "fbsynth/structures.hpp"

namespace fs = std::filesystem;
using namespace fbsynth;

namespace {

enum Exit : int { kOk = 0, kFailure = 1, kConfig = 2, kIo = 3, kGeneration = 4 };

int exit_code(Errc c) {
  switch (c) {
    case Errc::config:
      return kConfig;
    case Errc::io:
    case Errc::corrupt_file:
    case Errc::format:
    case Errc::dimension_mismatch:
    case Errc::unknown_label:
    case Errc::alignment:
      return kIo;
    default:
      return kGeneration;
  }
}

struct ConfigArgs {
  std::string path;
  std::vector<std::string> sets;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_annotations;
  std::string manifest;
  std::string crops;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", path, "JSON config file (defaults when omitted)");
    cmd->add_option("--set", sets, "Override a config key: dotted.key=value (repeatable)");
    cmd->add_option("--seed", seed, "Master seed override");
    cmd->add_option("--max-annotations", max_annotations, "max_annotations override");
    cmd->add_option("--manifest", manifest, "inputs.manifest override");
    cmd->add_option("--crops", crops, "inputs.crops override");
  }

  // File, then --set, then dedicated flags; validation happens afterwards.
  GenConfig resolve() const {
    nlohmann::json doc = to_json(GenConfig{});
    if (!path.empty()) {
      std::ifstream in(path);
      if (!in) throw Error(Errc::io, "cannot open config " + path);
      nlohmann::json file;
      try {
        file = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::config, path + ": " + e.what());
      }
      doc = to_json(config_from_json(file));
    }
    for (const auto& s : sets) apply_override(doc, s);
    if (seed) doc["master_seed"] = *seed;
    if (max_annotations) doc["max_annotations"] = *max_annotations;
    if (!manifest.empty()) doc["inputs"]["manifest"] = manifest;
    if (!crops.empty()) doc["inputs"]["crops"] = crops;
    return config_from_json(doc);
  }
};

bool report_issues(const GenConfig& cfg) {
  const auto issues = validate_config(cfg);
  for (const auto& i : issues) std::cerr << "config: " << i.path << ": " << i.message << '\n';
  return issues.empty();
}

int run_generate(const ConfigArgs& args, const std::string& out, std::size_t n, int workers, const std::string& split) {
  const GenConfig cfg = args.resolve();
  if (!report_issues(cfg)) return kConfig;
  if (cfg.inputs.manifest.empty()) {
    std::cerr << "error: no manifest (set inputs.manifest or --manifest)\n";
    return kConfig;
  }
  const auto manifest = pipeline::load_manifest(cfg.inputs.manifest);
  pipeline::DatasetOptions opts;
  opts.out_dir = out;
  opts.n_images = n;
  opts.workers = workers;
  opts.split = split == "validation" ? pipeline::Split::validation : pipeline::Split::train;
  const auto summary = pipeline::generate_dataset(manifest, cfg, opts);
  std::cout << "wrote " << summary.written << "/" << summary.requested << " images, " << summary.instances
            << " instances in " << summary.seconds << " s\n";
  for (const auto& e : summary.io_errors) std::cerr << "io: " << e << '\n';
  for (const auto& f : summary.failures) std::cerr << "generation: " << f << '\n';
  if (!summary.io_errors.empty()) return kIo;
  if (summary.generation_failures > 0) return kGeneration;
  return kOk;
}

int run_stats(const std::string& target, bool as_json) {
  const fs::path p = fs::is_directory(target) ? fs::path(target) / "annotations.json" : fs::path(target);
  const auto stats = coco::dataset_stats(p.string());
  if (as_json) {
    std::cout << stats.to_json().dump(2) << '\n';
    return kOk;
  }
  std::cout << "images: " << stats.images << "\nannotations: " << stats.annotations
            << "\noverlap rate: " << stats.overlap_rate << "\nper category:\n";
  for (const auto& [name, n] : stats.per_category) std::cout << "  " << name << ": " << n << '\n';
  std::cout << "instances per image:\n";
  for (const auto& [k, n] : stats.instances_per_image) std::cout << "  " << k << ": " << n << '\n';
  std::cout << "instance area (log2 bins):\n";
  for (const auto& [bin, n] : stats.area_log2_histogram)
    std::cout << "  [" << (1ull << bin) << ", " << (2ull << bin) << "): " << n << '\n';
  return kOk;
}

int run_extract(const std::string& annotated, const std::string& clean, const std::string& out,
                const extract::ExtractParams& params) {
  const auto color = extract::ColorImage::from_rgb8(io::read_rgb(annotated));
  const auto gray = io::read_gray(clean);
  const auto records = extract::extract_masks(color, gray, params);
  extract::export_extracted(records, gray.size(), fs::path(clean).filename().string(), out);
  std::cout << "extracted " << records.size() << " instances -> " << out << '\n';
  return kOk;
}

// Renders one structure family onto a mid-gray canvas with a disk-shaped
// stand-in anatomy region (label 1) for visual inspection.
int run_dump_primitive(const std::string& family_name, std::uint64_t seed, int size, const std::string& out) {
  const auto family = category_from_string(family_name);
  if (!family || *family == Category::cutpaste) {
    std::cerr << "error: unknown structure family '" << family_name << "'\n";
    return kConfig;
  }
  std::vector<std::uint16_t> labels(static_cast<std::size_t>(size) * size, 0);
  const double c = (size - 1) / 2.0, r = 0.3 * size;
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x)
      if (std::hypot(x - c, y - c) <= r) labels[static_cast<std::size_t>(y) * size + x] = 1;
  const structures::ImageAnatomy anatomy(anatomy::LabelMap::create(size, size, std::move(labels), {{1, "region"}}));
  const auto region = anatomy.map().region(1);

  GenConfig cfg;
  Rng rng = SeedStream(seed).engine();
  std::vector<structures::Structure> made;
  switch (*family) {
    case Category::text: made.push_back(structures::gen_text(cfg, anatomy.canvas(), rng)); break;
    case Category::circular: made.push_back(structures::gen_circular(cfg, region, rng)); break;
    case Category::ring: made.push_back(structures::gen_ring(cfg, region, rng)); break;
    case Category::rectangular: made.push_back(structures::gen_rect(cfg, anatomy.canvas(), rng)); break;
    case Category::clip: made = structures::gen_clips(cfg, region, rng); break;
    case Category::grid: made.push_back(structures::gen_grid(cfg, region, rng)); break;
    case Category::line: made.push_back(structures::gen_line(cfg, anatomy, rng)); break;
    case Category::parallel_lines: made.push_back(structures::gen_parallel_lines(cfg, anatomy, rng)); break;
    case Category::cutpaste: break;
  }
  GrayImage canvas(size, size, 0.5f);
  for (const auto& s : made) {
    for (int y = 0; y < s.patch.height; ++y)
      for (int x = 0; x < s.patch.width; ++x) {
        const int cx = s.patch.origin.x + x, cy = s.patch.origin.y + y;
        if (!canvas.size().contains(cx, cy) || !s.patch.in_footprint(x, y)) continue;
        const float a = s.patch.alpha[s.patch.index(x, y)];
        canvas.at(cx, cy) = a * s.patch.intensity[s.patch.index(x, y)] + (1.0f - a) * canvas.at(cx, cy);
      }
    std::cout << s.spec.params.dump() << '\n';
  }
  io::write_gray8(out, canvas);
  return kOk;
}

int run_selftest_cmd(const selftest::SelftestOptions& opts) {
  bool ok = true;
  for (const auto& r : selftest::run_selftest(opts)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    ok = ok && r.passed;
  }
  return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic foreign-body dataset generator for chest radiographs"};
  app.require_subcommand(1);

  ConfigArgs gen_cfg;
  std::string out, split = "train";
  std::size_t n = 1;
  int workers = 1;
  auto* gen = app.add_subcommand("generate", "Generate a dataset");
  gen_cfg.attach(gen);
  gen->add_option("--out", out, "Output directory")->required();
  gen->add_option("--n", n, "Number of images")->check(CLI::PositiveNumber);
  gen->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  gen->add_option("--split", split, "Seed stream: train or validation")->check(CLI::IsMember({"train", "validation"}));

  ConfigArgs val_cfg;
  bool print_config = false;
  auto* val = app.add_subcommand("validate-config", "Check a config and print the resolved document");
  val_cfg.attach(val);
  val->add_flag("--print", print_config, "Print the resolved config");

  std::string stats_target;
  bool stats_json = false;
  auto* stats = app.add_subcommand("stats", "Dataset statistics");
  stats->add_option("dataset", stats_target, "Dataset directory or annotations.json")->required();
  stats->add_flag("--json", stats_json, "Print JSON");

  std::string annotated, clean, extract_out;
  extract::ExtractParams ex;
  auto* ext = app.add_subcommand("extract", "Recover instance masks from a color-annotated/clean image pair");
  ext->add_option("--annotated", annotated, "Color-annotated PNG")->required();
  ext->add_option("--clean", clean, "Clean grayscale PNG")->required();
  ext->add_option("--out", extract_out, "Output COCO JSON")->required();
  ext->add_option("--chroma", ex.chroma_threshold, "Chroma threshold in [0,1]");
  ext->add_option("--min-area", ex.min_area, "Minimum component area in pixels");
  ext->add_option("--hue-bins", ex.hue_bins, "Number of hue groups");

  std::string preview_dataset, preview_out;
  std::size_t k = 4;
  auto* prev = app.add_subcommand("preview", "Render mask overlays for the first k images");
  prev->add_option("--dataset", preview_dataset, "Dataset directory")->required();
  prev->add_option("--out", preview_out, "Output directory")->required();
  prev->add_option("--k", k, "Number of images");

  selftest::SelftestOptions st;
  auto* self = app.add_subcommand("selftest", "Run the embedded oracle checks");
  self->add_option("--solver-tolerance", st.solver.tolerance, "Solver tolerance used by the Poisson oracle");
  self->add_option("--seed", st.seed, "Seed for the random cases");
  self->add_option("--cases", st.cases, "Cases per suite")->check(CLI::PositiveNumber);

  std::string dump_family, dump_out;
  std::uint64_t dump_seed = 1;
  int dump_size = 512;
  auto* dump = app.add_subcommand("dump-primitive", "Render one structure family to a PNG for inspection");
  dump->add_option("--family", dump_family, "Structure family (text, circular, ring, ...)")->required();
  dump->add_option("--out", dump_out, "Output PNG")->required();
  dump->add_option("--seed", dump_seed, "Seed");
  dump->add_option("--size", dump_size, "Canvas size in pixels")->check(CLI::Range(16, 8192));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return run_generate(gen_cfg, out, n, workers, split);
    if (*val) {
      const GenConfig cfg = val_cfg.resolve();
      if (print_config) std::cout << to_json(cfg).dump(2) << '\n';
      if (!report_issues(cfg)) return kConfig;
      std::cout << "config ok\n";
      return kOk;
    }
    if (*stats) return run_stats(stats_target, stats_json);
    if (*ext) return run_extract(annotated, clean, extract_out, ex);
    if (*prev) {
      for (const auto& p : preview::run_preview(preview_dataset, k, preview_out)) std::cout << p << '\n';
      return kOk;
    }
    if (*self) return run_selftest_cmd(st);
    if (*dump) return run_dump_primitive(dump_family, dump_seed, dump_size, dump_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}
