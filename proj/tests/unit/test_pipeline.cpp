// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "fbsynth/coco.hpp"
#include "fbsynth/error.hpp"
#include "fbsynth/image_io.hpp"
#include "fbsynth/pipeline.hpp"
#include "phantom.hpp"
#include "test_support.hpp"

using namespace fbsynth;
using namespace fbsynth::pipeline;
using fbsynth::testing::TempDir;
namespace fs = std::filesystem;

namespace {

struct Corpus {
  TempDir dir{"corpus"};
  phantom::CorpusPaths paths;
  Manifest manifest;
  cutpaste::CropLibrary crops;

  Corpus() {
    paths = phantom::write_corpus(dir.str(), 4, Size{256, 256}, 6, 3);
    manifest = load_manifest(paths.manifest);
    crops = cutpaste::load_crop_library(paths.crops).library;
  }
};

Corpus& corpus() {
  static Corpus c;
  return c;
}

GenConfig base_config() {
  GenConfig cfg;
  cfg.master_seed = 99;
  cfg.reference_width = 256;
  cfg.inputs.manifest = corpus().paths.manifest;
  cfg.inputs.crops = corpus().paths.crops;
  return cfg;
}

BinaryMask union_of(const std::vector<InstanceRecord>& recs, Size s) {
  BinaryMask u(s.width, s.height);
  for (const auto& r : recs)
    for (int y = r.bbox().y; y < r.bbox().bottom(); ++y)
      for (int x = r.bbox().x; x < r.bbox().right(); ++x)
        if (r.mask.contains(x, y)) u.set(x, y);
  return u;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(FBSYNTH_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::uint64_t dataset_checksum(const std::string& dir) {
  return fbsynth::testing::tree_checksum(dir, [](const std::string& rel) { return rel != "summary.json"; });
}

}  // namespace

TEST_CASE("manifest parsing") {
  TempDir dir("manifest");
  std::ofstream(dir.str("m.txt")) << "# sources\n\na\n  b  \n#c\n";
  const Manifest m = load_manifest(dir.str("m.txt"));
  CHECK(m.ids == std::vector<std::string>{"a", "b"});
  CHECK(m.image_path(1) == (dir.path() / "images" / "b.png").string());
  CHECK(m.anatomy_path(0) == (dir.path() / "anatomy" / "a.png").string());

  std::ofstream(dir.str("empty.txt")) << "# nothing\n";
  try {
    load_manifest(dir.str("empty.txt"));
    FAIL("expected config error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::config);
  }
  try {
    load_manifest(dir.str("missing.txt"));
    FAIL("expected io error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::io);
  }
}

TEST_CASE("resampling") {
  const GrayImage flat(10, 7, 0.4f);
  const GrayImage up = resize_bilinear(flat, Size{23, 31});
  for (float v : up.data()) CHECK(v == doctest::Approx(0.4f));

  GrayImage ramp(16, 4);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 16; ++x) ramp.at(x, y) = float(x) / 15.0f;
  const GrayImage half = resize_bilinear(ramp, Size{8, 4});
  for (int x = 0; x < 8; ++x) CHECK(half.at(x, 0) == doctest::Approx((2 * x + 0.5) / 15.0).epsilon(1e-5));
  CHECK(resize_bilinear(ramp, ramp.size()) == ramp);

  const auto map = fbsynth::testing::map_from(8, 8, [](int x, int y) { return std::uint16_t(x < 4 ? 1 : (y < 4 ? 2 : 0)); });
  const auto big = resize_nearest(map, Size{32, 16});
  for (int y = 0; y < 16; ++y)
    for (int x = 0; x < 32; ++x) CHECK(big.at(x, y) == map.at(x / 4, y / 2));
  CHECK(big.catalog() == map.catalog());
}

TEST_CASE("fixed image policy resamples source and anatomy together") {
  GenConfig cfg = base_config();
  cfg.image.mode = ImagePolicy::Mode::fixed;
  cfg.image.width = 128;
  cfg.image.height = 96;
  const auto src = load_source(corpus().manifest, 0, cfg);
  CHECK(src->image.size() == Size{128, 96});
  CHECK(src->anatomy.canvas() == Size{128, 96});
}

TEST_CASE("stream roots and source selection") {
  const GenConfig cfg = base_config();
  CHECK(!(split_root(cfg, Split::train) == split_root(cfg, Split::validation)));
  const SeedStream root = split_root(cfg, Split::train);
  std::vector<int> hist(5, 0);
  for (std::size_t i = 0; i < 5000; ++i) ++hist[source_index(root.child(i), 5)];
  for (int h : hist) CHECK(std::abs(h - 1000) < 150);
  CHECK(image_file_name(42) == "images/000042.png");
}

TEST_CASE("generate_sample invariants") {
  const GenConfig cfg = base_config();
  const SeedStream root = split_root(cfg, Split::train);
  std::set<std::string> categories;
  for (std::size_t i = 0; i < 40; ++i) {
    const SeedStream s = root.child(i);
    const auto src = load_source(corpus().manifest, source_index(s, corpus().manifest.ids.size()), cfg);
    const GeneratedSample g = generate_sample(*src, &corpus().crops, cfg, s.child(1));
    CHECK(!g.instances.empty());
    CHECK(g.instances.size() <= std::size_t(cfg.max_annotations));
    CHECK(g.image.size() == src->image.size());
    for (float v : g.image.data()) CHECK((v >= 0.0f && v <= 1.0f));
    for (std::size_t k = 0; k < g.instances.size(); ++k) {
      const auto& r = g.instances[k];
      CHECK(r.z_order == int(k));
      CHECK(r.mask.area() > 0);
      CHECK(r.mask.canvas() == g.image.size());
      CHECK(r.params.contains("blend_applied"));
      categories.insert(std::string(to_string(r.category)));
      if (is_region_family(r.category) || r.category == Category::cutpaste) CHECK(r.anchor_anatomy.has_value());
    }
    // Pixels outside every instance mask are untouched.
    const BinaryMask u = union_of(g.instances, g.image.size());
    for (int y = 0; y < g.image.height(); ++y)
      for (int x = 0; x < g.image.width(); ++x)
        if (!u.at(x, y)) CHECK(g.image.at(x, y) == src->image.at(x, y));

    const GeneratedSample again = generate_sample(*src, &corpus().crops, cfg, s.child(1));
    CHECK(again.image == g.image);
    CHECK(again.instances.size() == g.instances.size());
  }
  CHECK(categories.size() >= 6);
}

TEST_CASE("cut-paste is skipped without a library") {
  GenConfig cfg = base_config();
  cfg.annotation_type_weights = {0.0, 1.0};
  const SeedStream root = split_root(cfg, Split::train);
  const auto src = load_source(corpus().manifest, 0, cfg);
  try {
    generate_sample(*src, nullptr, cfg, root.child(0));
    FAIL("expected a config error when no annotation type remains");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::config);
  }
  cfg.annotation_type_weights = {0.5, 0.5};
  for (std::size_t i = 0; i < 10; ++i)
    for (const auto& r : generate_sample(*src, nullptr, cfg, root.child(i)).instances)
      CHECK(r.category != Category::cutpaste);
}

TEST_CASE("eligibility restricts anchors") {
  GenConfig cfg = base_config();
  cfg.annotation_type_weights = {1.0, 0.0};
  cfg.structure_weights = {0, 1, 1, 0, 0, 0, 0, 0};
  cfg.eligibility[static_cast<std::size_t>(Category::circular)] = {2, 3};
  cfg.eligibility[static_cast<std::size_t>(Category::ring)] = {4};
  const SeedStream root = split_root(cfg, Split::train);
  const auto src = load_source(corpus().manifest, 1, cfg);
  std::size_t seen = 0;
  for (std::size_t i = 0; i < 30; ++i) {
    try {
      for (const auto& r : generate_sample(*src, nullptr, cfg, root.child(i)).instances) {
        ++seen;
        REQUIRE(r.anchor_anatomy);
        if (r.category == Category::circular) CHECK((*r.anchor_anatomy == 2 || *r.anchor_anatomy == 3));
        if (r.category == Category::ring) CHECK(*r.anchor_anatomy == 4);
      }
    } catch (const Error& e) {
      CHECK(e.code() == Errc::generation_failed);
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("generation fails cleanly when nothing can be placed") {
  GenConfig cfg = base_config();
  cfg.annotation_type_weights = {1.0, 0.0};
  cfg.structure_weights = {0, 1, 0, 0, 0, 0, 0, 0};
  cfg.eligibility[static_cast<std::size_t>(Category::circular)] = {999};
  const auto src = load_source(corpus().manifest, 0, cfg);
  try {
    generate_sample(*src, nullptr, cfg, SeedStream(1));
    FAIL("expected generation failure");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::generation_failed);
  }
}

TEST_CASE("dataset output is independent of worker count and prefix-stable") {
  const GenConfig cfg = base_config();
  TempDir out("dataset");
  DatasetOptions opts;
  opts.n_images = 12;
  opts.out_dir = out.str("w1");
  opts.workers = 1;
  std::size_t progress_calls = 0;
  opts.progress = [&](std::size_t) { ++progress_calls; };
  const auto s1 = generate_dataset(corpus().manifest, cfg, opts);
  CHECK(progress_calls == 12);
  CHECK(s1.written + s1.generation_failures == 12);
  CHECK(s1.io_errors.empty());

  opts.out_dir = out.str("w4");
  opts.workers = 4;
  opts.progress = nullptr;
  const auto s4 = generate_dataset(corpus().manifest, cfg, opts);
  CHECK(dataset_checksum(out.str("w1")) == dataset_checksum(out.str("w4")));
  CHECK(s4.instances == s1.instances);
  CHECK(s4.per_category == s1.per_category);

  opts.out_dir = out.str("prefix");
  opts.n_images = 5;
  generate_dataset(corpus().manifest, cfg, opts);
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(fbsynth::testing::file_checksum(out.str("prefix/" + image_file_name(i))) ==
          fbsynth::testing::file_checksum(out.str("w1/" + image_file_name(i))));

  const auto ds = coco::load_coco(out.str("w1/annotations.json"));
  CHECK(ds.images.size() == s1.written);
  CHECK(ds.annotations.size() == s1.instances);
  for (const auto& img : ds.images) CHECK(fs::exists(out.str("w1/" + img.file_name)));
  CHECK(fs::exists(out.str("w1/summary.json")));
  const auto lock = nlohmann::json::parse(std::ifstream(out.str("w1/config.lock.json")));
  CHECK(config_from_json(lock) == cfg);

  split_validation(corpus().manifest, cfg, 5, out.str("val"), 2);
  CHECK(fbsynth::testing::file_checksum(out.str("val/" + image_file_name(0))) !=
        fbsynth::testing::file_checksum(out.str("w1/" + image_file_name(0))));
}

TEST_CASE("dataset generation validates inputs") {
  GenConfig cfg = base_config();
  TempDir out("dataset_bad");
  DatasetOptions opts;
  opts.out_dir = out.str();
  opts.n_images = 0;
  CHECK_THROWS_AS(generate_dataset(corpus().manifest, cfg, opts), Error);
  opts.n_images = 1;
  cfg.max_annotations = 0;
  try {
    generate_dataset(corpus().manifest, cfg, opts);
    FAIL("expected config error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::config);
  }
  cfg = base_config();
  cfg.inputs.crops = out.str("nowhere");
  try {
    generate_dataset(corpus().manifest, cfg, opts);
    FAIL("expected io error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::io);
  }
}

TEST_CASE("cli exit codes") {
  TempDir out("cli");
  const std::string inputs = " --manifest " + corpus().paths.manifest + " --crops " + corpus().paths.crops;
  CHECK(run_cli("selftest --cases 3") == 0);
  CHECK(run_cli("validate-config" + inputs) == 0);
  CHECK(run_cli("validate-config --set max_annotations=0" + inputs) == 2);
  CHECK(run_cli("validate-config --set no_such_key=1") == 2);
  CHECK(run_cli("generate --n 2 --out " + out.str("a") + " --manifest " + out.str("missing.txt") + " --crops " +
                corpus().paths.crops) == 3);
  CHECK(run_cli("generate --n 3 --workers 2 --out " + out.str("b") + inputs) == 0);
  CHECK(run_cli("stats " + out.str("b")) == 0);
  CHECK(run_cli("preview --dataset " + out.str("b") + " --out " + out.str("p") + " --k 2") == 0);
  CHECK(fs::exists(out.str("p")));
  CHECK(run_cli("stats " + out.str("missing")) == 3);
  CHECK(run_cli("bogus") != 0);
  for (const char* family : {"text", "circular", "ring", "rectangular", "clip", "grid", "line", "parallel_lines"}) {
    const std::string png = out.str(std::string(family) + ".png");
    CHECK(run_cli("dump-primitive --size 256 --family " + std::string(family) + " --out " + png) == 0);
    CHECK(io::read_gray(png).size() == Size{256, 256});
  }
  CHECK(run_cli("dump-primitive --family cutpaste --out " + out.str("x.png")) == 2);
}
