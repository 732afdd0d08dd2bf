// SPDX-License-Identifier: Apache-2.0
#include "fbsynth/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>

#include "fbsynth/error.hpp"

namespace fbsynth {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, kCategoryCount> kCategoryNames = {
    "text", "circular", "ring", "rectangular", "clip", "grid", "line", "parallel_lines", "cutpaste"};
constexpr std::array<std::string_view, 2> kTypeNames = {"plot", "cutpaste"};
constexpr std::array<std::string_view, 3> kBlendNames = {"direct", "poisson_normal", "poisson_seamless"};

json range_json(const Range& r) { return json::array({r.lo, r.hi}); }

template <std::size_t N>
json weights_json(const std::array<double, N>& w, const std::array<std::string_view, N>& names) {
  json out = json::object();
  for (std::size_t i = 0; i < N; ++i) out[std::string(names[i])] = w[i];
  return out;
}

// Recursively overlays `src` onto `dst`; every key of `src` must exist in `dst`.
void merge_strict(json& dst, const json& src, const std::string& path) {
  if (!src.is_object()) throw Error(Errc::config, (path.empty() ? "config" : path) + ": expected an object");
  for (auto it = src.begin(); it != src.end(); ++it) {
    const std::string key_path = path.empty() ? it.key() : path + "." + it.key();
    if (!dst.contains(it.key())) throw Error(Errc::config, key_path + ": unknown key");
    json& target = dst[it.key()];
    if (target.is_object())
      merge_strict(target, it.value(), key_path);
    else
      target = it.value();
  }
}

// Weight maps may also be written as a positional array in canonical order.
template <std::size_t N>
void expand_weight_array(json& j, const char* key, const std::array<std::string_view, N>& names) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_array()) return;
  const json arr = j[key];
  if (arr.size() != N)
    throw Error(Errc::config, std::string(key) + ": expected " + std::to_string(N) + " weights, got " +
                                  std::to_string(arr.size()));
  json obj = json::object();
  for (std::size_t i = 0; i < N; ++i) obj[std::string(names[i])] = arr[i];
  j[key] = std::move(obj);
}

class Reader {
 public:
  explicit Reader(const json& root) : root_(root) {}

  const json& node(const std::string& path) const {
    const json* cur = &root_;
    std::size_t start = 0;
    while (true) {
      const auto dot = path.find('.', start);
      cur = &cur->at(path.substr(start, dot - start));
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
    return *cur;
  }

  double number(const std::string& path) const {
    const json& n = node(path);
    if (!n.is_number()) fail(path, "expected a number");
    return n.get<double>();
  }

  std::int64_t integer(const std::string& path) const {
    const json& n = node(path);
    if (!n.is_number_integer()) fail(path, "expected an integer");
    return n.get<std::int64_t>();
  }

  std::string string(const std::string& path) const {
    const json& n = node(path);
    if (!n.is_string()) fail(path, "expected a string");
    return n.get<std::string>();
  }

  Range range(const std::string& path) const {
    const json& n = node(path);
    if (!n.is_array() || n.size() != 2 || !n[0].is_number() || !n[1].is_number())
      fail(path, "expected [lo, hi]");
    return {n[0].get<double>(), n[1].get<double>()};
  }

  template <std::size_t N>
  std::array<double, N> weights(const std::string& path, const std::array<std::string_view, N>& names) const {
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = number(path + "." + std::string(names[i]));
    return out;
  }

  [[noreturn]] static void fail(const std::string& path, const std::string& what) {
    throw Error(Errc::config, path + ": " + what);
  }

 private:
  const json& root_;
};

void check_weights(std::vector<ConfigIssue>& out, const std::string& path, std::span<const double> w) {
  double sum = 0.0;
  for (double v : w) {
    if (!(v >= 0.0)) out.push_back({path, "weights must be non-negative"});
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) out.push_back({path, "weights must sum to 1 (got " + std::to_string(sum) + ")"});
}

void check_range(std::vector<ConfigIssue>& out, const std::string& path, const Range& r, bool unit, bool positive) {
  if (!(r.lo <= r.hi)) out.push_back({path, "lo > hi"});
  if (unit && (r.lo < 0.0 || r.hi > 1.0)) out.push_back({path, "must lie in [0,1]"});
  if (positive && !(r.lo > 0.0)) out.push_back({path, "must be positive"});
}

}  // namespace

std::string_view to_string(Category c) { return kCategoryNames[static_cast<std::size_t>(c)]; }

std::optional<Category> category_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kCategoryNames.size(); ++i)
    if (kCategoryNames[i] == name) return static_cast<Category>(i);
  return std::nullopt;
}

std::string_view to_string(BlendMode m) { return kBlendNames[static_cast<std::size_t>(m)]; }

std::string_view to_string(CategoriesMode m) {
  return m == CategoriesMode::per_family ? "per_family" : "class_agnostic";
}

bool GenConfig::eligible(Category family, std::uint16_t label) const {
  const auto& set = eligibility[static_cast<std::size_t>(family)];
  return set.empty() || std::find(set.begin(), set.end(), label) != set.end();
}

json to_json(const GenConfig& cfg) {
  std::array<std::string_view, kFamilyCount> families{};
  std::copy_n(kCategoryNames.begin(), kFamilyCount, families.begin());

  json eligibility = json::object();
  for (std::size_t i = 0; i < kFamilyCount; ++i) eligibility[std::string(families[i])] = cfg.eligibility[i];

  const auto& s = cfg.structures;
  json structures = {
      {"text_min_length", s.text_min_length},
      {"text_max_length", s.text_max_length},
      {"text_scale", range_json(s.text_scale)},
      {"ellipse_axis_rel", range_json(s.ellipse_axis_rel)},
      {"min_axis_px", s.min_axis_px},
      {"ring_thickness_px", range_json(s.ring_thickness_px)},
      {"rect_size_rel", range_json(s.rect_size_rel)},
      {"clip_length_px", range_json(s.clip_length_px)},
      {"clip_thickness_px", range_json(s.clip_thickness_px)},
      {"clip_max_count", s.clip_max_count},
      {"clip_max_angle_deg", s.clip_max_angle_deg},
      {"grid_spacing_px", range_json(s.grid_spacing_px)},
      {"grid_jitter", s.grid_jitter},
      {"grid_thickness_px", range_json(s.grid_thickness_px)},
      {"grid_shade_jitter", s.grid_shade_jitter},
      {"line_max_segments", s.line_max_segments},
      {"line_thickness_px", range_json(s.line_thickness_px)},
      {"tube_max_segments", s.tube_max_segments},
      {"tube_width_px", range_json(s.tube_width_px)},
      {"tube_wall_px", range_json(s.tube_wall_px)},
      {"tube_fill_intensity", range_json(s.tube_fill_intensity)},
  };

  return json{
      {"master_seed", cfg.master_seed},
      {"max_annotations", cfg.max_annotations},
      {"annotation_type_weights", weights_json(cfg.annotation_type_weights, kTypeNames)},
      {"structure_weights", weights_json(cfg.structure_weights, families)},
      {"blend_mode_weights", weights_json(cfg.blend_mode_weights, kBlendNames)},
      {"eligibility", eligibility},
      {"intensity", {{"dark", range_json(cfg.dark_intensity)}, {"bright", range_json(cfg.bright_intensity)}}},
      {"opacity", range_json(cfg.opacity)},
      {"structures", structures},
      {"augment",
       {{"flip_probability", cfg.augment.flip_probability},
        {"max_rotation_deg", cfg.augment.max_rotation_deg},
        {"scale", range_json(cfg.augment.scale)},
        {"gain", range_json(cfg.augment.gain)}}},
      {"solver",
       {{"tolerance", cfg.solver.tolerance},
        {"max_iterations", cfg.solver.max_iterations},
        {"relaxation", cfg.solver.relaxation}}},
      {"image",
       {{"policy", cfg.image.mode == ImagePolicy::Mode::source ? "source" : "fixed"},
        {"width", cfg.image.width},
        {"height", cfg.image.height}}},
      {"reference_width", cfg.reference_width},
      {"categories", std::string(to_string(cfg.categories))},
      {"inputs", {{"manifest", cfg.inputs.manifest}, {"crops", cfg.inputs.crops}}},
  };
}

GenConfig config_from_json(const json& j) {
  std::array<std::string_view, kFamilyCount> families{};
  std::copy_n(kCategoryNames.begin(), kFamilyCount, families.begin());

  json user = j;
  expand_weight_array(user, "annotation_type_weights", kTypeNames);
  expand_weight_array(user, "structure_weights", families);
  expand_weight_array(user, "blend_mode_weights", kBlendNames);
  json doc = to_json(GenConfig{});
  merge_strict(doc, user, "");
  const Reader r(doc);

  GenConfig cfg;
  try {
    const json& seed = doc.at("master_seed");
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0))
      Reader::fail("master_seed", "expected a non-negative integer");
    cfg.master_seed = seed.get<std::uint64_t>();
    cfg.max_annotations = static_cast<int>(r.integer("max_annotations"));
    cfg.annotation_type_weights = r.weights("annotation_type_weights", kTypeNames);
    cfg.structure_weights = r.weights("structure_weights", families);
    cfg.blend_mode_weights = r.weights("blend_mode_weights", kBlendNames);
    for (std::size_t i = 0; i < kFamilyCount; ++i) {
      const std::string path = "eligibility." + std::string(families[i]);
      const json& ids = r.node(path);
      if (!ids.is_array()) Reader::fail(path, "expected an array of label ids");
      for (const json& id : ids) {
        if (!id.is_number_unsigned() || id.get<std::uint64_t>() > 0xffff)
          Reader::fail(path, "label ids must be integers in [0, 65535]");
        cfg.eligibility[i].push_back(id.get<std::uint16_t>());
      }
    }
    cfg.dark_intensity = r.range("intensity.dark");
    cfg.bright_intensity = r.range("intensity.bright");
    cfg.opacity = r.range("opacity");

    auto& s = cfg.structures;
    s.text_min_length = static_cast<int>(r.integer("structures.text_min_length"));
    s.text_max_length = static_cast<int>(r.integer("structures.text_max_length"));
    s.text_scale = r.range("structures.text_scale");
    s.ellipse_axis_rel = r.range("structures.ellipse_axis_rel");
    s.min_axis_px = r.number("structures.min_axis_px");
    s.ring_thickness_px = r.range("structures.ring_thickness_px");
    s.rect_size_rel = r.range("structures.rect_size_rel");
    s.clip_length_px = r.range("structures.clip_length_px");
    s.clip_thickness_px = r.range("structures.clip_thickness_px");
    s.clip_max_count = static_cast<int>(r.integer("structures.clip_max_count"));
    s.clip_max_angle_deg = r.number("structures.clip_max_angle_deg");
    s.grid_spacing_px = r.range("structures.grid_spacing_px");
    s.grid_jitter = r.number("structures.grid_jitter");
    s.grid_thickness_px = r.range("structures.grid_thickness_px");
    s.grid_shade_jitter = r.number("structures.grid_shade_jitter");
    s.line_max_segments = static_cast<int>(r.integer("structures.line_max_segments"));
    s.line_thickness_px = r.range("structures.line_thickness_px");
    s.tube_max_segments = static_cast<int>(r.integer("structures.tube_max_segments"));
    s.tube_width_px = r.range("structures.tube_width_px");
    s.tube_wall_px = r.range("structures.tube_wall_px");
    s.tube_fill_intensity = r.range("structures.tube_fill_intensity");

    cfg.augment.flip_probability = r.number("augment.flip_probability");
    cfg.augment.max_rotation_deg = r.number("augment.max_rotation_deg");
    cfg.augment.scale = r.range("augment.scale");
    cfg.augment.gain = r.range("augment.gain");

    cfg.solver.tolerance = r.number("solver.tolerance");
    cfg.solver.max_iterations = static_cast<int>(r.integer("solver.max_iterations"));
    cfg.solver.relaxation = r.number("solver.relaxation");

    const std::string policy = r.string("image.policy");
    if (policy == "source")
      cfg.image.mode = ImagePolicy::Mode::source;
    else if (policy == "fixed")
      cfg.image.mode = ImagePolicy::Mode::fixed;
    else
      Reader::fail("image.policy", "expected \"source\" or \"fixed\"");
    cfg.image.width = static_cast<int>(r.integer("image.width"));
    cfg.image.height = static_cast<int>(r.integer("image.height"));
    cfg.reference_width = static_cast<int>(r.integer("reference_width"));

    const std::string categories = r.string("categories");
    if (categories == "per_family")
      cfg.categories = CategoriesMode::per_family;
    else if (categories == "class_agnostic")
      cfg.categories = CategoriesMode::class_agnostic;
    else
      Reader::fail("categories", "expected \"per_family\" or \"class_agnostic\"");

    cfg.inputs.manifest = r.string("inputs.manifest");
    cfg.inputs.crops = r.string("inputs.crops");
  } catch (const json::exception& e) {
    throw Error(Errc::config, std::string("config: ") + e.what());
  }
  return cfg;
}

GenConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open config " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::config, path + ": " + e.what());
  }
  return config_from_json(j);
}

void apply_override(json& doc, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0)
    throw Error(Errc::config, "override must look like key=value: " + std::string(assignment));
  const std::string key(assignment.substr(0, eq));
  const std::string value(assignment.substr(eq + 1));

  json defaults = to_json(GenConfig{});
  json* cur = &doc;
  const json* ref = &defaults;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot - start);
    if (!ref->is_object() || !ref->contains(part)) throw Error(Errc::config, key + ": unknown key");
    ref = &(*ref)[part];
    if (!cur->is_object()) *cur = json::object();
    cur = &(*cur)[part];
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  json parsed = json::parse(value, nullptr, false);
  *cur = parsed.is_discarded() ? json(value) : parsed;
}

std::vector<ConfigIssue> validate_config(const GenConfig& cfg) {
  std::vector<ConfigIssue> out;
  if (cfg.max_annotations < 1) out.push_back({"max_annotations", "must be >= 1"});
  check_weights(out, "annotation_type_weights", cfg.annotation_type_weights);
  check_weights(out, "structure_weights", cfg.structure_weights);
  check_weights(out, "blend_mode_weights", cfg.blend_mode_weights);
  for (std::size_t i = 0; i < kFamilyCount; ++i) {
    const auto c = static_cast<Category>(i);
    if (!is_region_family(c) && !cfg.eligibility[i].empty())
      out.push_back({"eligibility." + std::string(to_string(c)), "family is never anchored; must be empty"});
  }
  check_range(out, "intensity.dark", cfg.dark_intensity, true, false);
  check_range(out, "intensity.bright", cfg.bright_intensity, true, false);
  check_range(out, "opacity", cfg.opacity, true, true);

  const auto& s = cfg.structures;
  if (s.text_min_length < 1 || s.text_max_length < s.text_min_length)
    out.push_back({"structures.text_min_length", "need 1 <= text_min_length <= text_max_length"});
  check_range(out, "structures.text_scale", s.text_scale, false, true);
  check_range(out, "structures.ellipse_axis_rel", s.ellipse_axis_rel, true, true);
  if (!(s.min_axis_px > 0.0)) out.push_back({"structures.min_axis_px", "must be positive"});
  check_range(out, "structures.ring_thickness_px", s.ring_thickness_px, false, true);
  check_range(out, "structures.rect_size_rel", s.rect_size_rel, true, true);
  check_range(out, "structures.clip_length_px", s.clip_length_px, false, true);
  check_range(out, "structures.clip_thickness_px", s.clip_thickness_px, false, true);
  if (s.clip_max_count < 1) out.push_back({"structures.clip_max_count", "must be >= 1"});
  if (s.clip_max_angle_deg < 0.0 || s.clip_max_angle_deg > 90.0)
    out.push_back({"structures.clip_max_angle_deg", "must lie in [0,90]"});
  check_range(out, "structures.grid_spacing_px", s.grid_spacing_px, false, true);
  if (s.grid_jitter < 0.0 || s.grid_jitter > 0.25) out.push_back({"structures.grid_jitter", "must lie in [0,0.25]"});
  check_range(out, "structures.grid_thickness_px", s.grid_thickness_px, false, true);
  if (s.grid_shade_jitter < 0.0 || s.grid_shade_jitter > 1.0)
    out.push_back({"structures.grid_shade_jitter", "must lie in [0,1]"});
  if (s.line_max_segments < 1 || s.line_max_segments > 5)
    out.push_back({"structures.line_max_segments", "must lie in [1,5]"});
  check_range(out, "structures.line_thickness_px", s.line_thickness_px, false, true);
  if (s.tube_max_segments < 1 || s.tube_max_segments > 5)
    out.push_back({"structures.tube_max_segments", "must lie in [1,5]"});
  check_range(out, "structures.tube_width_px", s.tube_width_px, false, true);
  check_range(out, "structures.tube_wall_px", s.tube_wall_px, false, true);
  check_range(out, "structures.tube_fill_intensity", s.tube_fill_intensity, true, false);

  const auto& a = cfg.augment;
  if (a.flip_probability < 0.0 || a.flip_probability > 1.0)
    out.push_back({"augment.flip_probability", "must lie in [0,1]"});
  if (a.max_rotation_deg < 0.0 || a.max_rotation_deg > 180.0)
    out.push_back({"augment.max_rotation_deg", "must lie in [0,180]"});
  check_range(out, "augment.scale", a.scale, false, true);
  check_range(out, "augment.gain", a.gain, false, true);

  if (!(cfg.solver.tolerance > 0.0)) out.push_back({"solver.tolerance", "must be positive"});
  if (cfg.solver.max_iterations < 1) out.push_back({"solver.max_iterations", "must be >= 1"});
  if (!(cfg.solver.relaxation > 0.0 && cfg.solver.relaxation < 2.0))
    out.push_back({"solver.relaxation", "must lie in (0,2)"});
  if (cfg.image.mode == ImagePolicy::Mode::fixed && (cfg.image.width < 8 || cfg.image.height < 8))
    out.push_back({"image", "fixed dimensions must be at least 8x8"});
  if (cfg.reference_width < 1) out.push_back({"reference_width", "must be >= 1"});
  return out;
}

int sample_num_annotations(const GenConfig& cfg, Rng& rng) {
  return static_cast<int>(rng.uniform_int(1, std::max(1, cfg.max_annotations)));
}

}  // namespace fbsynth
