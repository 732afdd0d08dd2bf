// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace fbsynth {

enum class Errc {
  domain,               // argument outside an operation's domain
  empty_footprint,      // rasterization produced no pixels
  degenerate_ring,
  region_too_small,
  no_exterior_start,
  no_anatomy,
  dimension_mismatch,
  unknown_label,
  corrupt_file,
  io,
  config,
  format,
  placement_failed,
  solver_diverged,
  alignment,
  generation_failed,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fbsynth
