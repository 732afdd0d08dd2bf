// SPDX-License-Identifier: Apache-2.0
#include "fbsynth/error.hpp"

namespace fbsynth {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::domain: return "domain";
    case Errc::empty_footprint: return "empty footprint";
    case Errc::degenerate_ring: return "degenerate ring";
    case Errc::region_too_small: return "region too small";
    case Errc::no_exterior_start: return "no exterior start point";
    case Errc::no_anatomy: return "no anatomy available";
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::unknown_label: return "unknown label";
    case Errc::corrupt_file: return "corrupt file";
    case Errc::io: return "io";
    case Errc::config: return "config";
    case Errc::format: return "format";
    case Errc::placement_failed: return "placement failed";
    case Errc::solver_diverged: return "solver did not converge";
    case Errc::alignment: return "alignment error";
    case Errc::generation_failed: return "generation failed";
  }
  return "unknown";
}

}  // namespace fbsynth
