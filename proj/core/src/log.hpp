// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <spdlog/spdlog.h>

namespace fbsynth::detail {

/// Shared logger; level comes from FBSYNTH_LOG (trace|debug|info|warn|error|off), default warn.
spdlog::logger& logger();

}  // namespace fbsynth::detail
