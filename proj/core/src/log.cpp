// SPDX-License-Identifier: Apache-2.0
#include "log.hpp"

#include <cstdlib>

#include <spdlog/sinks/stdout_color_sinks.h>

namespace fbsynth::detail {

spdlog::logger& logger() {
  static std::shared_ptr<spdlog::logger> instance = [] {
    auto l = spdlog::stderr_color_mt("fbsynth");
    const char* env = std::getenv("FBSYNTH_LOG");
    l->set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
    l->set_pattern("[%l] %v");
    return l;
  }();
  return *instance;
}

}  // namespace fbsynth::detail
