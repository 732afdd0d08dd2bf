// SPDX-License-Identifier: Apache-2.0
// Writes a phantom source corpus (images, anatomy label maps, manifest, crops).
#include <iostream>

#include <CLI11.hpp>

#include "fbsynth/error.hpp"
#include "phantom.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate procedural chest-like source images with anatomy label maps"};
  std::string out;
  std::size_t count = 8, crops = 20;
  int size = 1024;
  std::uint64_t seed = 1;
  app.add_option("--out", out, "Output directory")->required();
  app.add_option("--n", count, "Number of source images")->check(CLI::PositiveNumber);
  app.add_option("--size", size, "Image width and height in pixels")->check(CLI::Range(32, 8192));
  app.add_option("--crops", crops, "Number of crops to write (0 to skip)");
  app.add_option("--seed", seed, "Corpus seed");
  CLI11_PARSE(app, argc, argv);

  try {
    const auto paths = fbsynth::phantom::write_corpus(out, count, {size, size}, crops, seed);
    std::cout << "manifest: " << paths.manifest << '\n';
    if (!paths.crops.empty()) std::cout << "crops: " << paths.crops << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
