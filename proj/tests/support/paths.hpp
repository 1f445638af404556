#pragma once

#include <filesystem>
#include <random>
#include <string>

namespace mdastyl::testing {

inline std::filesystem::path data_dir() { return MDASTYL_DATA_DIR; }

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("mdastyl-" + name + "-" + std::to_string(std::random_device{}()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace mdastyl::testing
