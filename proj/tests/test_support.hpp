#pragma once

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "qtwist/twists/registry.hpp"

namespace qtwist::test_support {

inline constexpr unsigned kPropertySeed = 20240917;

/// Copy of the shipped data directory that a test may corrupt. Removed on
/// destruction.
class ScratchData {
 public:
  ScratchData() {
    namespace fs = std::filesystem;
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("qtwist-test-" + std::to_string(rd()) + "-" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    fs::copy(default_data_dir(), dir_, fs::copy_options::recursive);
  }
  ~ScratchData() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  ScratchData(const ScratchData&) = delete;
  ScratchData& operator=(const ScratchData&) = delete;

  std::string path() const { return dir_.string(); }

  /// Replaces the single occurrence of `from` in data file `rel`.
  void replace(const std::string& rel, const std::string& from, const std::string& to) {
    const auto file = dir_ / rel;
    std::ifstream in(file, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    std::string text = s.str();
    const auto at = text.find(from);
    ASSERT_NE(at, std::string::npos) << "pattern not found in " << rel << ": " << from;
    ASSERT_EQ(text.find(from, at + 1), std::string::npos) << "pattern not unique in " << rel;
    text.replace(at, from.size(), to);
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    out << text;
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace qtwist::test_support
