#pragma once

#include <filesystem>
#include <fstream>
#include <string>

namespace vluc::pipeline {

/// Output file written to "<path>.part" and renamed on commit(). If the
/// object is destroyed without commit() the partial file is removed.
class OutputFile {
 public:
  explicit OutputFile(std::filesystem::path path, bool binary = false);
  ~OutputFile();
  OutputFile(const OutputFile&) = delete;
  OutputFile& operator=(const OutputFile&) = delete;

  std::ofstream& stream() { return out_; }
  const std::filesystem::path& temp_path() const { return temp_; }
  void commit();

 private:
  std::filesystem::path path_;
  std::filesystem::path temp_;
  std::ofstream out_;
  bool committed_ = false;
};

/// Staging path for writers that open files themselves; removed on
/// destruction unless committed.
class StagedPath {
 public:
  explicit StagedPath(std::filesystem::path path);
  ~StagedPath();
  StagedPath(const StagedPath&) = delete;
  StagedPath& operator=(const StagedPath&) = delete;

  std::string temp() const { return temp_.string(); }
  void commit();

 private:
  std::filesystem::path path_;
  std::filesystem::path temp_;
  bool committed_ = false;
};

std::ifstream open_input(const std::filesystem::path& path, bool binary = false);

}  // namespace vluc::pipeline
