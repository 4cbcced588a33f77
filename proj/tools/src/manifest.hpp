#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace vecbeam::cli {

/// Frame manifest: one `angle_degrees filename` pair per line, `#` starts a
/// comment. Filenames are relative to the manifest's directory.
struct ManifestEntry {
  double angle_degrees = 0.0;
  std::string filename;
};

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path, const std::vector<ManifestEntry>& entries);

}  // namespace vecbeam::cli
