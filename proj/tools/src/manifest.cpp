#include "manifest.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "run_config.hpp"
#include "vecbeam/errors.hpp"

namespace vecbeam::cli {

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read manifest " + path.string());
  std::vector<ManifestEntry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string angle;
    std::string name;
    std::string extra;
    if (!(fields >> angle)) continue;
    ManifestEntry e;
    const auto [end, ec] = std::from_chars(angle.data(), angle.data() + angle.size(), e.angle_degrees);
    if (ec != std::errc() || end != angle.data() + angle.size() || !(fields >> name) || (fields >> extra)) {
      throw IoError(path.string() + ": line " + std::to_string(line_no) + ": expected 'angle_degrees filename'");
    }
    e.filename = name;
    entries.push_back(std::move(e));
  }
  return entries;
}

void write_manifest(const std::filesystem::path& path, const std::vector<ManifestEntry>& entries) {
  std::string text = "# angle_degrees filename\n";
  for (const auto& e : entries) text += fmt(e.angle_degrees) + " " + e.filename + "\n";
  write_text(path, text);
}

}  // namespace vecbeam::cli
