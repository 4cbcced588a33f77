#include "vecbeam/pgm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "vecbeam/errors.hpp"

namespace vecbeam {
namespace {

// Reads the next header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  return tok;
}

int to_int(const std::string& tok, const std::filesystem::path& path) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw IoError(path.string() + ": bad PGM header token '" + tok + "'");
  }
}

}  // namespace

PgmImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::string magic = next_token(in);
  if (magic != "P5" && magic != "P2") throw IoError(path.string() + ": not a PGM file");
  PgmImage img;
  img.width = to_int(next_token(in), path);
  img.height = to_int(next_token(in), path);
  img.maxval = to_int(next_token(in), path);
  if (img.width < 1 || img.height < 1 || img.maxval < 1 || img.maxval > 65535) {
    throw IoError(path.string() + ": PGM dimensions or maxval out of range");
  }
  const std::size_t count = static_cast<std::size_t>(img.width) * img.height;
  img.pixels.resize(count);
  if (magic == "P2") {
    for (auto& p : img.pixels) {
      const std::string tok = next_token(in);
      if (tok.empty()) throw IoError(path.string() + ": truncated P2 data");
      const int v = to_int(tok, path);
      if (v < 0 || v > img.maxval) throw IoError(path.string() + ": sample exceeds maxval");
      p = static_cast<std::uint16_t>(v);
    }
    return img;
  }
  const int bytes = img.maxval < 256 ? 1 : 2;
  std::vector<unsigned char> raw(count * bytes);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (in.gcount() != static_cast<std::streamsize>(raw.size())) throw IoError(path.string() + ": truncated P5 data");
  for (std::size_t k = 0; k < count; ++k) {
    const unsigned v = bytes == 1 ? raw[k] : (unsigned(raw[2 * k]) << 8) | raw[2 * k + 1];
    if (v > static_cast<unsigned>(img.maxval)) throw IoError(path.string() + ": sample exceeds maxval");
    img.pixels[k] = static_cast<std::uint16_t>(v);
  }
  return img;
}

void write_pgm(const std::filesystem::path& path, const PgmImage& image) {
  if (image.pixels.size() != static_cast<std::size_t>(image.width) * image.height) {
    throw ShapeError("write_pgm: pixel count does not match dimensions");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << "P5\n" << image.width << ' ' << image.height << '\n' << image.maxval << '\n';
  for (auto p : image.pixels) {
    if (image.maxval < 256) {
      out.put(static_cast<char>(p & 0xff));
    } else {
      out.put(static_cast<char>(p >> 8));
      out.put(static_cast<char>(p & 0xff));
    }
  }
  if (!out) throw IoError("write failure on " + path.string());
}

// Grid row j = 0 is the most negative y, written as the bottom image row.
namespace {

std::size_t image_index(const GridSpec& g, int i, int j) {
  return static_cast<std::size_t>(g.ny() - 1 - j) * g.nx() + i;
}

}  // namespace

void write_mask_pgm(const std::filesystem::path& path, const PhaseMask& mask) {
  const GridSpec& g = mask.grid();
  PgmImage img{g.nx(), g.ny(), 255, std::vector<std::uint16_t>(g.size())};
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      img.pixels[image_index(g, i, j)] = static_cast<std::uint16_t>(std::lround(mask(i, j) / kTwoPi * 255.0));
    }
  }
  write_pgm(path, img);
}

PhaseMask read_mask_pgm(const std::filesystem::path& path, double dx, double dy) {
  const PgmImage img = read_pgm(path);
  if (img.maxval != 255) throw IoError(path.string() + ": phase masks must be 8-bit (maxval 255)");
  const GridSpec g(img.width, img.height, dx, dy);
  std::vector<double> phase(g.size());
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const unsigned v = img.pixels[image_index(g, i, j)];
      phase[g.index(i, j)] = v == 255 ? 0.0 : v * (kTwoPi / 255.0);
    }
  }
  return PhaseMask(g, std::move(phase), 255);
}

double write_intensity_pgm(const std::filesystem::path& path, const RealRaster& raster, double scale) {
  const GridSpec& g = raster.grid;
  if (scale <= 0.0) scale = raster.max();
  PgmImage img{g.nx(), g.ny(), 65535, std::vector<std::uint16_t>(g.size(), 0)};
  if (scale > 0.0) {
    for (int j = 0; j < g.ny(); ++j) {
      for (int i = 0; i < g.nx(); ++i) {
        const double v = std::clamp(raster(i, j) / scale, 0.0, 1.0);
        img.pixels[image_index(g, i, j)] = static_cast<std::uint16_t>(std::lround(v * 65535.0));
      }
    }
  }
  write_pgm(path, img);
  return scale;
}

RealRaster read_intensity_pgm(const std::filesystem::path& path, double dx, double dy, double scale) {
  const PgmImage img = read_pgm(path);
  const GridSpec g(img.width, img.height, dx, dy);
  RealRaster r(g);
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) r(i, j) = img.pixels[image_index(g, i, j)] * (scale / img.maxval);
  }
  return r;
}

void write_csv_grid(const std::filesystem::path& path, const RealRaster& raster) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << std::setprecision(17);
  const GridSpec& g = raster.grid;
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      if (i) out << ',';
      out << raster(i, j);
    }
    out << '\n';
  }
  if (!out) throw IoError("write failure on " + path.string());
}

}  // namespace vecbeam
