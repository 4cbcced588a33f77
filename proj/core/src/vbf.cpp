#include "vecbeam/vbf.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "vecbeam/errors.hpp"

namespace vecbeam {
namespace {

std::string shortest(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

void put_f64(std::ostream& out, double v) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  std::array<char, 8> bytes{};
  for (int b = 0; b < 8; ++b) bytes[b] = static_cast<char>((bits >> (8 * b)) & 0xffu);
  out.write(bytes.data(), 8);
}

double get_f64(const unsigned char* p) {
  std::uint64_t bits = 0;
  for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(p[b]) << (8 * b);
  return std::bit_cast<double>(bits);
}

template <typename T>
T parse_token(const std::string& token, const char* what) {
  T value{};
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw IoError(std::string("VBF1 header: bad ") + what + " '" + token + "'");
  }
  return value;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

void write_vbf(std::ostream& out, const GridSpec& grid, const std::vector<std::span<const Complex>>& components) {
  out << "VBF1 " << grid.nx() << ' ' << grid.ny() << ' ' << shortest(grid.dx()) << ' ' << shortest(grid.dy()) << ' '
      << components.size() << '\n';
  for (const auto& comp : components) {
    if (comp.size() != grid.size()) throw ShapeError("write_vbf: component size does not match grid");
    for (const auto& a : comp) {
      put_f64(out, a.real());
      put_f64(out, a.imag());
    }
  }
  if (!out) throw IoError("write_vbf: stream failure");
}

namespace {

GridSpec grid_from_header(int nx, int ny, double dx, double dy) {
  try {
    return GridSpec(nx, ny, dx, dy);
  } catch (const DomainError& e) {
    throw IoError(std::string("VBF1: ") + e.what());
  }
}

}  // namespace

VbfData read_vbf(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw IoError("VBF1: missing header line");
  std::istringstream hs(header);
  std::string magic, snx, sny, sdx, sdy, snc, extra;
  hs >> magic >> snx >> sny >> sdx >> sdy >> snc;
  if (magic != "VBF1" || snc.empty() || (hs >> extra)) throw IoError("VBF1: malformed header '" + header + "'");
  const int nx = parse_token<int>(snx, "nx");
  const int ny = parse_token<int>(sny, "ny");
  const double dx = parse_token<double>(sdx, "dx");
  const double dy = parse_token<double>(sdy, "dy");
  const int nc = parse_token<int>(snc, "ncomp");
  if (nc < 1) throw IoError("VBF1: ncomp must be >= 1");
  VbfData data{grid_from_header(nx, ny, dx, dy), {}};
  const std::size_t count = data.grid.size();
  std::vector<unsigned char> raw(count * 16);
  for (int c = 0; c < nc; ++c) {
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size())) throw IoError("VBF1: truncated payload");
    std::vector<Complex> comp(count);
    for (std::size_t k = 0; k < count; ++k) comp[k] = {get_f64(&raw[16 * k]), get_f64(&raw[16 * k + 8])};
    data.components.push_back(std::move(comp));
  }
  if (in.peek() != std::char_traits<char>::eof()) throw IoError("VBF1: trailing bytes after payload");
  return data;
}

void write_vbf(const std::filesystem::path& path, const ScalarField& f) {
  auto out = open_out(path);
  write_vbf(out, f.grid(), {f.amps()});
}

void write_vbf(const std::filesystem::path& path, const VectorField& f) {
  auto out = open_out(path);
  write_vbf(out, f.grid(), {f.h().amps(), f.v().amps()});
}

void write_vbf(const std::filesystem::path& path, const RealRaster& r) {
  std::vector<Complex> amps(r.values.begin(), r.values.end());
  auto out = open_out(path);
  write_vbf(out, r.grid, {std::span<const Complex>(amps)});
}

VbfData read_vbf(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return read_vbf(in);
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

ScalarField read_scalar_vbf(const std::filesystem::path& path) {
  auto d = read_vbf(path);
  if (d.components.size() != 1) throw IoError(path.string() + ": expected 1 component");
  return ScalarField(d.grid, std::move(d.components[0]));
}

VectorField read_vector_vbf(const std::filesystem::path& path) {
  auto d = read_vbf(path);
  if (d.components.size() != 2) throw IoError(path.string() + ": expected 2 components");
  return VectorField(ScalarField(d.grid, std::move(d.components[0])), ScalarField(d.grid, std::move(d.components[1])));
}

RealRaster read_real_vbf(const std::filesystem::path& path) {
  auto d = read_vbf(path);
  if (d.components.size() != 1) throw IoError(path.string() + ": expected 1 component");
  RealRaster r(d.grid);
  for (std::size_t k = 0; k < r.values.size(); ++k) r.values[k] = d.components[0][k].real();
  return r;
}

}  // namespace vecbeam
