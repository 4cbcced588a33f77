#include "vecbeam/field.hpp"

#include <algorithm>
#include <numeric>

#include "vecbeam/errors.hpp"

namespace vecbeam {

ScalarField::ScalarField(GridSpec grid) : grid_(grid), amps_(grid.size(), Complex{}) {}

ScalarField::ScalarField(GridSpec grid, std::vector<Complex> amps) : grid_(grid), amps_(std::move(amps)) {
  if (amps_.size() != grid_.size()) {
    throw ShapeError("amplitude count " + std::to_string(amps_.size()) + " does not match grid size " +
                     std::to_string(grid_.size()));
  }
}

ScalarField& ScalarField::operator*=(Complex s) {
  for (auto& a : amps_) a *= s;
  return *this;
}

ScalarField& ScalarField::operator+=(const ScalarField& other) {
  require_same_grid(grid_, other.grid_, "field sum");
  for (std::size_t k = 0; k < amps_.size(); ++k) amps_[k] += other.amps_[k];
  return *this;
}

ScalarField operator*(Complex s, ScalarField f) {
  f *= s;
  return f;
}

ScalarField operator+(ScalarField a, const ScalarField& b) {
  a += b;
  return a;
}

Complex inner_product(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid(), "inner_product");
  Complex acc{};
  auto pa = a.amps();
  auto pb = b.amps();
  for (std::size_t k = 0; k < pa.size(); ++k) acc += std::conj(pa[k]) * pb[k];
  return acc * a.grid().pixel_area();
}

double power(const ScalarField& f) {
  double acc = 0.0;
  for (const auto& a : f.amps()) acc += std::norm(a);
  return acc * f.grid().pixel_area();
}

RealRaster::RealRaster(GridSpec g, std::vector<double> v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.size()) {
    throw ShapeError("raster value count does not match grid size");
  }
}

double RealRaster::max() const { return *std::max_element(values.begin(), values.end()); }

double RealRaster::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

RealRaster intensity(const ScalarField& f) {
  RealRaster out(f.grid());
  auto a = f.amps();
  for (std::size_t k = 0; k < a.size(); ++k) out.values[k] = std::norm(a[k]);
  return out;
}

}  // namespace vecbeam
