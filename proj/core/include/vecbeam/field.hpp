#pragma once

#include <complex>
#include <span>
#include <vector>

#include "vecbeam/grid.hpp"

namespace vecbeam {

using Complex = std::complex<double>;

/// Complex amplitude sampled on a GridSpec.
class ScalarField {
 public:
  explicit ScalarField(GridSpec grid);
  ScalarField(GridSpec grid, std::vector<Complex> amps);

  const GridSpec& grid() const { return grid_; }
  std::span<const Complex> amps() const { return amps_; }
  std::span<Complex> amps() { return amps_; }

  Complex operator()(int i, int j) const { return amps_[grid_.index(i, j)]; }
  Complex& operator()(int i, int j) { return amps_[grid_.index(i, j)]; }

  /// Set by lg_mode when the grid clips more than 1% of the mode power.
  bool truncated() const { return truncated_; }
  void mark_truncated(bool t) { truncated_ = t; }

  ScalarField& operator*=(Complex s);
  ScalarField& operator+=(const ScalarField& other);

 private:
  GridSpec grid_;
  std::vector<Complex> amps_;
  bool truncated_ = false;
};

ScalarField operator*(Complex s, ScalarField f);
ScalarField operator+(ScalarField a, const ScalarField& b);

/// Sum of conj(a) * b * dx * dy.
Complex inner_product(const ScalarField& a, const ScalarField& b);

/// Sum of |a|^2 * dx * dy.
double power(const ScalarField& f);

/// Real-valued raster (intensities, Stokes parameters, camera frames).
struct RealRaster {
  explicit RealRaster(GridSpec g) : grid(g), values(g.size(), 0.0) {}
  RealRaster(GridSpec g, std::vector<double> v);

  double operator()(int i, int j) const { return values[grid.index(i, j)]; }
  double& operator()(int i, int j) { return values[grid.index(i, j)]; }
  double max() const;
  double sum() const;

  GridSpec grid;
  std::vector<double> values;
};

/// |a|^2 per pixel.
RealRaster intensity(const ScalarField& f);

}  // namespace vecbeam
