#pragma once

#include <cstddef>
#include <string_view>

namespace vecbeam {

/// Uniform sampling grid centred on the optical axis.
///
/// Pixel (i, j) sits at ((i - (nx-1)/2) dx, (j - (ny-1)/2) dy). Storage is
/// row-major: index = j * nx + i.
class GridSpec {
 public:
  GridSpec(int nx, int ny, double dx, double dy);

  /// n x n grid spanning `extent` meters on each side.
  static GridSpec square(int n, double extent);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }
  std::size_t size() const { return static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_); }
  double pixel_area() const { return dx_ * dy_; }
  double extent_x() const { return nx_ * dx_; }
  double extent_y() const { return ny_ * dy_; }

  double x(int i) const { return (i - 0.5 * (nx_ - 1)) * dx_; }
  double y(int j) const { return (j - 0.5 * (ny_ - 1)) * dy_; }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx_) + static_cast<std::size_t>(i);
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  int nx_;
  int ny_;
  double dx_;
  double dy_;
};

/// Throws ShapeError naming `what` when the grids differ.
void require_same_grid(const GridSpec& a, const GridSpec& b, std::string_view what);

}  // namespace vecbeam
