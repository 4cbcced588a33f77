#include "vecbeam/grid.hpp"

#include <cmath>
#include <string>

#include "vecbeam/errors.hpp"

namespace vecbeam {

GridSpec::GridSpec(int nx, int ny, double dx, double dy) : nx_(nx), ny_(ny), dx_(dx), dy_(dy) {
  if (nx < 2 || ny < 2) {
    throw DomainError("grid needs at least 2 pixels per axis, got " + std::to_string(nx) + "x" +
                      std::to_string(ny));
  }
  if (!(dx > 0.0) || !(dy > 0.0) || !std::isfinite(dx) || !std::isfinite(dy)) {
    throw DomainError("grid pitch must be positive and finite");
  }
}

GridSpec GridSpec::square(int n, double extent) {
  return GridSpec(n, n, extent / n, extent / n);
}

void require_same_grid(const GridSpec& a, const GridSpec& b, std::string_view what) {
  if (!(a == b)) {
    throw ShapeError(std::string(what) + ": grid mismatch (" + std::to_string(a.nx()) + "x" +
                     std::to_string(a.ny()) + " vs " + std::to_string(b.nx()) + "x" + std::to_string(b.ny()) +
                     ")");
  }
}

}  // namespace vecbeam
