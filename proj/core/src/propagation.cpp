#include "vecbeam/propagation.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <sstream>

#include "vecbeam/errors.hpp"
#include "vecbeam/phase_mask.hpp"

namespace vecbeam {
namespace {

// Planner calls are not thread-safe; executions are.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

class Fft2d {
 public:
  Fft2d(int nx, int ny) : nx_(nx), ny_(ny) {
    buffer_.reset(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * nx * ny)));
    if (!buffer_) throw std::bad_alloc();
    std::lock_guard lock(planner_mutex());
    // Rows are y, columns are x: FFTW wants the slowest dimension first.
    forward_ = fftw_plan_dft_2d(ny, nx, buffer_.get(), buffer_.get(), FFTW_FORWARD, FFTW_ESTIMATE);
    backward_ = fftw_plan_dft_2d(ny, nx, buffer_.get(), buffer_.get(), FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~Fft2d() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(backward_);
  }
  Fft2d(const Fft2d&) = delete;
  Fft2d& operator=(const Fft2d&) = delete;

  Complex* data() { return reinterpret_cast<Complex*>(buffer_.get()); }
  void forward() { fftw_execute(forward_); }
  void backward() { fftw_execute(backward_); }

 private:
  int nx_;
  int ny_;
  std::unique_ptr<fftw_complex, FftwFree> buffer_;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

// Signed DFT frequency index for bin k of n.
int signed_index(int k, int n) { return k < (n + 1) / 2 ? k : k - n; }

}  // namespace

double critical_distance(const GridSpec& grid, double wavelength, int pad_factor) {
  const double nx = static_cast<double>(grid.nx()) * pad_factor;
  const double ny = static_cast<double>(grid.ny()) * pad_factor;
  return std::min(nx * grid.dx() * grid.dx(), ny * grid.dy() * grid.dy()) / wavelength;
}

ScalarField angular_spectrum(const ScalarField& f, double distance, double wavelength,
                             const PropagationOptions& options) {
  if (!(wavelength > 0.0)) throw DomainError("angular_spectrum: wavelength must be > 0");
  if (options.pad_factor < 1) throw DomainError("angular_spectrum: pad_factor must be >= 1");
  if (!std::isfinite(distance)) throw DomainError("angular_spectrum: distance must be finite");
  if (distance == 0.0) return f;

  const GridSpec& grid = f.grid();
  if (!options.band_limit) {
    const double zc = critical_distance(grid, wavelength, options.pad_factor);
    if (std::abs(distance) > zc) {
      std::ostringstream msg;
      msg << "angular_spectrum: |distance| " << std::abs(distance) << " m exceeds the critical distance " << zc
          << " m for this grid; enable band limiting or refine the sampling";
      throw PreconditionError(msg.str());
    }
  }

  const int px = grid.nx() * options.pad_factor;
  const int py = grid.ny() * options.pad_factor;
  const int ox = (px - grid.nx()) / 2;
  const int oy = (py - grid.ny()) / 2;

  Fft2d fft(px, py);
  Complex* buf = fft.data();
  std::fill(buf, buf + static_cast<std::size_t>(px) * py, Complex{});
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = 0; i < grid.nx(); ++i) {
      buf[static_cast<std::size_t>(j + oy) * px + (i + ox)] = f(i, j);
    }
  }
  fft.forward();

  const double dfx = 1.0 / (px * grid.dx());
  const double dfy = 1.0 / (py * grid.dy());
  const double inv_l2 = 1.0 / (wavelength * wavelength);
  const double k_over = kTwoPi * distance;
  // Band limit after Matsushima & Shimobaba: the transfer function chirp is
  // sampled without aliasing only below these frequencies.
  const double fx_limit = 1.0 / (wavelength * std::sqrt(std::pow(2.0 * dfx * distance, 2) + 1.0));
  const double fy_limit = 1.0 / (wavelength * std::sqrt(std::pow(2.0 * dfy * distance, 2) + 1.0));
  const double scale = 1.0 / (static_cast<double>(px) * py);

#pragma omp parallel for schedule(static)
  for (int v = 0; v < py; ++v) {
    const double fy = signed_index(v, py) * dfy;
    for (int u = 0; u < px; ++u) {
      const double fx = signed_index(u, px) * dfx;
      Complex& c = buf[static_cast<std::size_t>(v) * px + u];
      const double arg = inv_l2 - fx * fx - fy * fy;
      if (arg <= 0.0 || (options.band_limit && (std::abs(fx) > fx_limit || std::abs(fy) > fy_limit))) {
        c = Complex{};
        continue;
      }
      // kz - k, written to avoid cancellation for paraxial frequencies.
      const double rho2 = fx * fx + fy * fy;
      const double dkz = -rho2 / (std::sqrt(arg) + 1.0 / wavelength);
      c *= std::polar(scale, k_over * dkz);
    }
  }
  fft.backward();

  ScalarField out(grid);
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = 0; i < grid.nx(); ++i) {
      out(i, j) = buf[static_cast<std::size_t>(j + oy) * px + (i + ox)];
    }
  }
  return out;
}

VectorField propagate_vector(const VectorField& f, double distance, double wavelength,
                             const PropagationOptions& options) {
  return VectorField(angular_spectrum(f.h(), distance, wavelength, options),
                     angular_spectrum(f.v(), distance, wavelength, options));
}

}  // namespace vecbeam
