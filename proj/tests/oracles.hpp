#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's numerical paths.

#include <cmath>
#include <complex>
#include <functional>

namespace vecbeam::oracle {

inline double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

/// L_p^a(x) = sum_k (-1)^k C(p + a, p - k) x^k / k!
inline double laguerre_expansion(int p, int a, double x) {
  double sum = 0.0;
  for (int k = 0; k <= p; ++k) sum += (k % 2 ? -1.0 : 1.0) * binomial(p + a, p - k) * std::pow(x, k) / factorial(k);
  return sum;
}

/// Closed-form LG_pl at the waist, evaluated pointwise.
inline std::complex<double> lg_waist(int p, int l, double w0, double x, double y) {
  const int al = std::abs(l);
  const double r2 = (x * x + y * y) / (w0 * w0);
  const double c = std::sqrt(2.0 * factorial(p) / (M_PI * factorial(p + al))) / w0;
  const double amp = c * std::pow(2.0 * r2, 0.5 * al) * laguerre_expansion(p, al, 2.0 * r2) * std::exp(-r2);
  return std::polar(amp, l * std::atan2(y, x));
}

/// Composite Simpson rule on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int k = 1; k < n; ++k) s += f(a + k * h) * (k % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

/// |<LG_pl, G exp(i arg LG_pl)>|^2 by radial quadrature: with the phase
/// removed the integrand is |LG_pl(r)| G(r) 2 pi r.
inline double phase_only_overlap(int p, int l, double w0) {
  auto integrand = [&](double r) {
    const auto lg = lg_waist(p, l, w0, r, 0.0);
    const double g = std::sqrt(2.0 / M_PI) / w0 * std::exp(-r * r / (w0 * w0));
    return std::abs(lg) * g * 2.0 * M_PI * r;
  };
  const double c = simpson(integrand, 0.0, 10.0 * w0, 200000);
  return c * c;
}

/// 1/e^2 intensity radius of a Gaussian beam: w0 sqrt(1 + (z/zR)^2).
inline double gaussian_radius(double w0, double wavelength, double z) {
  const double zr = M_PI * w0 * w0 / wavelength;
  return w0 * std::sqrt(1.0 + (z / zr) * (z / zr));
}

}  // namespace vecbeam::oracle
