#include "vecbeam/jones.hpp"

#include <cmath>

#include "vecbeam/errors.hpp"

namespace vecbeam {

JonesMatrix JonesMatrix::adjoint() const {
  return {std::conj(hh), std::conj(vh), std::conj(hv), std::conj(vv)};
}

JonesMatrix operator*(const JonesMatrix& a, const JonesMatrix& b) {
  return {a.hh * b.hh + a.hv * b.vh, a.hh * b.hv + a.hv * b.vv, a.vh * b.hh + a.vv * b.vh,
          a.vh * b.hv + a.vv * b.vv};
}

double distance(const JonesMatrix& a, const JonesMatrix& b) {
  return std::sqrt(std::norm(a.hh - b.hh) + std::norm(a.hv - b.hv) + std::norm(a.vh - b.vh) +
                   std::norm(a.vv - b.vv));
}

JonesMatrix waveplate(double retardance, double axis_angle) {
  const double c = std::cos(axis_angle);
  const double s = std::sin(axis_angle);
  const Complex e = std::polar(1.0, -retardance);
  // R(-t) diag(1, e) R(t) expanded.
  return {c * c + e * s * s, c * s * (1.0 - e), c * s * (1.0 - e), s * s + e * c * c};
}

JonesMatrix polarizer(double axis) {
  const double c = std::cos(axis);
  const double s = std::sin(axis);
  return {c * c, c * s, c * s, s * s};
}

std::array<Complex, 2> sigma_plus() {
  const double r = 1.0 / std::sqrt(2.0);
  return {Complex{r, 0.0}, Complex{0.0, -r}};
}

std::array<Complex, 2> sigma_minus() {
  const double r = 1.0 / std::sqrt(2.0);
  return {Complex{r, 0.0}, Complex{0.0, r}};
}

VectorField::VectorField(GridSpec grid) : h_(grid), v_(grid) {}

VectorField::VectorField(ScalarField h, ScalarField v) : h_(std::move(h)), v_(std::move(v)) {
  require_same_grid(h_.grid(), v_.grid(), "vector field components");
}

namespace {

ScalarField project(const VectorField& f, const std::array<Complex, 2>& state) {
  ScalarField out(f.grid());
  const Complex ch = std::conj(state[0]);
  const Complex cv = std::conj(state[1]);
  auto h = f.h().amps();
  auto v = f.v().amps();
  auto o = out.amps();
  for (std::size_t k = 0; k < o.size(); ++k) o[k] = ch * h[k] + cv * v[k];
  return out;
}

}  // namespace

ScalarField VectorField::circular_plus() const { return project(*this, sigma_plus()); }
ScalarField VectorField::circular_minus() const { return project(*this, sigma_minus()); }

double power(const VectorField& f) { return power(f.h()) + power(f.v()); }

Complex inner_product(const VectorField& a, const VectorField& b) {
  return inner_product(a.h(), b.h()) + inner_product(a.v(), b.v());
}

VectorField apply_jones(const VectorField& f, const JonesMatrix& m) {
  VectorField out(f.grid());
  auto h = f.h().amps();
  auto v = f.v().amps();
  auto oh = out.h().amps();
  auto ov = out.v().amps();
  const auto n = static_cast<long>(h.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) {
    const auto [a, b] = m.apply(h[k], v[k]);
    oh[k] = a;
    ov[k] = b;
  }
  return out;
}

SlmModel::SlmModel(const PhaseMask& mask, double eta_mod) : mask_(&mask), eta_mod_(eta_mod) {
  if (!(eta_mod >= 0.0 && eta_mod <= 1.0)) throw DomainError("eta_mod must lie in [0, 1]");
}

VectorField slm_reflect(const VectorField& f, const SlmModel& slm) {
  require_same_grid(f.grid(), slm.mask().grid(), "slm_reflect");
  const double a = std::sqrt(slm.eta_mod());
  const double b = std::sqrt(1.0 - slm.eta_mod());
  VectorField out = f;
  auto h = out.h().amps();
  const auto& phase = slm.mask().phase();
  const auto n = static_cast<long>(h.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) h[k] *= a * std::polar(1.0, phase[k]) + b;
  return out;
}

}  // namespace vecbeam
