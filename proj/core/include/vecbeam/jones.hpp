#pragma once

#include <array>

#include "vecbeam/field.hpp"
#include "vecbeam/phase_mask.hpp"

namespace vecbeam {

/// 2x2 complex operator on (H, V) amplitudes.
struct JonesMatrix {
  Complex hh{1.0, 0.0};
  Complex hv{0.0, 0.0};
  Complex vh{0.0, 0.0};
  Complex vv{1.0, 0.0};

  static JonesMatrix identity() { return {}; }
  JonesMatrix adjoint() const;
  Complex determinant() const { return hh * vv - hv * vh; }
  std::array<Complex, 2> apply(Complex h, Complex v) const { return {hh * h + hv * v, vh * h + vv * v}; }

  friend JonesMatrix operator*(const JonesMatrix& a, const JonesMatrix& b);
};

/// Frobenius norm of a - b.
double distance(const JonesMatrix& a, const JonesMatrix& b);

/// Linear retarder R(-theta) diag(1, exp(-i delta)) R(theta), with
/// R(theta) = [[cos, sin], [-sin, cos]].
///
/// The axis at `axis_angle` passes with phase 0, the orthogonal axis is
/// shifted by exp(-i delta). With this sign the circular state
/// sigma_plus = (1, -i)/sqrt(2) has s3 = +s0 and a QWP at +45 deg maps V onto
/// sigma_plus.
JonesMatrix waveplate(double retardance, double axis_angle);
inline JonesMatrix half_wave_plate(double axis_angle) { return waveplate(kPi, axis_angle); }
inline JonesMatrix quarter_wave_plate(double axis_angle) { return waveplate(0.5 * kPi, axis_angle); }

/// Projector onto the linear polarization at `axis` (radians from H).
JonesMatrix polarizer(double axis);

/// Circular basis states in (H, V): sigma_plus = (1, -i)/sqrt(2),
/// sigma_minus = (1, i)/sqrt(2).
std::array<Complex, 2> sigma_plus();
std::array<Complex, 2> sigma_minus();

/// Two co-registered components on one grid.
class VectorField {
 public:
  explicit VectorField(GridSpec grid);
  /// Throws ShapeError when the component grids differ.
  VectorField(ScalarField h, ScalarField v);

  const GridSpec& grid() const { return h_.grid(); }
  const ScalarField& h() const { return h_; }
  const ScalarField& v() const { return v_; }
  ScalarField& h() { return h_; }
  ScalarField& v() { return v_; }

  /// Projection on sigma_plus / sigma_minus.
  ScalarField circular_plus() const;
  ScalarField circular_minus() const;

 private:
  ScalarField h_;
  ScalarField v_;
};

double power(const VectorField& f);

/// Sum over both components of conj(a) * b * dx * dy.
Complex inner_product(const VectorField& a, const VectorField& b);

/// Pixel-wise m * (h, v).
VectorField apply_jones(const VectorField& f, const JonesMatrix& m);

/// Polarization-selective SLM reflection.
///
/// Only H is modulated: h' = (sqrt(eta) exp(i phi) + sqrt(1 - eta)) h, the
/// second term being the coherent unmodulated specular remnant. V passes
/// unchanged. Holds a reference to the mask, which must outlive the model.
class SlmModel {
 public:
  SlmModel(const PhaseMask& mask, double eta_mod);

  const PhaseMask& mask() const { return *mask_; }
  double eta_mod() const { return eta_mod_; }

 private:
  const PhaseMask* mask_;
  double eta_mod_;
};

VectorField slm_reflect(const VectorField& f, const SlmModel& slm);

}  // namespace vecbeam
