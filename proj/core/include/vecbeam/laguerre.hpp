#pragma once

#include "vecbeam/field.hpp"
#include "vecbeam/grid.hpp"

namespace vecbeam {

/// Generalized Laguerre polynomial L_p^a(x) by the three-term recurrence
///   (k+1) L_{k+1} = (2k + 1 + a - x) L_k - (k + a) L_{k-1}.
/// Throws DomainError for p < 0 or a < 0.
double assoc_laguerre(int p, int a, double x);

/// Laguerre-Gaussian mode parameters. `l` carries the handedness of the
/// helical phase exp(i l phi).
struct LGModeSpec {
  int p = 0;
  int l = 0;
  double w0 = 1e-3;
  double wavelength = 1.56e-6;
  double z = 0.0;

  void validate() const;
  double rayleigh_range() const;
  double beam_radius() const;  ///< w(z)
};

/// Unit-power LG_pl field on `grid`, including Gouy and curvature phases for
/// z != 0 (exp(+i k z) carrier convention, carrier dropped). The result is
/// marked truncated when the sampled power falls below 0.99.
ScalarField lg_mode(const LGModeSpec& spec, const GridSpec& grid);

}  // namespace vecbeam
