#pragma once

#include <initializer_list>
#include <span>

#include "vecbeam/phase_mask.hpp"

namespace vecbeam {

/// arg(LG_pl) at the waist: l * phi plus pi on every annulus where
/// L_p^|l|(2 r^2 / w0^2) is negative.
PhaseMask lg_phase_mask(int p, int l, double w0, const GridSpec& grid);

/// Thin-lens phase wrap(-pi r^2 / (lambda f)). Throws DomainError for
/// wavelength <= 0 or focal_length == 0.
PhaseMask kinoform_lens(double focal_length, double wavelength, const GridSpec& grid);

/// Pixel-wise sum, wrapped; the result is continuous (levels = 0).
/// Throws ShapeError on grid mismatch, DomainError on an empty list.
PhaseMask combine(std::span<const PhaseMask> masks);
PhaseMask combine(std::initializer_list<PhaseMask> masks);

PhaseMask negate(const PhaseMask& mask);
PhaseMask add_constant(const PhaseMask& mask, double offset);

/// Rounds every phase to the nearest multiple of 2*pi/levels (levels >= 2).
PhaseMask quantize(const PhaseMask& mask, int levels);

}  // namespace vecbeam
