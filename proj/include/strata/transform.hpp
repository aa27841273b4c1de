#pragma once

#include "strata/field.hpp"

namespace strata {

/// Forward transform: samples -> coefficients of exp(i(kx x + ky y + pi m z)),
/// normalized so coeffs[0] is the field mean. The z origin sits at z = -1, so
/// the implementation folds the phase (-1)^m into the raw FFT output.
SpectralField forward(const Field& f);

/// Inverse transform, exact round trip with forward().
Field inverse(const SpectralField& s);

SpectralField2 forward(const Field2& f);
Field2 inverse(const SpectralField2& s);

}  // namespace strata
