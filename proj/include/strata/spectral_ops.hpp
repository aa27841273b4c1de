#pragma once

#include "strata/field.hpp"

namespace strata {

enum class Axis { X, Y, Z };

/// Spectral derivative: multiplication by (i k)^order per mode, k in physical
/// units (kz = pi m). Odd-order derivatives zero the Nyquist plane of the
/// differentiated axis; d/dz flips declared parity.
SpectralField derivative(const SpectralField& f, Axis axis, int order = 1);

SpectralField2 derivative(const SpectralField2& f, Axis axis, int order = 1);

/// 2/3-rule dealiasing: zero every mode with 3|k| > n on any axis. Idempotent.
SpectralField dealias(SpectralField f);
void dealias_in_place(SpectralField& f);

/// Pointwise symmetrization (f(z) +/- f(-z)) / 2 on the samples.
Field parity_project(const Field& f, Parity parity);

/// Same projection applied to coefficients (pairs m with -m). Cheap enough to
/// run after every step.
void parity_project_in_place(SpectralField& f, Parity parity);

/// Sup-norm of the rejected component, measured on the samples.
double parity_defect(const Field& f, Parity parity);
double parity_defect(const SpectralField& f, Parity parity);

/// Solve (Lap_h + tau^-2 d_zz) p = rhs by per-mode division. The zero mode of
/// p is set to 0; rhs must have zero mean (solvability).
SpectralField solve_anisotropic_poisson(const SpectralField& rhs, double tau);

/// Solve -Lap_h p = rhs on the horizontal section with zero mean.
SpectralField2 solve_horizontal_poisson_zero_mean(const SpectralField2& rhs);

Complex mean(const SpectralField& f);
Complex mean(const SpectralField2& f);
void remove_mean(SpectralField& f);

/// Horizontal field of vertical means (1/2) * integral over z: the m = 0 mode
/// plane of f.
SpectralField2 vertical_mean(const SpectralField& f);

/// Embed a horizontal field as a z-uniform 3D field (even parity).
SpectralField extend_z(const SpectralField2& f);

// Parseval sums. weighted_norm_sq(f, p) = |Omega| * sum_k |k|^(2p) |c_k|^2,
// so p = 0 is the squared L2 norm and p = 1 the squared H1 seminorm.
double weighted_norm_sq(const SpectralField& f, int p);
double l2_norm(const SpectralField& f);
double h1_seminorm(const SpectralField& f);
double h1_norm(const SpectralField& f);

double linf_norm(const Field& f);
double linf_norm(const Field2& f);

}  // namespace strata
