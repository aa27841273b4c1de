#pragma once

#include "strata/field.hpp"

namespace strata {

/// F(x,y,z) = integral of f from 0 to z, computed per mode as c_m / (i pi m)
/// with the constant term chosen so F(.,.,0) = 0. Requires the vertical mean
/// of f to vanish pointwise (otherwise the antiderivative is not periodic);
/// the sup of the vertical mean is checked against mean_tol.
SpectralField vertical_integral_from_zero(const SpectralField& f, double mean_tol = 1e-8);

/// w = -integral_0^z div_h(v). Requires the barotropic constraint
/// (vertical mean of div_h v = 0). Odd output for even v, and
/// div_h v + dz w = 0 holds mode-wise.
SpectralField diagnose_w(const SpectralField& v1, const SpectralField& v2,
                         double constraint_tol = 1e-8);

/// p = p_gamma - integral_0^z rho, the pressure determined by dz p + rho = 0
/// up to the surface value p_gamma.
SpectralField diagnose_pressure(const SpectralField& rho, const SpectralField2& p_gamma);

/// L^p norm by uniform-grid quadrature, p in {2, 4}. Exact for band-limited
/// integrands when p = 2.
double lebesgue_norm(const Field& f, int p);

double h1_seminorm(const Field& f);
double h1_norm(const Field& f);

}  // namespace strata
