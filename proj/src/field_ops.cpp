#include "strata/field_ops.hpp"

#include <cmath>

#include "strata/spectral_ops.hpp"
#include "strata/transform.hpp"

namespace strata {

namespace {

Parity integral_parity(Parity p) {
    if (p == Parity::Even) return Parity::Odd;
    if (p == Parity::Odd) return Parity::Even;
    return Parity::None;
}

// Sup over (x,y) of the vertical mean of f (the m = 0 plane).
double vertical_mean_sup(const SpectralField& f) {
    return linf_norm(inverse(vertical_mean(f)));
}

}  // namespace

SpectralField vertical_integral_from_zero(const SpectralField& f, double mean_tol) {
    const Grid& g = f.grid;
    const double mean_sup = vertical_mean_sup(f);
    if (mean_sup > mean_tol)
        throw InvalidInput("vertical integral: integrand has nonzero vertical mean (sup " +
                           std::to_string(mean_sup) + "), antiderivative not periodic");
    SpectralField out(g, integral_parity(f.parity));
    const std::size_t plane = g.coeff_count() / g.nz;
    for (int iy = 0; iy < g.ny; ++iy) {
        for (int ix = 0; ix < g.ncx(); ++ix) {
            const std::size_t col = g.cidx(ix, iy, 0);
            Complex zero_mode(0, 0);
            for (int iz = 1; iz < g.nz; ++iz) {
                if (g.nyquist_z(iz)) {
                    out.coeffs[col + std::size_t(iz) * plane] = Complex(0, 0);
                    continue;
                }
                const Complex v = f.coeffs[col + std::size_t(iz) * plane] / Complex(0, g.kz(iz));
                out.coeffs[col + std::size_t(iz) * plane] = v;
                zero_mode -= v;  // pins F = 0 on the z = 0 plane
            }
            out.coeffs[col] = zero_mode;
        }
    }
    return out;
}

SpectralField diagnose_w(const SpectralField& v1, const SpectralField& v2,
                         double constraint_tol) {
    if (!(v1.grid == v2.grid)) throw InvalidInput("diagnose_w: grid mismatch");
    SpectralField div_h = derivative(v1, Axis::X) + derivative(v2, Axis::Y);
    const double defect = linf_norm(inverse(vertical_mean(div_h)));
    if (defect > constraint_tol)
        throw InvalidInput("diagnose_w: barotropic constraint violated (sup " +
                           std::to_string(defect) + ")");
    SpectralField w = vertical_integral_from_zero(div_h, constraint_tol);
    w *= -1.0;
    if (v1.parity == Parity::Even && v2.parity == Parity::Even) w.parity = Parity::Odd;
    return w;
}

SpectralField diagnose_pressure(const SpectralField& rho, const SpectralField2& p_gamma) {
    if (!(rho.grid == p_gamma.grid)) throw InvalidInput("diagnose_pressure: grid mismatch");
    if (rho.parity != Parity::Odd)
        throw InvalidInput("diagnose_pressure: rho must have odd parity");
    SpectralField p = extend_z(p_gamma) - vertical_integral_from_zero(rho);
    p.parity = Parity::Even;
    return p;
}

double lebesgue_norm(const Field& f, int p) {
    if (p != 2 && p != 4) throw InvalidInput("lebesgue_norm: p must be 2 or 4");
    const double dv = f.grid.cell_volume();
    double acc = 0.0;
    for (double v : f.values) {
        const double v2 = v * v;
        acc += (p == 2) ? v2 : v2 * v2;
    }
    return std::pow(acc * dv, 1.0 / p);
}

double h1_seminorm(const Field& f) { return h1_seminorm(forward(f)); }
double h1_norm(const Field& f) { return h1_norm(forward(f)); }

}  // namespace strata
