#include "strata/spectral_ops.hpp"

#include <algorithm>
#include <cmath>

#include "strata/transform.hpp"

namespace strata {

namespace {

Parity derivative_parity(Parity p, Axis axis, int order) {
    if (axis != Axis::Z || order % 2 == 0) return p;
    if (p == Parity::Even) return Parity::Odd;
    if (p == Parity::Odd) return Parity::Even;
    return Parity::None;
}

double solvability_tol(const std::vector<Complex>& coeffs) {
    double maxabs = 0.0;
    for (const auto& c : coeffs) maxabs = std::max(maxabs, std::abs(c));
    return 1e-10 * (1.0 + maxabs);
}

}  // namespace

SpectralField derivative(const SpectralField& f, Axis axis, int order) {
    if (order != 1 && order != 2) throw InvalidInput("derivative: order must be 1 or 2");
    const Grid& g = f.grid;
    SpectralField out(g, derivative_parity(f.parity, axis, order));
    for (int iz = 0; iz < g.nz; ++iz) {
        for (int iy = 0; iy < g.ny; ++iy) {
            for (int ix = 0; ix < g.ncx(); ++ix) {
                double k;
                bool nyq;
                switch (axis) {
                    case Axis::X: k = g.kx(ix); nyq = g.nyquist_x(ix); break;
                    case Axis::Y: k = g.ky(iy); nyq = g.nyquist_y(iy); break;
                    default: k = g.kz(iz); nyq = g.nyquist_z(iz); break;
                }
                const Complex c = f.coeffs[g.cidx(ix, iy, iz)];
                Complex r;
                if (order == 1)
                    r = nyq ? Complex(0, 0) : Complex(0, k) * c;
                else
                    r = -k * k * c;
                out.coeffs[g.cidx(ix, iy, iz)] = r;
            }
        }
    }
    return out;
}

SpectralField2 derivative(const SpectralField2& f, Axis axis, int order) {
    if (order != 1 && order != 2) throw InvalidInput("derivative: order must be 1 or 2");
    if (axis == Axis::Z) throw InvalidInput("derivative: horizontal fields have no z axis");
    const Grid& g = f.grid;
    SpectralField2 out(g);
    for (int iy = 0; iy < g.ny; ++iy) {
        for (int ix = 0; ix < g.ncx(); ++ix) {
            const double k = (axis == Axis::X) ? g.kx(ix) : g.ky(iy);
            const bool nyq = (axis == Axis::X) ? g.nyquist_x(ix) : g.nyquist_y(iy);
            const Complex c = f.coeffs[g.cidx2(ix, iy)];
            out.coeffs[g.cidx2(ix, iy)] =
                (order == 1) ? (nyq ? Complex(0, 0) : Complex(0, k) * c) : -k * k * c;
        }
    }
    return out;
}

void dealias_in_place(SpectralField& f) {
    const Grid& g = f.grid;
    for (int iz = 0; iz < g.nz; ++iz)
        for (int iy = 0; iy < g.ny; ++iy)
            for (int ix = 0; ix < g.ncx(); ++ix)
                if (!g.in_dealias_band(g.kx(ix), g.ky(iy), g.kz_index(iz)))
                    f.coeffs[g.cidx(ix, iy, iz)] = Complex(0, 0);
}

SpectralField dealias(SpectralField f) {
    dealias_in_place(f);
    return f;
}

Field parity_project(const Field& f, Parity parity) {
    if (parity == Parity::None) return f;
    const Grid& g = f.grid;
    Field out(g, parity);
    const double sign = (parity == Parity::Even) ? 1.0 : -1.0;
    for (int iz = 0; iz < g.nz; ++iz) {
        const int jz = g.mirror_z(iz);
        for (int iy = 0; iy < g.ny; ++iy)
            for (int ix = 0; ix < g.nx; ++ix)
                out.values[g.ridx(ix, iy, iz)] =
                    0.5 * (f.values[g.ridx(ix, iy, iz)] + sign * f.values[g.ridx(ix, iy, jz)]);
    }
    return out;
}

void parity_project_in_place(SpectralField& f, Parity parity) {
    if (parity == Parity::None) return;
    const Grid& g = f.grid;
    const std::size_t plane = g.coeff_count() / g.nz;
    const double sign = (parity == Parity::Even) ? 1.0 : -1.0;
    for (int iz = 0; iz <= g.nz / 2; ++iz) {
        const int jz = g.mirror_z(iz);
        Complex* a = f.coeffs.data() + std::size_t(iz) * plane;
        Complex* b = f.coeffs.data() + std::size_t(jz) * plane;
        if (iz == jz) {
            // m = 0 and the Nyquist plane are their own mirrors
            if (parity == Parity::Odd)
                for (std::size_t i = 0; i < plane; ++i) a[i] = Complex(0, 0);
            continue;
        }
        for (std::size_t i = 0; i < plane; ++i) {
            const Complex s = 0.5 * (a[i] + sign * b[i]);
            a[i] = s;
            b[i] = sign * s;
        }
    }
    f.parity = parity;
}

double parity_defect(const Field& f, Parity parity) {
    if (parity == Parity::None) return 0.0;
    const Grid& g = f.grid;
    const double sign = (parity == Parity::Even) ? 1.0 : -1.0;
    double defect = 0.0;
    for (int iz = 0; iz < g.nz; ++iz) {
        const int jz = g.mirror_z(iz);
        for (int iy = 0; iy < g.ny; ++iy)
            for (int ix = 0; ix < g.nx; ++ix)
                defect = std::max(defect,
                                  std::abs(f.values[g.ridx(ix, iy, iz)] -
                                           sign * f.values[g.ridx(ix, iy, jz)]) *
                                      0.5);
    }
    return defect;
}

double parity_defect(const SpectralField& f, Parity parity) {
    return parity_defect(inverse(f), parity);
}

SpectralField solve_anisotropic_poisson(const SpectralField& rhs, double tau) {
    if (!(tau > 0.0)) throw InvalidInput("anisotropic poisson: tau must be positive");
    const Grid& g = rhs.grid;
    if (std::abs(rhs.coeffs[0]) > solvability_tol(rhs.coeffs))
        throw InvalidInput("anisotropic poisson: rhs has nonzero mean (not solvable)");
    SpectralField out(g, rhs.parity);
    const double inv_tau2 = 1.0 / (tau * tau);
    for (int iz = 0; iz < g.nz; ++iz) {
        const double kz = g.kz(iz);
        for (int iy = 0; iy < g.ny; ++iy) {
            const double ky = g.ky(iy);
            for (int ix = 0; ix < g.ncx(); ++ix) {
                const double kx = g.kx(ix);
                const double denom = -(kx * kx + ky * ky) - kz * kz * inv_tau2;
                const std::size_t i = g.cidx(ix, iy, iz);
                out.coeffs[i] = (denom == 0.0) ? Complex(0, 0) : rhs.coeffs[i] / denom;
            }
        }
    }
    return out;
}

SpectralField2 solve_horizontal_poisson_zero_mean(const SpectralField2& rhs) {
    const Grid& g = rhs.grid;
    if (std::abs(rhs.coeffs[0]) > solvability_tol(rhs.coeffs))
        throw InvalidInput("horizontal poisson: rhs has nonzero mean (not solvable)");
    SpectralField2 out(g);
    for (int iy = 0; iy < g.ny; ++iy) {
        const double ky = g.ky(iy);
        for (int ix = 0; ix < g.ncx(); ++ix) {
            const double kx = g.kx(ix);
            const double denom = kx * kx + ky * ky;
            const std::size_t i = g.cidx2(ix, iy);
            out.coeffs[i] = (denom == 0.0) ? Complex(0, 0) : rhs.coeffs[i] / denom;
        }
    }
    return out;
}

Complex mean(const SpectralField& f) { return f.coeffs[0]; }
Complex mean(const SpectralField2& f) { return f.coeffs[0]; }

void remove_mean(SpectralField& f) { f.coeffs[0] = Complex(0, 0); }

SpectralField2 vertical_mean(const SpectralField& f) {
    const Grid& g = f.grid;
    SpectralField2 out(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.ncx(); ++ix)
            out.coeffs[g.cidx2(ix, iy)] = f.coeffs[g.cidx(ix, iy, 0)];
    return out;
}

SpectralField extend_z(const SpectralField2& f) {
    const Grid& g = f.grid;
    SpectralField out(g, Parity::Even);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.ncx(); ++ix)
            out.coeffs[g.cidx(ix, iy, 0)] = f.coeffs[g.cidx2(ix, iy)];
    return out;
}

double weighted_norm_sq(const SpectralField& f, int p) {
    const Grid& g = f.grid;
    double acc = 0.0;
    for (int iz = 0; iz < g.nz; ++iz) {
        const double kz = g.kz(iz);
        for (int iy = 0; iy < g.ny; ++iy) {
            const double ky = g.ky(iy);
            for (int ix = 0; ix < g.ncx(); ++ix) {
                const double kx = g.kx(ix);
                const double k2 = kx * kx + ky * ky + kz * kz;
                double wgt = (ix == 0 || g.nyquist_x(ix)) ? 1.0 : 2.0;  // conjugate pair
                double kfac = 1.0;
                for (int q = 0; q < p; ++q) kfac *= k2;
                acc += wgt * kfac * std::norm(f.coeffs[g.cidx(ix, iy, iz)]);
            }
        }
    }
    return Grid::volume() * acc;
}

double l2_norm(const SpectralField& f) { return std::sqrt(weighted_norm_sq(f, 0)); }
double h1_seminorm(const SpectralField& f) { return std::sqrt(weighted_norm_sq(f, 1)); }
double h1_norm(const SpectralField& f) {
    return std::sqrt(weighted_norm_sq(f, 0) + weighted_norm_sq(f, 1));
}

double linf_norm(const Field& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double linf_norm(const Field2& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace strata
