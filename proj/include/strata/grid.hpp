#pragma once

#include <cstddef>

#include "strata/errors.hpp"

namespace strata {

inline constexpr double kPi = 3.14159265358979323846;

/// Uniform periodic tensor grid on [0,2pi) x [0,2pi) x [-1,1).
///
/// Horizontal wavenumbers are integers (period 2pi); vertical wavenumbers are
/// integer multiples of pi (period 2). Sample counts must be even and >= 4 so
/// that the z-grid maps to itself under z -> -z and the usual FFT mode
/// ordering applies.
struct Grid {
    int nx = 0, ny = 0, nz = 0;

    Grid() = default;
    Grid(int nx_, int ny_, int nz_);
    static Grid cubic(int n) { return Grid(n, n, n); }

    static constexpr double Lx = 2.0 * kPi;
    static constexpr double Ly = 2.0 * kPi;
    static constexpr double Lz = 2.0;

    std::size_t sample_count() const {
        return std::size_t(nx) * std::size_t(ny) * std::size_t(nz);
    }
    /// Stored x-modes of the real-to-complex transform (kx in [0, nx/2]).
    int ncx() const { return nx / 2 + 1; }
    std::size_t coeff_count() const {
        return std::size_t(ncx()) * std::size_t(ny) * std::size_t(nz);
    }
    std::size_t horizontal_sample_count() const { return std::size_t(nx) * ny; }
    std::size_t horizontal_coeff_count() const { return std::size_t(ncx()) * ny; }

    double x(int i) const { return Lx * i / nx; }
    double y(int j) const { return Ly * j / ny; }
    double z(int k) const { return -1.0 + Lz * k / nz; }

    double dx() const { return Lx / nx; }
    double dy() const { return Ly / ny; }
    double dz() const { return Lz / nz; }
    double cell_volume() const { return dx() * dy() * dz(); }
    static constexpr double volume() { return Lx * Ly * Lz; }

    /// Signed integer frequencies in standard FFT order.
    int kx(int ix) const { return ix; }  // stored range is already [0, nx/2]
    int ky(int iy) const { return iy <= ny / 2 ? iy : iy - ny; }
    int kz_index(int iz) const { return iz <= nz / 2 ? iz : iz - nz; }
    double kz(int iz) const { return kPi * kz_index(iz); }

    bool nyquist_x(int ix) const { return ix == nx / 2; }
    bool nyquist_y(int iy) const { return 2 * iy == ny; }
    bool nyquist_z(int iz) const { return 2 * iz == nz; }

    /// 2/3-rule band: a mode survives dealiasing iff 3|k| <= n on every axis.
    bool in_dealias_band(int kx_, int ky_, int m) const {
        auto ok = [](int k, int n) { return 3 * (k < 0 ? -k : k) <= n; };
        return ok(kx_, nx) && ok(ky_, ny) && ok(m, nz);
    }

    /// Index of the grid point at -z(iz), using periodicity.
    int mirror_z(int iz) const { return iz == 0 ? 0 : nz - iz; }

    std::size_t ridx(int ix, int iy, int iz) const {
        return (std::size_t(iz) * ny + iy) * nx + ix;
    }
    std::size_t cidx(int ix, int iy, int iz) const {
        return (std::size_t(iz) * ny + iy) * ncx() + ix;
    }
    std::size_t ridx2(int ix, int iy) const { return std::size_t(iy) * nx + ix; }
    std::size_t cidx2(int ix, int iy) const { return std::size_t(iy) * ncx() + ix; }

    bool operator==(const Grid&) const = default;
};

}  // namespace strata
