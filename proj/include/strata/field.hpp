#pragma once

#include <complex>
#include <string>
#include <vector>

#include "strata/grid.hpp"

namespace strata {

using Complex = std::complex<double>;

/// Declared symmetry with respect to z -> -z.
enum class Parity { Even, Odd, None };

const char* to_string(Parity p);
Parity parity_from_string(const std::string& s);

/// Real samples on the grid, x fastest, then y, then z.
struct Field {
    Grid grid;
    std::vector<double> values;
    Parity parity = Parity::None;

    Field() = default;
    explicit Field(const Grid& g, Parity p = Parity::None)
        : grid(g), values(g.sample_count(), 0.0), parity(p) {}

    double& at(int ix, int iy, int iz) { return values[grid.ridx(ix, iy, iz)]; }
    double at(int ix, int iy, int iz) const { return values[grid.ridx(ix, iy, iz)]; }
};

/// Fourier coefficients of a real field in the basis
/// exp(i(kx x + ky y + pi m z)); kx >= 0 is stored, negative kx is implied by
/// conjugate symmetry. The forward transform divides by the sample count, so
/// coeffs[0] is the mean.
struct SpectralField {
    Grid grid;
    std::vector<Complex> coeffs;
    Parity parity = Parity::None;

    SpectralField() = default;
    explicit SpectralField(const Grid& g, Parity p = Parity::None)
        : grid(g), coeffs(g.coeff_count(), Complex(0.0, 0.0)), parity(p) {}

    Complex& at(int ix, int iy, int iz) { return coeffs[grid.cidx(ix, iy, iz)]; }
    Complex at(int ix, int iy, int iz) const { return coeffs[grid.cidx(ix, iy, iz)]; }

    /// Logical mode lookup by signed wavenumbers, including kx < 0.
    Complex mode(int kx, int ky, int m) const;
    /// Set the coefficient of one (kx>=0, ky, m) mode by signed wavenumbers.
    void set_mode(int kx, int ky, int m, Complex c);
};

/// z-independent horizontal field on the same grid (surface pressure etc.).
struct Field2 {
    Grid grid;
    std::vector<double> values;

    Field2() = default;
    explicit Field2(const Grid& g) : grid(g), values(g.horizontal_sample_count(), 0.0) {}

    double& at(int ix, int iy) { return values[grid.ridx2(ix, iy)]; }
    double at(int ix, int iy) const { return values[grid.ridx2(ix, iy)]; }
};

struct SpectralField2 {
    Grid grid;
    std::vector<Complex> coeffs;

    SpectralField2() = default;
    explicit SpectralField2(const Grid& g)
        : grid(g), coeffs(g.horizontal_coeff_count(), Complex(0.0, 0.0)) {}

    Complex& at(int ix, int iy) { return coeffs[grid.cidx2(ix, iy)]; }
    Complex at(int ix, int iy) const { return coeffs[grid.cidx2(ix, iy)]; }
};

// Value arithmetic. Grids must match; parities combine (equal stays, mixed
// degrades to None).
SpectralField& operator+=(SpectralField& a, const SpectralField& b);
SpectralField& operator-=(SpectralField& a, const SpectralField& b);
SpectralField& operator*=(SpectralField& a, double s);
SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double s, SpectralField a);

/// a += s * b
void axpy(SpectralField& a, double s, const SpectralField& b);

Field& operator+=(Field& a, const Field& b);
Field& operator-=(Field& a, const Field& b);
Field& operator*=(Field& a, double s);
Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(double s, Field a);

}  // namespace strata
