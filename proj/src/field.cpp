#include "strata/field.hpp"

namespace strata {

const char* to_string(Parity p) {
    switch (p) {
        case Parity::Even: return "even";
        case Parity::Odd: return "odd";
        default: return "none";
    }
}

Parity parity_from_string(const std::string& s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    if (s == "none") return Parity::None;
    throw InvalidInput("unknown parity token '" + s + "'");
}

namespace {

int wrap(int k, int n) { return k >= 0 ? k : k + n; }

Parity combine(Parity a, Parity b) { return a == b ? a : Parity::None; }

void require_same_grid(const Grid& a, const Grid& b) {
    if (!(a == b)) throw InvalidInput("field arithmetic: grid mismatch");
}

}  // namespace

Complex SpectralField::mode(int kx, int ky, int m) const {
    if (kx >= 0) return coeffs[grid.cidx(kx, wrap(ky, grid.ny), wrap(m, grid.nz))];
    return std::conj(coeffs[grid.cidx(-kx, wrap(-ky, grid.ny), wrap(-m, grid.nz))]);
}

void SpectralField::set_mode(int kx, int ky, int m, Complex c) {
    if (kx < 0) throw InvalidInput("set_mode: kx must be >= 0 (conjugate mirror is implicit)");
    coeffs[grid.cidx(kx, wrap(ky, grid.ny), wrap(m, grid.nz))] = c;
}

SpectralField& operator+=(SpectralField& a, const SpectralField& b) {
    require_same_grid(a.grid, b.grid);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] += b.coeffs[i];
    a.parity = combine(a.parity, b.parity);
    return a;
}

SpectralField& operator-=(SpectralField& a, const SpectralField& b) {
    require_same_grid(a.grid, b.grid);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] -= b.coeffs[i];
    a.parity = combine(a.parity, b.parity);
    return a;
}

SpectralField& operator*=(SpectralField& a, double s) {
    for (auto& c : a.coeffs) c *= s;
    return a;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double s, SpectralField a) { return a *= s; }

void axpy(SpectralField& a, double s, const SpectralField& b) {
    require_same_grid(a.grid, b.grid);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] += s * b.coeffs[i];
    a.parity = combine(a.parity, b.parity);
}

Field& operator+=(Field& a, const Field& b) {
    require_same_grid(a.grid, b.grid);
    for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] += b.values[i];
    a.parity = combine(a.parity, b.parity);
    return a;
}

Field& operator-=(Field& a, const Field& b) {
    require_same_grid(a.grid, b.grid);
    for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] -= b.values[i];
    a.parity = combine(a.parity, b.parity);
    return a;
}

Field& operator*=(Field& a, double s) {
    for (auto& v : a.values) v *= s;
    return a;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(double s, Field a) { return a *= s; }

}  // namespace strata
