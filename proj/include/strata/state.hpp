#pragma once

#include <vector>

#include "strata/field.hpp"

namespace strata {

/// Prognostic state of the scaled Boussinesq system: horizontal velocity
/// (even in z), vertical velocity and density perturbation (odd in z), plus
/// the aspect ratio tau. The pressure is diagnostic, recovered from the
/// incompressibility projection, and stamped with the time it was computed
/// for.
struct BoussinesqState {
    Grid grid;
    SpectralField v1, v2, w, rho;
    SpectralField p_tau;
    double tau = 1.0;
    double time = 0.0;
    double pressure_time = -1.0;

    BoussinesqState() = default;
    BoussinesqState(const Grid& g, double tau_);
};

/// Prognostic state of the stratified primitive equations: (v, rho) evolve,
/// while w, p and the surface pressure p_gamma are reconstructed.
struct PEState {
    Grid grid;
    SpectralField v1, v2, rho;
    SpectralField w, p;
    SpectralField2 p_gamma;
    double time = 0.0;

    PEState() = default;
    explicit PEState(const Grid& g);
};

/// Dimensional state on the thin domain of aspect ratio tau, carrying the
/// perturbation fields about the affine background profile
/// rho_bar(z) = 1 - N^2 z / g with buoyancy frequency N = 1/tau.
struct PhysicalState {
    Grid grid;
    double tau = 1.0;
    double g = 1.0;
    double rho_b = 1.0;
    double time = 0.0;
    Field v1, v2, w, p, rho;

    PhysicalState() = default;
    PhysicalState(const Grid& grid_, double tau_);

    double buoyancy_frequency() const { return 1.0 / tau; }
    double rho_bar(double z) const { return 1.0 - buoyancy_frequency() * buoyancy_frequency() * z / g; }
    /// Background pressure from d p_bar / dz = -g rho_bar, with p_bar(0) = 0.
    double p_bar(double z) const {
        const double n2 = buoyancy_frequency() * buoyancy_frequency();
        return -g * z + 0.5 * n2 * z * z;
    }
};

/// Rescale a physical state on the thin domain to the unit-aspect variables:
/// v_tau = v, w_tau = w / tau, p_tau = p, rho_tau = (g tau) rho, with samples
/// reinterpreted from z to tau z (same array, no interpolation).
BoussinesqState scale_map(const PhysicalState& physical, double tau);
PhysicalState unscale_map(const BoussinesqState& scaled);

/// Weighted difference norms of (V, tau W, Gamma) at one shared record time.
struct TripleNorms {
    double l2 = 0.0;       // ||(V, tau W, Gamma)||_2
    double grad_l2 = 0.0;  // ||grad(V, tau W, Gamma)||_2
    double h1 = 0.0;
    double grad_h1 = 0.0;
};

TripleNorms difference_norms(const BoussinesqState& b, const PEState& p);

/// Per-record series of the difference norms with the aggregates the
/// convergence estimates bound: sup over time and trapezoidal time integrals
/// of the squared gradient norms.
struct DifferenceNorms {
    std::vector<double> times;
    std::vector<double> l2, grad_l2, h1, grad_h1;

    void append(double t, const TripleNorms& n);
    double l2_sup() const;
    double h1_sup() const;
    double grad_l2_integral() const;  // integral of grad_l2^2 dt
    double grad_h1_integral() const;  // integral of grad_h1^2 dt
};

/// Structural defect measurements shared by both solvers.
struct StateDiagnostics {
    double div_max = 0.0;         // 3D divergence (Boussinesq) or diagnosed-w identity (PE)
    double barotropic_defect = 0.0;
    double parity_defect = 0.0;
    double mean_defect = 0.0;
};

StateDiagnostics check_state(const BoussinesqState& s);
StateDiagnostics check_state(const PEState& s);

/// One row of the per-record CSV emitted by both solvers.
struct RecordDiag {
    double time = 0.0;
    double energy = 0.0;
    double dissipation = 0.0;
    double div_max = 0.0;
    double parity_defect = 0.0;
    double mean_defect = 0.0;
    double hydro_residual = 0.0;  // identically 0 for the primitive equations
};

}  // namespace strata
