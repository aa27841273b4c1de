#pragma once

#include <optional>
#include <vector>

#include "strata/state.hpp"

namespace strata {

/// Physical-space velocity samples shared across advection evaluations.
struct PhysicalVelocity {
    Field v1, v2, w;
    double max_v1 = 0.0, max_v2 = 0.0, max_w = 0.0;
};

PhysicalVelocity sample_velocity(const SpectralField& v1, const SpectralField& v2,
                                 const SpectralField& w);

/// Dealiased pseudo-spectral advection (u . grad) f in convective form.
SpectralField advect(const PhysicalVelocity& u, const SpectralField& f);

/// exp(-|k|^2 t) per stored mode, the exact heat propagator used as
/// integrating factor for the unit-coefficient Laplacian.
std::vector<double> diffusion_factor(const Grid& g, double t);
void apply_factor(SpectralField& f, const std::vector<double>& factor);

struct BoussinesqConfig {
    double tau = 1.0;
    double dt = 0.0;               // <= 0: derive from the CFL policy
    double t_end = 0.25;
    double record_interval = 0.0;  // <= 0: derive from record_every
    int record_every = 1;          // steps between records when dt is fixed
    double cfl_safety = 0.8;       // fraction of the stability bounds dt may use
    double c_w = 0.5;              // buoyancy-oscillation cap: dt <= c_w * tau
    bool keep_fields = true;       // store the spectral state at each record
    double blowup_factor = 1e6;    // energy growth beyond this aborts the run
};

/// Explicit tendency of the scaled Boussinesq system before the
/// incompressibility projection: advection plus buoyancy; diffusion is
/// excluded (handled exactly by the integrating factor). All quadratic
/// products are dealiased.
struct BoussinesqTendency {
    SpectralField v1, v2, w, rho;
};

BoussinesqTendency compute_rhs_boussinesq(const BoussinesqState& s);

/// Remove the anisotropic-gradient part of a tentative velocity so that
/// div_h v + dz w = 0, and return the pressure of the projection:
/// (Lap_h + tau^-2 dzz) p = (div defect)/dt, v -= dt grad_h p,
/// w -= (dt/tau^2) dz p. p has zero mean.
struct ProjectionResult {
    SpectralField v1, v2, w;
    SpectralField p_tau;
};

ProjectionResult project_incompressible(const SpectralField& v1, const SpectralField& v2,
                                        const SpectralField& w, double tau, double dt = 1.0);

/// Projection pressure consistent with the instantaneous state (the pressure
/// of the continuous-time system evaluated at s). Stamps pressure_time.
void diagnose_boussinesq_pressure(BoussinesqState& s);

/// One step of the two-stage (midpoint) scheme with exact integrating-factor
/// diffusion; the tendency is projected at each stage and parity is
/// re-imposed at the end. Throws NumericalFailure on CFL violation or NaN.
void step_boussinesq(BoussinesqState& s, double dt, const BoussinesqConfig& cfg);

/// Build a valid state from physical initial data: validates parity, mean and
/// barotropic constraints (tolerance 1e-8), projects the residuals away, and
/// reconstructs w from v.
BoussinesqState make_boussinesq_state(const Grid& g, double tau, const Field& v1_0,
                                      const Field& v2_0, const Field& rho_0);

struct BoussinesqRecord {
    RecordDiag diag;
    std::optional<BoussinesqState> state;
};

struct BoussinesqTrajectory {
    BoussinesqConfig config;
    double dt = 0.0;  // substep actually used
    std::vector<BoussinesqRecord> records;
};

RecordDiag boussinesq_record_diag(BoussinesqState& s);

BoussinesqTrajectory run_boussinesq(const BoussinesqConfig& cfg, const Field& v1_0,
                                    const Field& v2_0, const Field& rho_0);
BoussinesqTrajectory run_boussinesq(const BoussinesqConfig& cfg, BoussinesqState state);

/// Substep choice shared by the drivers: largest dt <= cap that divides the
/// record interval into an integer number of steps.
double clip_dt_to_interval(double interval, double dt_cap);

}  // namespace strata
