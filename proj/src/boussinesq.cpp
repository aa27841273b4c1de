#include "strata/boussinesq.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "strata/field_ops.hpp"
#include "strata/spectral_ops.hpp"
#include "strata/transform.hpp"

namespace strata {

PhysicalVelocity sample_velocity(const SpectralField& v1, const SpectralField& v2,
                                 const SpectralField& w) {
    PhysicalVelocity u;
    u.v1 = inverse(v1);
    u.v2 = inverse(v2);
    u.w = inverse(w);
    u.max_v1 = linf_norm(u.v1);
    u.max_v2 = linf_norm(u.v2);
    u.max_w = linf_norm(u.w);
    return u;
}

SpectralField advect(const PhysicalVelocity& u, const SpectralField& f) {
    const Grid& g = f.grid;
    Field fx = inverse(derivative(f, Axis::X));
    Field fy = inverse(derivative(f, Axis::Y));
    Field fz = inverse(derivative(f, Axis::Z));
    Field prod(g);
    for (std::size_t i = 0; i < prod.values.size(); ++i)
        prod.values[i] = u.v1.values[i] * fx.values[i] + u.v2.values[i] * fy.values[i] +
                         u.w.values[i] * fz.values[i];
    SpectralField out = forward(prod);
    dealias_in_place(out);
    // (v even, w odd) advecting an f of definite parity preserves that parity
    out.parity = f.parity;
    return out;
}

std::vector<double> diffusion_factor(const Grid& g, double t) {
    std::vector<double> factor(g.coeff_count());
    for (int iz = 0; iz < g.nz; ++iz) {
        const double kz = g.kz(iz);
        for (int iy = 0; iy < g.ny; ++iy) {
            const double ky = g.ky(iy);
            for (int ix = 0; ix < g.ncx(); ++ix) {
                const double kx = g.kx(ix);
                factor[g.cidx(ix, iy, iz)] = std::exp(-(kx * kx + ky * ky + kz * kz) * t);
            }
        }
    }
    return factor;
}

void apply_factor(SpectralField& f, const std::vector<double>& factor) {
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) f.coeffs[i] *= factor[i];
}

namespace {

// Modewise anisotropic Leray projection: removes (grad_h phi, tau^-2 dz phi)
// from (a1, a2, a3) so the divergence d_x a1 + d_y a2 + d_z a3 vanishes.
// Derivative conventions (Nyquist zeroing) match derivative(), so the
// projected divergence is zero for every mode the derivative sees.
SpectralField anisotropic_projection(SpectralField& a1, SpectralField& a2, SpectralField& a3,
                                     double tau) {
    if (!(tau > 0.0)) throw InvalidInput("projection: tau must be positive");
    const Grid& g = a1.grid;
    SpectralField phi(g, Parity::Even);
    const double inv_tau2 = 1.0 / (tau * tau);
    for (int iz = 0; iz < g.nz; ++iz) {
        const double kz = g.nyquist_z(iz) ? 0.0 : g.kz(iz);
        for (int iy = 0; iy < g.ny; ++iy) {
            const double ky = g.nyquist_y(iy) ? 0.0 : g.ky(iy);
            for (int ix = 0; ix < g.ncx(); ++ix) {
                const double kx = g.nyquist_x(ix) ? 0.0 : g.kx(ix);
                const double denom = -(kx * kx + ky * ky) - kz * kz * inv_tau2;
                if (denom == 0.0) continue;  // k = 0 carries no divergence
                const std::size_t i = g.cidx(ix, iy, iz);
                const Complex div = Complex(0, kx) * a1.coeffs[i] +
                                    Complex(0, ky) * a2.coeffs[i] +
                                    Complex(0, kz) * a3.coeffs[i];
                const Complex p = div / denom;
                phi.coeffs[i] = p;
                a1.coeffs[i] -= Complex(0, kx) * p;
                a2.coeffs[i] -= Complex(0, ky) * p;
                a3.coeffs[i] -= Complex(0, kz) * p * inv_tau2;
            }
        }
    }
    return phi;
}

struct RhsEval {
    BoussinesqTendency tendency;
    PhysicalVelocity u;
};

RhsEval rhs_impl(const BoussinesqState& s) {
    if (!(s.tau > 0.0)) throw InvalidInput("boussinesq rhs: tau must be positive");
    RhsEval e;
    e.u = sample_velocity(s.v1, s.v2, s.w);
    const double inv_tau2 = 1.0 / (s.tau * s.tau);
    e.tendency.v1 = -1.0 * advect(e.u, s.v1);
    e.tendency.v2 = -1.0 * advect(e.u, s.v2);
    e.tendency.w = -1.0 * advect(e.u, s.w);
    axpy(e.tendency.w, -inv_tau2, s.rho);
    e.tendency.rho = -1.0 * advect(e.u, s.rho);
    e.tendency.rho += s.w;
    return e;
}

void check_finite(const BoussinesqState& s, const BoussinesqConfig& cfg, double e0) {
    const double e = weighted_norm_sq(s.v1, 0) + weighted_norm_sq(s.v2, 0) +
                     weighted_norm_sq(s.rho, 0);
    if (!std::isfinite(e))
        throw NumericalFailure("boussinesq: solution blew up (NaN) at t = " +
                               std::to_string(s.time));
    if (e0 > 0.0 && e > cfg.blowup_factor * e0)
        throw NumericalFailure("boussinesq: energy grew by more than the blow-up factor at t = " +
                               std::to_string(s.time));
}

double cfl_bound(const PhysicalVelocity& u, const Grid& g, const BoussinesqConfig& cfg) {
    double bound = cfg.c_w * cfg.tau;
    if (u.max_v1 > 0.0) bound = std::min(bound, g.dx() / u.max_v1);
    if (u.max_v2 > 0.0) bound = std::min(bound, g.dy() / u.max_v2);
    if (u.max_w > 0.0) bound = std::min(bound, g.dz() / u.max_w);
    return bound;
}

void step_impl(BoussinesqState& s, double dt, const BoussinesqConfig& cfg) {
    RhsEval e1 = rhs_impl(s);
    const double bound = cfl_bound(e1.u, s.grid, cfg);
    if (dt > cfg.cfl_safety * bound + 1e-15)
        throw NumericalFailure("boussinesq: CFL violation at t = " + std::to_string(s.time) +
                               ", dt = " + std::to_string(dt) +
                               "; suggested dt <= " + std::to_string(cfg.cfl_safety * bound));
    anisotropic_projection(e1.tendency.v1, e1.tendency.v2, e1.tendency.w, s.tau);

    const std::vector<double> e_half = diffusion_factor(s.grid, 0.5 * dt);

    BoussinesqState mid = s;
    axpy(mid.v1, 0.5 * dt, e1.tendency.v1);
    axpy(mid.v2, 0.5 * dt, e1.tendency.v2);
    axpy(mid.w, 0.5 * dt, e1.tendency.w);
    axpy(mid.rho, 0.5 * dt, e1.tendency.rho);
    apply_factor(mid.v1, e_half);
    apply_factor(mid.v2, e_half);
    apply_factor(mid.w, e_half);
    apply_factor(mid.rho, e_half);
    mid.time += 0.5 * dt;

    RhsEval e2 = rhs_impl(mid);
    SpectralField phi =
        anisotropic_projection(e2.tendency.v1, e2.tendency.v2, e2.tendency.w, s.tau);

    auto update = [&](SpectralField& y, SpectralField& f) {
        apply_factor(y, e_half);
        apply_factor(y, e_half);
        apply_factor(f, e_half);
        axpy(y, dt, f);
    };
    update(s.v1, e2.tendency.v1);
    update(s.v2, e2.tendency.v2);
    update(s.w, e2.tendency.w);
    update(s.rho, e2.tendency.rho);
    s.time += dt;

    parity_project_in_place(s.v1, Parity::Even);
    parity_project_in_place(s.v2, Parity::Even);
    parity_project_in_place(s.w, Parity::Odd);
    parity_project_in_place(s.rho, Parity::Odd);
    remove_mean(s.v1);
    remove_mean(s.v2);

    s.p_tau = std::move(phi);
    s.pressure_time = s.time;
}

}  // namespace

BoussinesqTendency compute_rhs_boussinesq(const BoussinesqState& s) {
    return rhs_impl(s).tendency;
}

ProjectionResult project_incompressible(const SpectralField& v1, const SpectralField& v2,
                                        const SpectralField& w, double tau, double dt) {
    if (!(dt > 0.0)) throw InvalidInput("projection: dt must be positive");
    ProjectionResult r{v1, v2, w, SpectralField()};
    r.p_tau = anisotropic_projection(r.v1, r.v2, r.w, tau);
    r.p_tau *= 1.0 / dt;
    return r;
}

void diagnose_boussinesq_pressure(BoussinesqState& s) {
    BoussinesqTendency t = compute_rhs_boussinesq(s);
    s.p_tau = anisotropic_projection(t.v1, t.v2, t.w, s.tau);
    s.pressure_time = s.time;
}

void step_boussinesq(BoussinesqState& s, double dt, const BoussinesqConfig& cfg) {
    if (!(dt > 0.0)) throw InvalidInput("step: dt must be positive");
    step_impl(s, dt, cfg);
}

BoussinesqState make_boussinesq_state(const Grid& g, double tau, const Field& v1_0,
                                      const Field& v2_0, const Field& rho_0) {
    const double ingest_tol = 1e-8;
    auto check_parity = [&](const Field& f, Parity p, const char* name) {
        const double defect = parity_defect(f, p);
        if (defect > ingest_tol)
            throw InvalidInput(std::string("boussinesq initial data: ") + name + " violates " +
                               to_string(p) + " parity (defect " + std::to_string(defect) + ")");
    };
    check_parity(v1_0, Parity::Even, "v1");
    check_parity(v2_0, Parity::Even, "v2");
    check_parity(rho_0, Parity::Odd, "rho");

    BoussinesqState s(g, tau);
    s.v1 = forward(v1_0);
    s.v2 = forward(v2_0);
    s.rho = forward(rho_0);
    parity_project_in_place(s.v1, Parity::Even);
    parity_project_in_place(s.v2, Parity::Even);
    parity_project_in_place(s.rho, Parity::Odd);
    dealias_in_place(s.v1);
    dealias_in_place(s.v2);
    dealias_in_place(s.rho);

    if (std::abs(mean(s.v1)) > ingest_tol || std::abs(mean(s.v2)) > ingest_tol)
        throw InvalidInput("boussinesq initial data: velocity mean constraint violated");
    remove_mean(s.v1);
    remove_mean(s.v2);

    s.w = diagnose_w(s.v1, s.v2, ingest_tol);  // throws if barotropic constraint fails
    diagnose_boussinesq_pressure(s);
    return s;
}

RecordDiag boussinesq_record_diag(BoussinesqState& s) {
    RecordDiag d;
    d.time = s.time;
    const double t2 = s.tau * s.tau;
    d.energy = 0.5 * (weighted_norm_sq(s.v1, 0) + weighted_norm_sq(s.v2, 0) +
                      t2 * weighted_norm_sq(s.w, 0) + weighted_norm_sq(s.rho, 0));
    d.dissipation = weighted_norm_sq(s.v1, 1) + weighted_norm_sq(s.v2, 1) +
                    t2 * weighted_norm_sq(s.w, 1) + weighted_norm_sq(s.rho, 1);
    StateDiagnostics sd = check_state(s);
    d.div_max = sd.div_max;
    d.parity_defect = sd.parity_defect;
    d.mean_defect = sd.mean_defect;
    if (s.pressure_time != s.time) diagnose_boussinesq_pressure(s);
    d.hydro_residual = l2_norm(derivative(s.p_tau, Axis::Z) + s.rho);
    return d;
}

double clip_dt_to_interval(double interval, double dt_cap) {
    if (!(interval > 0.0) || !(dt_cap > 0.0))
        throw InvalidInput("record interval and dt must be positive");
    const int steps = std::max(1, int(std::ceil(interval / dt_cap - 1e-12)));
    return interval / steps;
}

BoussinesqTrajectory run_boussinesq(const BoussinesqConfig& cfg, BoussinesqState state) {
    if (!(cfg.t_end >= 0.0)) throw InvalidInput("run: t_end must be nonnegative");
    BoussinesqTrajectory traj;
    traj.config = cfg;

    double interval = cfg.record_interval;
    if (interval <= 0.0) {
        const double base_dt = cfg.dt > 0.0 ? cfg.dt : cfg.cfl_safety * cfg.c_w * cfg.tau;
        interval = base_dt * std::max(1, cfg.record_every);
    }
    interval = std::min(interval, cfg.t_end > 0.0 ? cfg.t_end : interval);

    double dt_cap = cfg.cfl_safety * cfg.c_w * cfg.tau;
    if (cfg.dt > 0.0) dt_cap = std::min(dt_cap, cfg.dt);
    const double dt = clip_dt_to_interval(interval, dt_cap);
    traj.dt = dt;

    const double e0 = 2.0 * boussinesq_record_diag(state).energy + 1e-300;

    auto record = [&](BoussinesqState& s) {
        BoussinesqRecord r;
        r.diag = boussinesq_record_diag(s);
        if (cfg.keep_fields) r.state = s;
        traj.records.push_back(std::move(r));
    };
    record(state);
    if (cfg.t_end <= 0.0) return traj;

    const int n_records = std::max(1, int(std::llround(cfg.t_end / interval)));
    const double t0 = state.time;
    for (int j = 1; j <= n_records; ++j) {
        const double target = t0 + std::min(j * interval, cfg.t_end);
        while (state.time < target - 1e-12) {
            const double step = std::min(dt, target - state.time);
            step_impl(state, step, cfg);
            check_finite(state, cfg, e0);
        }
        state.time = target;  // absorb roundoff in the time accumulator
        record(state);
    }
    return traj;
}

BoussinesqTrajectory run_boussinesq(const BoussinesqConfig& cfg, const Field& v1_0,
                                    const Field& v2_0, const Field& rho_0) {
    Grid g = v1_0.grid;
    return run_boussinesq(cfg, make_boussinesq_state(g, cfg.tau, v1_0, v2_0, rho_0));
}

}  // namespace strata
