#include "strata/state.hpp"

#include <algorithm>
#include <cmath>

#include "strata/field_ops.hpp"
#include "strata/spectral_ops.hpp"
#include "strata/transform.hpp"

namespace strata {

BoussinesqState::BoussinesqState(const Grid& g, double tau_)
    : grid(g),
      v1(g, Parity::Even),
      v2(g, Parity::Even),
      w(g, Parity::Odd),
      rho(g, Parity::Odd),
      p_tau(g, Parity::Even),
      tau(tau_) {
    if (!(tau > 0.0)) throw InvalidInput("BoussinesqState: tau must be positive");
}

PEState::PEState(const Grid& g)
    : grid(g),
      v1(g, Parity::Even),
      v2(g, Parity::Even),
      rho(g, Parity::Odd),
      w(g, Parity::Odd),
      p(g, Parity::Even),
      p_gamma(g) {}

PhysicalState::PhysicalState(const Grid& grid_, double tau_)
    : grid(grid_),
      tau(tau_),
      v1(grid_, Parity::Even),
      v2(grid_, Parity::Even),
      w(grid_, Parity::Odd),
      p(grid_, Parity::Even),
      rho(grid_, Parity::Odd) {
    if (!(tau > 0.0)) throw InvalidInput("PhysicalState: tau must be positive");
}

BoussinesqState scale_map(const PhysicalState& physical, double tau) {
    if (!(tau > 0.0)) throw InvalidInput("scale_map: tau must be positive");
    if (std::abs(physical.tau - tau) > 1e-14 * std::max(1.0, tau))
        throw InvalidInput("scale_map: tau does not match the state's domain aspect ratio");
    BoussinesqState s(physical.grid, tau);
    s.time = physical.time;
    s.v1 = forward(physical.v1);
    s.v2 = forward(physical.v2);
    Field w = physical.w;
    w *= 1.0 / tau;
    s.w = forward(w);
    Field rho = physical.rho;
    rho *= physical.g * tau;
    s.rho = forward(rho);
    s.p_tau = forward(physical.p);
    s.pressure_time = physical.time;
    return s;
}

PhysicalState unscale_map(const BoussinesqState& scaled) {
    PhysicalState p(scaled.grid, scaled.tau);
    p.time = scaled.time;
    p.v1 = inverse(scaled.v1);
    p.v2 = inverse(scaled.v2);
    p.w = inverse(scaled.w);
    p.w *= scaled.tau;
    p.rho = inverse(scaled.rho);
    p.rho *= 1.0 / (p.g * scaled.tau);
    p.p = inverse(scaled.p_tau);
    return p;
}

namespace {

// Squared weighted norms of the difference triple at derivative order p.
double triple_weighted_sq(const SpectralField& d1, const SpectralField& d2,
                          const SpectralField& dw, const SpectralField& dr, double tau, int p) {
    return weighted_norm_sq(d1, p) + weighted_norm_sq(d2, p) +
           tau * tau * weighted_norm_sq(dw, p) + weighted_norm_sq(dr, p);
}

}  // namespace

TripleNorms difference_norms(const BoussinesqState& b, const PEState& p) {
    if (!(b.grid == p.grid)) throw InvalidInput("difference_norms: grid mismatch");
    if (std::abs(b.time - p.time) > 1e-12 * std::max(1.0, std::abs(b.time)))
        throw InvalidInput("difference_norms: states are at different times");
    const SpectralField d1 = b.v1 - p.v1;
    const SpectralField d2 = b.v2 - p.v2;
    const SpectralField dw = b.w - p.w;
    const SpectralField dr = b.rho - p.rho;
    const double s0 = triple_weighted_sq(d1, d2, dw, dr, b.tau, 0);
    const double s1 = triple_weighted_sq(d1, d2, dw, dr, b.tau, 1);
    const double s2 = triple_weighted_sq(d1, d2, dw, dr, b.tau, 2);
    TripleNorms n;
    n.l2 = std::sqrt(s0);
    n.grad_l2 = std::sqrt(s1);
    n.h1 = std::sqrt(s0 + s1);
    n.grad_h1 = std::sqrt(s1 + s2);
    return n;
}

void DifferenceNorms::append(double t, const TripleNorms& n) {
    times.push_back(t);
    l2.push_back(n.l2);
    grad_l2.push_back(n.grad_l2);
    h1.push_back(n.h1);
    grad_h1.push_back(n.grad_h1);
}

namespace {

double sup_of(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, x);
    return m;
}

double trapezoid_sq(const std::vector<double>& t, const std::vector<double>& v) {
    double acc = 0.0;
    for (std::size_t i = 1; i < t.size(); ++i)
        acc += 0.5 * (v[i] * v[i] + v[i - 1] * v[i - 1]) * (t[i] - t[i - 1]);
    return acc;
}

}  // namespace

double DifferenceNorms::l2_sup() const { return sup_of(l2); }
double DifferenceNorms::h1_sup() const { return sup_of(h1); }
double DifferenceNorms::grad_l2_integral() const { return trapezoid_sq(times, grad_l2); }
double DifferenceNorms::grad_h1_integral() const { return trapezoid_sq(times, grad_h1); }

StateDiagnostics check_state(const BoussinesqState& s) {
    StateDiagnostics d;
    SpectralField div = derivative(s.v1, Axis::X) + derivative(s.v2, Axis::Y) +
                        derivative(s.w, Axis::Z);
    d.div_max = linf_norm(inverse(div));
    d.barotropic_defect = linf_norm(inverse(vertical_mean(
        derivative(s.v1, Axis::X) + derivative(s.v2, Axis::Y))));
    d.parity_defect = std::max({parity_defect(inverse(s.v1), Parity::Even),
                                parity_defect(inverse(s.v2), Parity::Even),
                                parity_defect(inverse(s.w), Parity::Odd),
                                parity_defect(inverse(s.rho), Parity::Odd)});
    d.mean_defect = std::max({std::abs(mean(s.v1)), std::abs(mean(s.v2)),
                              std::abs(mean(s.rho))});
    return d;
}

StateDiagnostics check_state(const PEState& s) {
    StateDiagnostics d;
    SpectralField div = derivative(s.v1, Axis::X) + derivative(s.v2, Axis::Y) +
                        derivative(s.w, Axis::Z);
    d.div_max = linf_norm(inverse(div));
    d.barotropic_defect = linf_norm(inverse(vertical_mean(
        derivative(s.v1, Axis::X) + derivative(s.v2, Axis::Y))));
    d.parity_defect = std::max({parity_defect(inverse(s.v1), Parity::Even),
                                parity_defect(inverse(s.v2), Parity::Even),
                                parity_defect(inverse(s.rho), Parity::Odd)});
    d.mean_defect = std::max({std::abs(mean(s.v1)), std::abs(mean(s.v2)),
                              std::abs(mean(s.rho))});
    return d;
}

}  // namespace strata
