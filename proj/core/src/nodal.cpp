#include "qhj/nodal.hpp"

#include <cmath>
#include <numbers>

namespace qhj {

using std::numbers::pi;

SymmetricScenario::SymmetricScenario(const Superposition& sup) : sup_(sup) {
    if (!sup.is_symmetric_pair(1e-10))
        throw ScenarioShapeError(
            "closed-form nodal dynamics requires the symmetric two-packet "
            "pair x0_R = -x0_L, vp_R = -vp_L, equal sigma0");
    const auto& a = sup.packets()[0];
    const auto& b = sup.packets()[1];
    const auto& left = a.x0 < 0.0 ? a : b;
    x0_ = -left.x0;
    vp_ = left.vp;
    sigma0_ = left.sigma0;
}

double SymmetricScenario::wavelength() const {
    return 2.0 * pi * hbar() / (mass() * vp_);
}

cplx SymmetricScenario::node_position(int n, double t) const {
    const double tau_ = tau();
    const double denom = x0_ * x0_ + vp_ * vp_ * tau_ * tau_;
    const double k = n + 0.5;
    const double x = pi * k * (hbar() / mass()) * (x0_ * t + vp_ * tau_ * tau_) / denom;
    const double y = pi * k * 2.0 * sigma0_ * sigma0_ * (vp_ * t - x0_) / denom;
    return {x, y};
}

cplx SymmetricScenario::stagnation_position(int n, double t) const {
    const double tau_ = tau();
    const double denom = x0_ * x0_ + vp_ * vp_ * tau_ * tau_;
    const double x = pi * n * (hbar() / mass()) * (x0_ * t + vp_ * tau_ * tau_) / denom;
    const double y = pi * n * 2.0 * sigma0_ * sigma0_ * (vp_ * t - x0_) / denom;
    return {x, y};
}

double SymmetricScenario::nodal_angle(double t) const {
    const double tau_ = tau();
    return std::atan2(tau_ * (vp_ * t - x0_), x0_ * t + vp_ * tau_ * tau_);
}

double SymmetricScenario::theta_inf() const {
    return std::atan2(vp_ * tau(), x0_);
}

double SymmetricScenario::nodal_rate(double t) const {
    const double st = sup_.packets().front().sigma(t);
    return hbar() / (2.0 * mass() * st * st);
}

double SymmetricScenario::node_spacing(double t) const {
    const double ps = hbar() / (2.0 * sigma0_);
    const double st = sup_.packets().front().sigma(t);
    const double tau_ = tau();
    return pi * hbar() * st /
           (ps * std::sqrt(x0_ * x0_ + vp_ * vp_ * tau_ * tau_));
}

NodalTrajectoryLine SymmetricScenario::nodal_trajectory(int n) const {
    if (x0_ == 0.0)
        throw DegenerateScenarioError(
            "x0 = 0: nodal trajectories are vertical, slope undefined");
    return {vp_ * tau() / x0_, -(2.0 * n + 1.0) * pi * sigma0_ * sigma0_ / x0_,
            n};
}

NodalLineState SymmetricScenario::line_state(double t, int n_min,
                                             int n_max) const {
    NodalLineState s;
    s.t = t;
    s.theta = nodal_angle(t);
    s.omega_rate = nodal_rate(t);
    s.spacing = node_spacing(t);
    for (int n = n_min; n <= n_max; ++n)
        s.node_positions.emplace_back(n, node_position(n, t));
    return s;
}

namespace {

// spacing estimate used to damp Newton steps near dense nodal strings
double basin_scale(const Superposition& sup, double t) {
    if (sup.is_symmetric_pair(1e-10))
        return SymmetricScenario(sup).node_spacing(t);
    return 1.0;
}

}  // namespace

CharacteristicPoint refine_node(const Superposition& sup, cplx seed, double t) {
    const double spacing = basin_scale(sup, t);
    cplx z = seed;
    for (int it = 0; it < 50; ++it) {
        const cplx psi = sup.value(z, t);
        const cplx dpsi = sup.dz(z, t);
        if (dpsi == cplx(0.0))
            throw NoConvergenceError("node refinement hit Psi' = 0");
        cplx step = psi / dpsi;
        if (std::abs(step) > 10.0 * spacing)
            throw NoConvergenceError("node refinement diverged");
        if (std::abs(step) > 0.5 * spacing) step *= 0.5;
        z -= step;
        // position-based criterion: |Psi| alone is tiny everywhere in the
        // Gaussian tails and would accept bogus far-field seeds
        if (std::abs(step) <= 1e-13 * std::max(1.0, std::abs(z)))
            return {PointKind::node, z, t, 1, std::abs(sup.value(z, t))};
    }
    throw NoConvergenceError("node refinement: no convergence in 50 iterations");
}

CharacteristicPoint refine_stagnation(const Superposition& sup, cplx seed,
                                      double t) {
    const double spacing = basin_scale(sup, t);
    cplx z = seed;
    for (int it = 0; it < 50; ++it) {
        const cplx dpsi = sup.dz(z, t);
        const cplx d2psi = sup.d2z(z, t);
        if (d2psi == cplx(0.0))
            throw NoConvergenceError("stagnation refinement hit Psi'' = 0");
        cplx step = dpsi / d2psi;
        if (std::abs(step) > 10.0 * spacing)
            throw NoConvergenceError("stagnation refinement diverged");
        if (std::abs(step) > 0.5 * spacing) step *= 0.5;
        z -= step;
        if (std::abs(step) <= 1e-13 * std::max(1.0, std::abs(z))) {
            if (std::abs(sup.value(z, t)) <= node_epsilon(sup, t))
                throw ConvergedToNodeError(
                    "stagnation refinement converged to a node");
            return {PointKind::stagnation, z, t, 1, std::abs(sup.dz(z, t))};
        }
    }
    throw NoConvergenceError(
        "stagnation refinement: no convergence in 50 iterations");
}

Circulation circulation(const Superposition& sup, const ContourSpec& contour,
                        double t) {
    const double eps = node_epsilon(sup, t);
    const double scale = psi_scale(sup, t);
    const int n = contour.n_points;
    cplx integral = 0.0;
    for (int j = 0; j < n; ++j) {
        const double th = 2.0 * pi * j / n;
        const cplx e = std::polar(1.0, th);
        const cplx z = contour.center + contour.radius * e;
        if (std::abs(sup.value(z, t)) <= eps)
            throw ContourThroughPoleError(
                "quadrature point too close to a node");
        const cplx p = qmf(sup, z, t, scale);
        // dz = i r e^{i theta} dtheta; trapezoid == rectangle for periodic
        integral += p * cplx(0.0, 1.0) * contour.radius * e;
    }
    integral *= 2.0 * pi / n;
    return {integral.real(), integral.imag()};
}

std::pair<double, double> pole_local_div_vort(int n_order, cplx dz,
                                              double hbar) {
    if (dz == cplx(0.0))
        throw Error("pole-local divergence/vorticity undefined at dz = 0");
    const double x = dz.real();
    const double y = dz.imag();
    const double r2 = x * x + y * y;
    const double gamma = n_order * hbar * 4.0 * x * y / (r2 * r2);
    const double omega = n_order * hbar * 2.0 * (x * x - y * y) / (r2 * r2);
    return {gamma, omega};
}

}  // namespace qhj
