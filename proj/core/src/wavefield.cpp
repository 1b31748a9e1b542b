#include "qhj/wavefield.hpp"

#include <algorithm>
#include <cmath>

namespace qhj {

namespace {

constexpr double kNodeEpsilonFactor = 1e-12;

double checked_scale(const Superposition& sup, double t, double scale) {
    return scale > 0.0 ? scale : psi_scale(sup, t);
}

cplx checked_psi(const Superposition& sup, cplx z, double t, double scale) {
    const cplx psi = sup.value(z, t);
    if (std::abs(psi) <= kNodeEpsilonFactor * scale)
        throw PoleProximityError("field evaluation at or near a node");
    return psi;
}

}  // namespace

double psi_scale(const Superposition& sup, double t) {
    double lo = sup.packets().front().center(t);
    double hi = lo;
    double smax = 0.0;
    for (const auto& p : sup.packets()) {
        lo = std::min(lo, p.center(t));
        hi = std::max(hi, p.center(t));
        smax = std::max(smax, p.sigma(t));
    }
    lo -= 8.0 * smax;
    hi += 8.0 * smax;
    const int n = 257;
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        best = std::max(best, std::abs(sup.value(cplx(x, 0.0), t)));
    }
    return best;
}

double node_epsilon(const Superposition& sup, double t) {
    return kNodeEpsilonFactor * psi_scale(sup, t);
}

cplx qmf(const Superposition& sup, cplx z, double t, double scale) {
    scale = checked_scale(sup, t, scale);
    const cplx psi = checked_psi(sup, z, t, scale);
    const double hbar = sup.hbar();
    return (hbar / cplx(0.0, 1.0)) * sup.dz(z, t) / psi;
}

QmfDerivative qmf_dz(const Superposition& sup, cplx z, double t, double scale) {
    scale = checked_scale(sup, t, scale);
    const cplx psi = checked_psi(sup, z, t, scale);
    const cplx r1 = sup.dz(z, t) / psi;
    const cplx r2 = sup.d2z(z, t) / psi;
    const cplx dp = (sup.hbar() / cplx(0.0, 1.0)) * (r2 - r1 * r1);
    return {dp, 2.0 * dp.real(), 2.0 * dp.imag()};
}

cplx quantum_potential(const Superposition& sup, cplx z, double t, double scale) {
    const cplx dp = qmf_dz(sup, z, t, scale).dp;
    return sup.hbar() / (2.0 * sup.mass() * cplx(0.0, 1.0)) * dp;
}

Vec2 pvf(const Superposition& sup, cplx z, double t, double scale) {
    const cplx p = qmf(sup, z, t, scale);
    return {p.real(), -p.imag()};
}

ComplexAction complex_action(const Superposition& sup, cplx z, double t,
                             double scale) {
    scale = checked_scale(sup, t, scale);
    const cplx psi = checked_psi(sup, z, t, scale);
    const double hbar = sup.hbar();
    return {hbar * std::arg(psi), -hbar * std::log(std::abs(psi))};
}

FieldSample sample_field(const Superposition& sup, cplx z, double t,
                         double scale) {
    scale = checked_scale(sup, t, scale);
    FieldSample s{};
    s.z = z;
    s.t = t;
    s.psi = checked_psi(sup, z, t, scale);
    s.dpsi = sup.dz(z, t);
    const double hbar = sup.hbar();
    s.p = (hbar / cplx(0.0, 1.0)) * s.dpsi / s.psi;
    const cplx r1 = s.dpsi / s.psi;
    const cplx r2 = sup.d2z(z, t) / s.psi;
    s.dp = (hbar / cplx(0.0, 1.0)) * (r2 - r1 * r1);
    s.gamma_div = 2.0 * s.dp.real();
    s.omega_vort = 2.0 * s.dp.imag();
    s.q = hbar / (2.0 * sup.mass() * cplx(0.0, 1.0)) * s.dp;
    s.pvf = {s.p.real(), -s.p.imag()};
    s.s_real = hbar * std::arg(s.psi);
    s.s_imag = -hbar * std::log(std::abs(s.psi));
    return s;
}

}  // namespace qhj
