#include "qhj/packet.hpp"

#include <cmath>
#include <numbers>

namespace qhj {

cplx GaussianPacket::value(cplx z, double t) const {
    const cplx st = sigma_tilde(t);
    const double xt = center(t);
    const double p = momentum();
    // principal quarter power; real positive at t = 0
    const cplx log_a = -0.25 * std::log(2.0 * std::numbers::pi * st * st);
    const cplx dz = z - xt;
    const cplx expo = -dz * dz / (4.0 * st * sigma0) +
                      cplx(0.0, 1.0) * (p * dz + energy() * t) / hbar;
    return std::exp(log_a + expo);
}

cplx GaussianPacket::log_derivative(cplx z, double t) const {
    const cplx st = sigma_tilde(t);
    return -(z - center(t)) / (2.0 * st * sigma0) +
           cplx(0.0, momentum() / hbar);
}

cplx GaussianPacket::second_log_term(cplx z, double t) const {
    const cplx d = log_derivative(z, t);
    return d * d - 1.0 / (2.0 * sigma_tilde(t) * sigma0);
}

Superposition::Superposition(std::vector<GaussianPacket> packets)
    : packets_(std::move(packets)) {
    if (packets_.empty())
        throw ScenarioShapeError("superposition needs at least one packet");
    for (const auto& p : packets_) {
        if (!(p.sigma0 > 0.0) || !(p.mass > 0.0) || !(p.hbar > 0.0))
            throw ScenarioShapeError(
                "packet requires sigma0 > 0, mass > 0, hbar > 0");
        if (p.mass != packets_.front().mass || p.hbar != packets_.front().hbar)
            throw ScenarioShapeError("packets must share mass and hbar");
    }
}

cplx Superposition::value(cplx z, double t) const {
    cplx sum = 0.0;
    for (const auto& p : packets_) sum += p.value(z, t);
    return sum;
}

cplx Superposition::dz(cplx z, double t) const {
    cplx sum = 0.0;
    for (const auto& p : packets_) sum += p.value(z, t) * p.log_derivative(z, t);
    return sum;
}

cplx Superposition::d2z(cplx z, double t) const {
    cplx sum = 0.0;
    for (const auto& p : packets_) sum += p.value(z, t) * p.second_log_term(z, t);
    return sum;
}

bool Superposition::is_symmetric_pair(double tol) const {
    if (packets_.size() != 2) return false;
    const auto& a = packets_[0];
    const auto& b = packets_[1];
    return std::abs(a.x0 + b.x0) <= tol && std::abs(a.vp + b.vp) <= tol &&
           std::abs(a.sigma0 - b.sigma0) <= tol && a.x0 != 0.0 && a.vp != 0.0;
}

}  // namespace qhj
