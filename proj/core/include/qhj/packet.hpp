#ifndef QHJ_PACKET_HPP
#define QHJ_PACKET_HPP

#include <complex>
#include <vector>

#include "qhj/errors.hpp"

namespace qhj {

using cplx = std::complex<double>;

/// One free Gaussian wave-packet component, analytically continued to the
/// complex plane. Atomic units; hbar and mass kept as fields so scaling
/// relations stay testable.
struct GaussianPacket {
    double x0 = 0.0;      ///< initial centroid position
    double vp = 0.0;      ///< propagation velocity
    double sigma0 = 1.0;  ///< initial spread, > 0
    double mass = 1.0;
    double hbar = 1.0;

    double tau() const { return 2.0 * mass * sigma0 * sigma0 / hbar; }
    double momentum() const { return mass * vp; }
    double energy() const { return momentum() * momentum() / (2.0 * mass); }
    /// Effective spreading momentum p_s = hbar / (2 sigma0).
    double effective_momentum() const { return hbar / (2.0 * sigma0); }
    double spreading_velocity() const { return effective_momentum() / mass; }
    double center(double t) const { return x0 + vp * t; }

    /// Complex time-dependent spreading sigma0 (1 + i hbar t / (2 m sigma0^2)).
    cplx sigma_tilde(double t) const {
        return sigma0 * cplx(1.0, hbar * t / (2.0 * mass * sigma0 * sigma0));
    }
    /// |sigma_tilde|, the real spread at time t.
    double sigma(double t) const { return std::abs(sigma_tilde(t)); }

    /// psi(z, t). Entire in z; the quarter-power prefactor takes the
    /// principal branch, which is continuous in t since sigma_tilde stays
    /// in the right half-plane for all real t.
    cplx value(cplx z, double t) const;

    /// psi'(z,t) / psi(z,t), an entire function of z.
    cplx log_derivative(cplx z, double t) const;

    /// psi''(z,t) / psi(z,t).
    cplx second_log_term(cplx z, double t) const;
};

/// Ordered sum of Gaussian packets; the analytic total wave function.
/// Immutable after construction, safe for unrestricted parallel evaluation.
class Superposition {
  public:
    explicit Superposition(std::vector<GaussianPacket> packets);

    const std::vector<GaussianPacket>& packets() const { return packets_; }
    double mass() const { return packets_.front().mass; }
    double hbar() const { return packets_.front().hbar; }

    cplx value(cplx z, double t) const;
    /// Analytic d Psi / d z.
    cplx dz(cplx z, double t) const;
    /// Analytic d^2 Psi / d z^2.
    cplx d2z(cplx z, double t) const;

    /// True when the superposition is the symmetric head-on pair
    /// (x0_R = -x0_L, vp_R = -vp_L, equal sigma0).
    bool is_symmetric_pair(double tol = 1e-12) const;

  private:
    std::vector<GaussianPacket> packets_;
};

}  // namespace qhj

#endif
