#ifndef QHJ_WAVEFIELD_HPP
#define QHJ_WAVEFIELD_HPP

#include "qhj/packet.hpp"

namespace qhj {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// d p / d z split per the Cauchy-Riemann decomposition:
/// dp = (gamma + i omega) / 2.
struct QmfDerivative {
    cplx dp;       ///< analytic derivative of the QMF
    double gamma;  ///< divergence, 2 Re dp
    double omega;  ///< vorticity, 2 Im dp
};

struct ComplexAction {
    double s_real;  ///< phase part, principal branch (-pi, pi]
    double s_imag;  ///< amplitude part, -hbar ln |Psi|
};

/// All local field values at one (z, t).
struct FieldSample {
    cplx z;
    double t;
    cplx psi;
    cplx dpsi;
    cplx p;
    cplx dp;
    double gamma_div;
    double omega_vort;
    cplx q;
    Vec2 pvf;
    double s_real;
    double s_imag;
};

/// Max |Psi| on a coarse real-axis grid at time t; the reference scale
/// for pole-proximity thresholds.
double psi_scale(const Superposition& sup, double t);

/// Pole-proximity threshold: 1e-12 * psi_scale.
double node_epsilon(const Superposition& sup, double t);

/// Quantum momentum function p = (hbar / i) Psi' / Psi.
/// Throws PoleProximityError when |Psi| <= node_epsilon. Callers that
/// already know the scale can pass it to skip the grid scan.
cplx qmf(const Superposition& sup, cplx z, double t, double scale = -1.0);

/// Analytic dp/dz = (hbar/i) [Psi''/Psi - (Psi'/Psi)^2] with the
/// divergence/vorticity split.
QmfDerivative qmf_dz(const Superposition& sup, cplx z, double t,
                     double scale = -1.0);

/// Complex quantum potential Q = (hbar / 2 m i) dp/dz = (hbar/4m)(Omega - i Gamma).
cplx quantum_potential(const Superposition& sup, cplx z, double t,
                       double scale = -1.0);

/// Polya vector field of the QMF: (Re p, -Im p).
Vec2 pvf(const Superposition& sup, cplx z, double t, double scale = -1.0);

/// S = S_R + i S_I with Psi = exp(-S_I/hbar) exp(i S_R/hbar).
ComplexAction complex_action(const Superposition& sup, cplx z, double t,
                             double scale = -1.0);

/// Evaluate every field at once.
FieldSample sample_field(const Superposition& sup, cplx z, double t,
                         double scale = -1.0);

}  // namespace qhj

#endif
