#ifndef QHJ_NODAL_HPP
#define QHJ_NODAL_HPP

#include <utility>
#include <vector>

#include "qhj/wavefield.hpp"

namespace qhj {

/// One nodal trajectory y = slope * x + intercept in the complex plane.
/// All n share the same slope.
struct NodalTrajectoryLine {
    double slope;
    double intercept;
    int n;
};

enum class PointKind { node, stagnation };

struct CharacteristicPoint {
    PointKind kind;
    cplx z;
    double t;
    int order = 1;
    double residual = 0.0;  ///< |Psi| (node) or |Psi'| (stagnation) at z
};

/// Closed circular contour for circulation quadrature.
struct ContourSpec {
    cplx center;
    double radius = 1.0;
    int n_points = 256;
};

/// Snapshot of the rotating nodal line at time t.
struct NodalLineState {
    double t;
    double theta;
    double omega_rate;
    double spacing;
    std::vector<std::pair<int, cplx>> node_positions;
};

/// Closed-form nodal-line dynamics for the symmetric head-on pair
/// x_R = -x_L = x0, vp_R = -vp_L. The left packet sits at -x0 and moves
/// with +vp; the published theta_0 / theta_inf values pin this labeling.
class SymmetricScenario {
  public:
    /// Throws ScenarioShapeError unless sup is the symmetric pair.
    explicit SymmetricScenario(const Superposition& sup);

    const Superposition& superposition() const { return sup_; }
    double x0() const { return x0_; }
    double vp() const { return vp_; }
    double sigma0() const { return sigma0_; }
    double mass() const { return sup_.mass(); }
    double hbar() const { return sup_.hbar(); }
    double tau() const { return 2.0 * mass() * sigma0_ * sigma0_ / hbar(); }

    /// Time of maximal interference on the real axis, x0 / vp.
    double max_interference_time() const { return x0_ / vp_; }
    /// Node wavelength on the real axis at maximal interference.
    double wavelength() const;

    /// Analytic node position z_n(t) = x_n(t) + i y_n(t).
    cplx node_position(int n, double t) const;
    /// Analytic stagnation-curve position (midway between nodes n-1 and n).
    cplx stagnation_position(int n, double t) const;

    /// Angular position of the nodal line, continuous in t.
    double nodal_angle(double t) const;
    double theta0() const { return nodal_angle(0.0); }
    double theta_inf() const;

    /// Rotation rate hbar / (2 m sigma_t^2).
    double nodal_rate(double t) const;

    /// Distance between consecutive nodes.
    double node_spacing(double t) const;

    /// Throws DegenerateScenarioError when x0 = 0.
    NodalTrajectoryLine nodal_trajectory(int n) const;

    NodalLineState line_state(double t, int n_min, int n_max) const;

  private:
    Superposition sup_;
    double x0_;
    double vp_;
    double sigma0_;
};

/// Newton refinement of a node of Psi near seed. Throws NoConvergenceError
/// when the seed is outside the basin.
CharacteristicPoint refine_node(const Superposition& sup, cplx seed, double t);

/// Newton refinement of a stagnation point (zero of Psi' with Psi != 0).
CharacteristicPoint refine_stagnation(const Superposition& sup, cplx seed,
                                      double t);

struct Circulation {
    double gamma;  ///< Re of the contour integral of p dz (work term)
    double flux;   ///< Im of the contour integral (flux term)
};

/// Trapezoid quadrature of the circulation integral around contour.
/// Throws ContourThroughPoleError when a quadrature point is too close
/// to a node.
Circulation circulation(const Superposition& sup, const ContourSpec& contour,
                        double t);

/// Pole-local divergence/vorticity approximations for an n-th order node,
/// dz being the offset from the pole.
std::pair<double, double> pole_local_div_vort(int n_order, cplx dz,
                                              double hbar = 1.0);

}  // namespace qhj

#endif
