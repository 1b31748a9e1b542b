#ifndef QHJ_TRAJECTORY_HPP
#define QHJ_TRAJECTORY_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qhj/wavefield.hpp"

namespace qhj {

enum class TrajectoryKind { quantum, polya };
enum class TrajectoryStatus { completed, aborted_near_pole };

struct TrajectorySample {
    double t;
    cplx z;
    cplx p;        ///< QMF at (z, t)
    double gamma;  ///< divergence along the path
    double omega;  ///< vorticity along the path
};

/// One integrated path. Quantum kind follows dz/dt = p/m, Polya kind
/// follows dz/dt = conj(p)/m (the PVF streamline flow).
class Trajectory {
  public:
    TrajectoryKind kind = TrajectoryKind::quantum;
    std::vector<TrajectorySample> samples;
    cplx launch;
    std::pair<double, double> t_span{0.0, 0.0};
    TrajectoryStatus status = TrajectoryStatus::completed;
    double min_psi_seen = 0.0;

    /// Dense-output coefficients for one accepted step.
    struct DenseSegment {
        double t0;
        double h;
        cplx r1, r2, r3, r4, r5;
    };
    std::vector<DenseSegment> segments;

    /// 4th-order dense-output evaluation anywhere in the covered span.
    cplx at(double t) const;

    /// Last time actually reached (t_span.second unless aborted).
    double t_end() const { return samples.back().t; }

    const Superposition& superposition() const { return *sup_; }
    void set_superposition(std::shared_ptr<const Superposition> s) {
        sup_ = std::move(s);
    }

  private:
    std::shared_ptr<const Superposition> sup_;
};

/// Adaptive embedded 5(4) integration of one trajectory. Backward spans
/// (t1 < t0) are allowed. Aborts with status aborted_near_pole when the
/// path runs into the pole guard; throws PoleEncounterError when the
/// launch point itself violates it.
Trajectory integrate(const Superposition& sup, TrajectoryKind kind, cplx z0,
                     double t0, double t1, double tol = 1e-9);

struct IsochroneEntry {
    double x_target;
    cplx z_launch;
    double roundtrip_residual = 0.0;
    bool ok = false;
    bool excluded = false;  ///< skipped node-adjacent target
    std::string message;
};

struct IsochroneResult {
    std::vector<IsochroneEntry> arrivals;
    double t_launch;
    double t_arrival;
};

/// Backward-shooting isochrone: launch points whose trajectories reach
/// (x_target, 0) at t_arrival. Targets within 1e-3 of an on-axis node are
/// excluded when t_arrival is the maximal-interference time. Forward
/// re-integration must close the round trip within 1e-6.
IsochroneResult isochrone(const Superposition& sup, TrajectoryKind kind,
                          const std::vector<double>& x_targets,
                          double t_arrival, double t_launch,
                          double tol = 1e-9);

/// First-order space-time Taylor data of the QMF at a stagnation point.
struct StagnationExpansion {
    cplx z0;
    double t0;
    cplx alpha;  ///< (dp/dz) at the stagnation point, analytic
    cplx beta;   ///< (dp/dt) at the stagnation point, central difference
    double mass = 1.0;
};

/// Throws NotStagnationError unless p(z0, t0) vanishes within 1e-8.
StagnationExpansion stagnation_expansion(const Superposition& sup, cplx z0,
                                         double t0);

/// Linearized trajectory around the expansion point, origin shifted to
/// (z0, t0). Throws AlphaZeroError when the formula is singular.
cplx approx_trajectory(const StagnationExpansion& exp, cplx z_start, double dt);

}  // namespace qhj

#endif
