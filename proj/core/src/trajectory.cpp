#include "qhj/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qhj/nodal.hpp"

namespace qhj {

namespace {

// Dormand-Prince 5(4) coefficients
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - bhat (4th-order error estimate)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// dense output
constexpr double d1 = -12715105075.0 / 11282082432.0,
                 d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0,
                 d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0,
                 d7 = 69997945.0 / 29380423.0;

constexpr double kPoleGuardFactor = 1e-6;
constexpr double kMinStep = 1e-12;

struct PoleSignal {};

// Velocity field with pole guarding; caches the real-axis scale so the
// coarse grid scan is not repeated every stage.
class Flow {
  public:
    Flow(const Superposition& sup, TrajectoryKind kind)
        : sup_(sup), kind_(kind) {}

    cplx velocity(double t, cplx z) {
        const double scale = scale_at(t);
        const cplx psi = sup_.value(z, t);
        const double a = std::abs(psi);
        min_psi_ = std::min(min_psi_, a);
        if (a < kPoleGuardFactor * scale) throw PoleSignal{};
        const cplx p =
            (sup_.hbar() / cplx(0.0, 1.0)) * sup_.dz(z, t) / psi;
        const cplx v = p / sup_.mass();
        return kind_ == TrajectoryKind::quantum ? v : std::conj(v);
    }

    double scale_at(double t) {
        if (!have_scale_ || std::abs(t - scale_t_) > 0.25) {
            scale_ = psi_scale(sup_, t);
            scale_t_ = t;
            have_scale_ = true;
        }
        return scale_;
    }

    double min_psi() const { return min_psi_; }

  private:
    const Superposition& sup_;
    TrajectoryKind kind_;
    bool have_scale_ = false;
    double scale_t_ = 0.0;
    double scale_ = 0.0;
    double min_psi_ = std::numeric_limits<double>::max();
};

}  // namespace

cplx Trajectory::at(double t) const {
    if (segments.empty()) return launch;
    // segments are ordered in integration direction
    const double dir = segments.front().h >= 0.0 ? 1.0 : -1.0;
    auto it = std::lower_bound(
        segments.begin(), segments.end(), t,
        [dir](const DenseSegment& s, double tv) {
            return dir * (s.t0 + s.h) < dir * tv;
        });
    if (it == segments.end()) --it;
    const DenseSegment& s = *it;
    const double th = std::clamp((t - s.t0) / s.h, 0.0, 1.0);
    const double th1 = 1.0 - th;
    return s.r1 + th * (s.r2 + th1 * (s.r3 + th * (s.r4 + th1 * s.r5)));
}

Trajectory integrate(const Superposition& sup, TrajectoryKind kind, cplx z0,
                     double t0, double t1, double tol) {
    Flow flow(sup, kind);
    Trajectory traj;
    traj.kind = kind;
    traj.launch = z0;
    traj.t_span = {t0, t1};
    traj.set_superposition(std::make_shared<Superposition>(sup));

    {
        const double scale = flow.scale_at(t0);
        if (std::abs(sup.value(z0, t0)) <= kPoleGuardFactor * scale)
            throw PoleEncounterError("launch point violates the pole guard");
    }

    auto record = [&](double t, cplx z) {
        const double scale = flow.scale_at(t);
        const auto d = qmf_dz(sup, z, t, scale);
        const cplx p = qmf(sup, z, t, scale);
        traj.samples.push_back({t, z, p, d.gamma, d.omega});
    };
    record(t0, z0);
    if (t1 == t0) return traj;

    const double dir = t1 > t0 ? 1.0 : -1.0;
    double t = t0;
    cplx z = z0;
    double h = dir * std::min(0.01, std::abs(t1 - t0));
    cplx k1 = flow.velocity(t, z);  // launch checked above, cannot pole here

    while (dir * (t1 - t) > 0.0) {
        if (dir * (t + h) > dir * t1) h = t1 - t;
        bool pole = false;
        cplx k2, k3, k4, k5, k6, k7, znew;
        double err = 0.0;
        try {
            k2 = flow.velocity(t + c2 * h, z + h * (a21 * k1));
            k3 = flow.velocity(t + c3 * h, z + h * (a31 * k1 + a32 * k2));
            k4 = flow.velocity(t + c4 * h,
                               z + h * (a41 * k1 + a42 * k2 + a43 * k3));
            k5 = flow.velocity(
                t + c5 * h,
                z + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
            k6 = flow.velocity(t + h, z + h * (a61 * k1 + a62 * k2 + a63 * k3 +
                                               a64 * k4 + a65 * k5));
            znew = z + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
            k7 = flow.velocity(t + h, znew);  // FSAL
            const cplx ev = e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 +
                            e7 * k7;
            const double sc =
                tol + tol * std::max(std::abs(z), std::abs(znew));
            err = std::abs(h) * std::abs(ev) / sc;
        } catch (const PoleSignal&) {
            pole = true;
        }
        if (pole) {
            h *= 0.5;
            if (std::abs(h) < kMinStep) {
                traj.status = TrajectoryStatus::aborted_near_pole;
                break;
            }
            continue;
        }
        if (err <= 1.0) {
            Trajectory::DenseSegment seg;
            seg.t0 = t;
            seg.h = h;
            const cplx dz = znew - z;
            seg.r1 = z;
            seg.r2 = dz;
            seg.r3 = h * k1 - dz;
            seg.r4 = dz - h * k7 - seg.r3;
            seg.r5 = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 +
                          d7 * k7);
            traj.segments.push_back(seg);
            t += h;
            z = znew;
            k1 = k7;
            record(t, z);
            const double fac =
                err > 0.0 ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0)
                          : 5.0;
            h *= fac;
        } else {
            h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
            if (std::abs(h) < kMinStep)
                throw StepUnderflowError("step size underflow");
        }
    }
    traj.min_psi_seen = flow.min_psi();
    return traj;
}

IsochroneResult isochrone(const Superposition& sup, TrajectoryKind kind,
                          const std::vector<double>& x_targets,
                          double t_arrival, double t_launch, double tol) {
    IsochroneResult res;
    res.t_launch = t_launch;
    res.t_arrival = t_arrival;

    // on-axis node positions, populated only at the maximal-interference time
    std::vector<double> axis_nodes;
    if (sup.is_symmetric_pair(1e-10)) {
        SymmetricScenario sc(sup);
        if (std::abs(t_arrival - sc.max_interference_time()) < 1e-9) {
            const double half = sc.wavelength() / 2.0;
            for (int n = -64; n <= 64; ++n)
                axis_nodes.push_back((n + 0.5) * half);
        }
    }

    for (double x : x_targets) {
        IsochroneEntry e;
        e.x_target = x;
        bool near_node = false;
        for (double xn : axis_nodes)
            if (std::abs(x - xn) < 1e-3) near_node = true;
        if (near_node) {
            e.excluded = true;
            e.message = "node-adjacent target excluded";
            res.arrivals.push_back(e);
            continue;
        }
        try {
            Trajectory back = integrate(sup, kind, cplx(x, 0.0), t_arrival,
                                        t_launch, tol);
            if (back.status != TrajectoryStatus::completed) {
                e.message = "pole encounter during backward integration";
                res.arrivals.push_back(e);
                continue;
            }
            e.z_launch = back.samples.back().z;
            Trajectory fwd = integrate(sup, kind, e.z_launch, t_launch,
                                       t_arrival, tol);
            if (fwd.status != TrajectoryStatus::completed) {
                e.message = "pole encounter during forward re-integration";
                res.arrivals.push_back(e);
                continue;
            }
            e.roundtrip_residual =
                std::abs(fwd.samples.back().z - cplx(x, 0.0));
            e.ok = e.roundtrip_residual < 1e-6;
            if (!e.ok) e.message = "round trip residual above tolerance";
        } catch (const Error& err) {
            e.message = err.what();
        }
        res.arrivals.push_back(e);
    }
    return res;
}

StagnationExpansion stagnation_expansion(const Superposition& sup, cplx z0,
                                         double t0) {
    const double scale = psi_scale(sup, t0);
    const cplx p0 = qmf(sup, z0, t0, scale);
    if (std::abs(p0) > 1e-8)
        throw NotStagnationError("QMF does not vanish at the expansion point");
    StagnationExpansion exp;
    exp.z0 = z0;
    exp.t0 = t0;
    exp.mass = sup.mass();
    exp.alpha = qmf_dz(sup, z0, t0, scale).dp;
    const double dt = 1e-5;
    exp.beta = (qmf(sup, z0, t0 + dt) - qmf(sup, z0, t0 - dt)) / (2.0 * dt);
    return exp;
}

cplx approx_trajectory(const StagnationExpansion& exp, cplx z_start,
                       double dt) {
    if (std::abs(exp.alpha) < 1e-12)
        throw AlphaZeroError("linearized trajectory is singular for alpha = 0");
    const cplx a = exp.alpha / exp.mass;
    const cplx eat = std::exp(a * dt);
    const cplx rel = (z_start - exp.z0) * eat +
                     exp.beta * exp.mass / (exp.alpha * exp.alpha) *
                         (eat - (1.0 + a * dt));
    return exp.z0 + rel;
}

}  // namespace qhj
