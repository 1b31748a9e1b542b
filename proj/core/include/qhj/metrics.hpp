#ifndef QHJ_METRICS_HPP
#define QHJ_METRICS_HPP

#include <limits>
#include <vector>

#include "qhj/nodal.hpp"
#include "qhj/trajectory.hpp"

namespace qhj {

/// Wrapping interval of one trajectory: the vorticity minima bracketing
/// the dominant positive-vorticity region along the path.
struct WrappingRecord {
    int trajectory_id = 0;
    double t_first_min = 0.0;
    double t_last_min = 0.0;
    double t_wrap = 0.0;
    int loop_count = 0;
    bool valid = false;
    /// Region reaches the end of the integration window; t_wrap is a
    /// lower bound.
    bool unbounded = false;
};

/// Extract the wrapping interval from Omega(t) along the trajectory.
/// Omega is resampled on a uniform grid through the dense output, smoothed
/// by a moving average of width `smoothing` (time units) for minima
/// detection. Throws TooShortError when fewer than 100 samples cover the
/// span.
WrappingRecord wrapping_time(const Trajectory& traj, double smoothing = 0.025);

/// Arithmetic mean of t_wrap over valid records; invalid ones are skipped
/// and counted into *n_invalid when given. Throws EmptyEnsembleError when
/// no record is valid.
double average_wrapping_time(const std::vector<WrappingRecord>& ensemble,
                             int* n_invalid = nullptr);

struct LifetimeWindow {
    double theta_enter;  ///< radians
    double theta_exit;   ///< radians
    double t_enter;
    double t_exit;     ///< +infinity when theta_exit >= theta_inf
    double lifetime;   ///< t_exit - t_enter
};

/// Invert the monotone nodal angle for the two thresholds (radians).
/// Thresholds below theta0 report t = 0; thresholds at or above theta_inf
/// report +infinity.
LifetimeWindow interference_lifetime(
    const SymmetricScenario& scenario,
    double theta_enter = -10.0 * 3.14159265358979323846 / 180.0,
    double theta_exit = +10.0 * 3.14159265358979323846 / 180.0);

}  // namespace qhj

#endif
