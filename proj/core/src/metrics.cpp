#include "qhj/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qhj {

using std::numbers::pi;

namespace {

constexpr double kResampleDt = 0.005;

struct Region {
    int begin;  // first index with omega > 0
    int end;    // last index with omega > 0
    double weight;
};

}  // namespace

WrappingRecord wrapping_time(const Trajectory& traj, double smoothing) {
    const Superposition& sup = traj.superposition();
    const double ta = traj.samples.front().t;
    const double tb = traj.t_end();
    const int n = static_cast<int>(std::floor((tb - ta) / kResampleDt)) + 1;
    if (n < 100)
        throw TooShortError("trajectory too short for wrapping detection");

    std::vector<double> ts(n), omega(n);
    std::vector<cplx> zs(n);
    double scale = 0.0, scale_t = ta - 1.0;
    double prev_omega = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = ta + i * kResampleDt;
        ts[i] = t;
        zs[i] = traj.at(t);
        if (std::abs(t - scale_t) > 0.25) {
            scale = psi_scale(sup, t);
            scale_t = t;
        }
        try {
            omega[i] = qmf_dz(sup, zs[i], t, scale).omega;
        } catch (const PoleProximityError&) {
            omega[i] = prev_omega;  // interpolation grazed a node
        }
        prev_omega = omega[i];
    }

    WrappingRecord rec;

    // dominant contiguous positive-vorticity region, by integrated vorticity
    std::vector<Region> regions;
    for (int i = 0; i < n;) {
        if (omega[i] > 0.0) {
            int j = i;
            double w = 0.0;
            while (j < n && omega[j] > 0.0) {
                w += omega[j] * kResampleDt;
                ++j;
            }
            regions.push_back({i, j - 1, w});
            i = j;
        } else {
            ++i;
        }
    }
    if (regions.empty()) return rec;
    const Region region = *std::max_element(
        regions.begin(), regions.end(),
        [](const Region& a, const Region& b) { return a.weight < b.weight; });

    // moving-average smoothing before minima detection
    int win = smoothing > 0.0
                  ? std::max(1, static_cast<int>(std::lround(smoothing / kResampleDt)))
                  : 1;
    if (win % 2 == 0) ++win;
    std::vector<double> sm(n);
    const int half = win / 2;
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        int cnt = 0;
        for (int j = std::max(0, i - half); j <= std::min(n - 1, i + half); ++j) {
            acc += omega[j];
            ++cnt;
        }
        sm[i] = acc / cnt;
    }

    int first = -1, last = -1;
    for (int i = 1; i + 1 < n; ++i) {
        if (sm[i] < sm[i - 1] && sm[i] < sm[i + 1]) {
            if (i <= region.begin) first = i;
            if (i >= region.end && last < 0) last = i;
        }
    }

    if (first < 0) return rec;  // no flanking structure (free-packet case)
    rec.t_first_min = ts[first];
    if (last >= 0) {
        rec.t_last_min = ts[last];
    } else if (region.end == n - 1) {
        rec.t_last_min = ts[n - 1];
        rec.unbounded = true;
    } else {
        return rec;
    }
    rec.t_wrap = rec.t_last_min - rec.t_first_min;
    rec.valid = true;

    // winding about the nearest stagnation curve
    if (sup.is_symmetric_pair(1e-10)) {
        SymmetricScenario sc(sup);
        const int i0 = first;
        const int i1 = last >= 0 ? last : n - 1;
        const double t_mid = 0.5 * (ts[i0] + ts[i1]);
        const cplx z_mid = traj.at(t_mid);
        int best_n = 0;
        double best_d = std::numeric_limits<double>::max();
        for (int k = -20; k <= 20; ++k) {
            const double d = std::abs(z_mid - sc.stagnation_position(k, t_mid));
            if (d < best_d) {
                best_d = d;
                best_n = k;
            }
        }
        double total = 0.0;
        cplx prev = zs[i0] - sc.stagnation_position(best_n, ts[i0]);
        for (int i = i0 + 1; i <= i1; ++i) {
            const cplx cur = zs[i] - sc.stagnation_position(best_n, ts[i]);
            if (prev != cplx(0.0) && cur != cplx(0.0))
                total += std::arg(cur / prev);
            prev = cur;
        }
        rec.loop_count = static_cast<int>(std::lround(total / (2.0 * pi)));
    }
    return rec;
}

double average_wrapping_time(const std::vector<WrappingRecord>& ensemble,
                             int* n_invalid) {
    double sum = 0.0;
    int n_valid = 0, bad = 0;
    for (const auto& r : ensemble) {
        if (r.valid) {
            sum += r.t_wrap;
            ++n_valid;
        } else {
            ++bad;
        }
    }
    if (n_invalid) *n_invalid = bad;
    if (n_valid == 0)
        throw EmptyEnsembleError("no valid wrapping record in ensemble");
    return sum / n_valid;
}

LifetimeWindow interference_lifetime(const SymmetricScenario& sc,
                                     double theta_enter, double theta_exit) {
    if (!(theta_enter < theta_exit))
        throw Error("interference_lifetime requires theta_enter < theta_exit");
    const double inf = std::numeric_limits<double>::infinity();
    auto invert = [&](double theta) {
        if (theta <= sc.theta0()) return 0.0;
        if (theta >= sc.theta_inf()) return inf;
        const double tn = std::tan(theta);
        const double tau = sc.tau();
        return std::max(0.0, (sc.x0() + tn * sc.vp() * tau) /
                                 (sc.vp() - tn * sc.x0() / tau));
    };
    LifetimeWindow w;
    w.theta_enter = theta_enter;
    w.theta_exit = theta_exit;
    w.t_enter = invert(theta_enter);
    w.t_exit = invert(theta_exit);
    w.lifetime = w.t_exit - w.t_enter;
    return w;
}

}  // namespace qhj
