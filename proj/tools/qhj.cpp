// Command-line front end: every subcommand emits deterministic plot-ready
// data files for one scenario (fixed formatting, no timestamps).

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "qhj/cave.hpp"
#include "qhj/metrics.hpp"
#include "qhj/nodal.hpp"
#include "qhj/scenario.hpp"
#include "qhj/trajectory.hpp"
#include "qhj/wavefield.hpp"

namespace fs = std::filesystem;
using qhj::cplx;
using std::numbers::pi;

namespace {

constexpr double kDeg = pi / 180.0;

// Data files are staged as <name>.tmp and renamed on success, so a failed
// run leaves no partial outputs behind.
class OutputSet {
  public:
    explicit OutputSet(fs::path dir) : dir_(std::move(dir)) {
        fs::create_directories(dir_);
    }
    ~OutputSet() {
        if (!committed_)
            for (const auto& p : staged_) {
                std::error_code ec;
                fs::remove(p, ec);
            }
    }
    std::ofstream open(const std::string& name) {
        fs::path tmp = dir_ / (name + ".tmp");
        staged_.push_back(tmp);
        names_.push_back(name);
        std::ofstream os(tmp);
        if (!os) throw qhj::IoError("cannot open output file: " + tmp.string());
        os.precision(12);
        return os;
    }
    fs::path stage(const std::string& name) {
        fs::path tmp = dir_ / (name + ".tmp");
        staged_.push_back(tmp);
        names_.push_back(name);
        return tmp;
    }
    void commit() {
        for (std::size_t i = 0; i < staged_.size(); ++i)
            fs::rename(staged_[i], dir_ / names_[i]);
        committed_ = true;
    }

  private:
    fs::path dir_;
    std::vector<fs::path> staged_;
    std::vector<std::string> names_;
    bool committed_ = false;
};

struct Common {
    std::string preset;
    std::string scenario_file;
    std::string out = ".";
    double tol = 1e-9;
    bool schema = false;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--preset", c.preset, "named preset: case1 or case2");
    cmd->add_option("--scenario", c.scenario_file, "scenario file");
    cmd->add_option("--out", c.out, "output directory");
    cmd->add_option("--tol", c.tol, "integrator tolerance");
    cmd->add_flag("--schema", c.schema, "print output column schema and exit");
}

qhj::Scenario resolve_scenario(const Common& c) {
    if (!c.scenario_file.empty()) return qhj::load_scenario(c.scenario_file);
    if (!c.preset.empty()) return qhj::preset(c.preset);
    throw qhj::ScenarioParseError("need --preset or --scenario");
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_traj(std::ofstream& os, const qhj::Trajectory& tr) {
    for (const auto& s : tr.samples)
        os << fmt(s.t) << " " << fmt(s.z.real()) << " " << fmt(s.z.imag())
           << " " << fmt(s.p.real()) << " " << fmt(s.p.imag()) << " "
           << fmt(s.gamma) << " " << fmt(s.omega) << "\n";
}

int run_fields(const Common& c, double t, double xmin, double xmax, int nx,
               double ymin, double ymax, int ny) {
    if (c.schema) {
        std::cout << "fields.dat: x y re_psi im_psi re_dpsi im_dpsi re_p im_p "
                     "gamma omega re_q im_q pvf_x pvf_y s_real s_imag\n";
        return 0;
    }
    auto sc = resolve_scenario(c);
    auto sup = sc.superposition();
    OutputSet out(c.out);
    auto os = out.open("fields.dat");
    os << "# x y re_psi im_psi re_dpsi im_dpsi re_p im_p gamma omega re_q "
          "im_q pvf_x pvf_y s_real s_imag\n";
    const double scale = qhj::psi_scale(sup, t);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (int iy = 0; iy < ny; ++iy) {
        const double y = ymin + (ymax - ymin) * iy / std::max(1, ny - 1);
        for (int ix = 0; ix < nx; ++ix) {
            const double x = xmin + (xmax - xmin) * ix / std::max(1, nx - 1);
            const cplx z(x, y);
            const cplx psi = sup.value(z, t);
            const cplx dpsi = sup.dz(z, t);
            os << fmt(x) << " " << fmt(y) << " " << fmt(psi.real()) << " "
               << fmt(psi.imag()) << " " << fmt(dpsi.real()) << " "
               << fmt(dpsi.imag());
            try {
                auto s = qhj::sample_field(sup, z, t, scale);
                os << " " << fmt(s.p.real()) << " " << fmt(s.p.imag()) << " "
                   << fmt(s.gamma_div) << " " << fmt(s.omega_vort) << " "
                   << fmt(s.q.real()) << " " << fmt(s.q.imag()) << " "
                   << fmt(s.pvf.x) << " " << fmt(s.pvf.y) << " "
                   << fmt(s.s_real) << " " << fmt(s.s_imag);
            } catch (const qhj::PoleProximityError&) {
                for (int k = 0; k < 10; ++k) os << " " << fmt(nan);
            }
            os << "\n";
        }
    }
    out.commit();
    return 0;
}

int run_nodal(const Common& c, double tmin, double tmax, int nt, int nmin,
              int nmax, const std::vector<double>& angles_deg) {
    if (c.schema) {
        std::cout << "nodal_line.dat: t theta_rad theta_deg omega_rate spacing\n"
                  << "nodes.dat: t kind n re_z im_z residual\n"
                  << "nodal_trajectories.dat: n slope intercept\n"
                  << "angle_times.dat: theta_deg t_cross\n";
        return 0;
    }
    auto sc = resolve_scenario(c);
    auto sup = sc.superposition();
    qhj::SymmetricScenario sym(sup);
    OutputSet out(c.out);

    auto line = out.open("nodal_line.dat");
    line << "# t theta_rad theta_deg omega_rate spacing\n";
    auto nodes = out.open("nodes.dat");
    nodes << "# t kind n re_z im_z residual\n";
    for (int i = 0; i < nt; ++i) {
        const double t = tmin + (tmax - tmin) * i / std::max(1, nt - 1);
        const double th = sym.nodal_angle(t);
        line << fmt(t) << " " << fmt(th) << " " << fmt(th / kDeg) << " "
             << fmt(sym.nodal_rate(t)) << " " << fmt(sym.node_spacing(t))
             << "\n";
        for (int n = nmin; n <= nmax; ++n) {
            // refinement can fail where |Psi| underflows the pole threshold
            // (deep-tail interference at early t); fall back to the
            // analytic positions, which are exact for the symmetric pair
            cplx zn = sym.node_position(n, t);
            double rn = std::abs(sup.value(zn, t));
            try {
                auto node = qhj::refine_node(sup, zn, t);
                zn = node.z;
                rn = node.residual;
            } catch (const qhj::Error&) {
            }
            nodes << fmt(t) << " node " << n << " " << fmt(zn.real()) << " "
                  << fmt(zn.imag()) << " " << fmt(rn) << "\n";
            cplx zs = sym.stagnation_position(n, t);
            double rs = std::abs(sup.dz(zs, t));
            try {
                auto stag = qhj::refine_stagnation(sup, zs, t);
                zs = stag.z;
                rs = stag.residual;
            } catch (const qhj::Error&) {
            }
            nodes << fmt(t) << " stagnation " << n << " " << fmt(zs.real())
                  << " " << fmt(zs.imag()) << " " << fmt(rs) << "\n";
        }
    }
    auto lines = out.open("nodal_trajectories.dat");
    lines << "# n slope intercept\n";
    for (int n = nmin; n <= nmax; ++n) {
        auto l = sym.nodal_trajectory(n);
        lines << n << " " << fmt(l.slope) << " " << fmt(l.intercept) << "\n";
    }
    if (!angles_deg.empty()) {
        auto at = out.open("angle_times.dat");
        at << "# theta_deg t_cross\n";
        for (double deg : angles_deg) {
            auto w = qhj::interference_lifetime(sym, deg * kDeg,
                                               deg * kDeg + 1e-9);
            at << fmt(deg) << " " << fmt(w.t_enter) << "\n";
            std::cout << "theta=" << fmt(deg) << " t=" << fmt(w.t_enter)
                      << "\n";
        }
    }
    std::cout << "theta0_deg=" << fmt(sym.theta0() / kDeg)
              << " theta_inf_deg=" << fmt(sym.theta_inf() / kDeg) << "\n";
    out.commit();
    return 0;
}

int run_trajectories(const Common& c, const std::vector<std::string>& launches,
                     const std::string& kind_name, double t0, double t1) {
    if (c.schema) {
        std::cout << "traj_<k>.dat: t re_z im_z re_p im_p gamma omega\n"
                  << "manifest.dat: id re_launch im_launch kind status "
                     "n_samples file\n";
        return 0;
    }
    auto sc = resolve_scenario(c);
    auto sup = sc.superposition();
    const auto kind = kind_name == "polya" ? qhj::TrajectoryKind::polya
                                           : qhj::TrajectoryKind::quantum;
    OutputSet out(c.out);
    auto manifest = out.open("manifest.dat");
    manifest << "# id re_launch im_launch kind status n_samples file\n";
    int id = 0;
    for (const auto& ls : launches) {
        std::istringstream ss(ls);
        double re, im;
        char comma = ',';
        if (!(ss >> re)) throw qhj::Error("bad --launch value: " + ls);
        ss >> comma >> im;
        const cplx z0(re, im);
        auto tr = qhj::integrate(sup, kind, z0, t0, t1, c.tol);
        char name[32];
        std::snprintf(name, sizeof name, "traj_%03d.dat", id);
        auto os = out.open(name);
        os << "# t re_z im_z re_p im_p gamma omega\n";
        write_traj(os, tr);
        manifest << id << " " << fmt(re) << " " << fmt(im) << " " << kind_name
                 << " "
                 << (tr.status == qhj::TrajectoryStatus::completed
                         ? "completed"
                         : "aborted_near_pole")
                 << " " << tr.samples.size() << " " << name << "\n";
        ++id;
    }
    out.commit();
    return 0;
}

std::vector<double> target_range(double x0, double x1, double dx) {
    std::vector<double> xs;
    const int n = static_cast<int>(std::llround((x1 - x0) / dx));
    // endpoint-weighted form keeps symmetric ranges exactly antisymmetric
    // (and hits 0 exactly), which matters near the unstable origin
    for (int i = 0; i <= n; ++i)
        xs.push_back((x0 * (n - i) + x1 * i) / n);
    return xs;
}

int run_isochrone(const Common& c, double xmin, double xmax, double dx,
                  std::optional<double> t_arrival_opt, double t_launch,
                  const std::string& kind_name) {
    if (c.schema) {
        std::cout << "isochrone.dat: x_target re_launch im_launch residual "
                     "status\n";
        return 0;
    }
    auto sc = resolve_scenario(c);
    auto sup = sc.superposition();
    const auto kind = kind_name == "polya" ? qhj::TrajectoryKind::polya
                                           : qhj::TrajectoryKind::quantum;
    const double t_arrival =
        t_arrival_opt ? *t_arrival_opt
                      : qhj::SymmetricScenario(sup).max_interference_time();
    auto res = qhj::isochrone(sup, kind, target_range(xmin, xmax, dx),
                              t_arrival, t_launch, c.tol);
    OutputSet out(c.out);
    auto os = out.open("isochrone.dat");
    os << "# x_target re_launch im_launch residual status\n";
    for (const auto& e : res.arrivals)
        os << fmt(e.x_target) << " " << fmt(e.z_launch.real()) << " "
           << fmt(e.z_launch.imag()) << " " << fmt(e.roundtrip_residual) << " "
           << (e.excluded ? "excluded" : (e.ok ? "ok" : "failed")) << "\n";
    out.commit();
    return 0;
}

int run_metrics(const Common& c, double xmin, double xmax, double dx,
                double t_launch, std::optional<double> t_end_opt,
                double smoothing) {
    if (c.schema) {
        std::cout << "wrapping.dat: x_target t_first_min t_last_min t_wrap "
                     "loop_count valid unbounded\n"
                  << "summary.dat: key = value pairs (mean_wrap, min_wrap, "
                     "max_wrap, n_valid, n_invalid, n_excluded, n_unbounded, "
                     "lifetime_t_enter, lifetime_t_exit, lifetime)\n";
        return 0;
    }
    auto sc = resolve_scenario(c);
    auto sup = sc.superposition();
    qhj::SymmetricScenario sym(sup);
    const double t_arrival = sym.max_interference_time();
    const double t_end = t_end_opt ? *t_end_opt : 4.0 * t_arrival;

    auto iso = qhj::isochrone(sup, qhj::TrajectoryKind::quantum,
                              target_range(xmin, xmax, dx), t_arrival,
                              t_launch, c.tol);
    OutputSet out(c.out);
    auto os = out.open("wrapping.dat");
    os << "# x_target t_first_min t_last_min t_wrap loop_count valid "
          "unbounded\n";
    std::vector<qhj::WrappingRecord> records;
    int n_excluded = 0, n_unbounded = 0;
    for (const auto& e : iso.arrivals) {
        if (e.excluded) {
            ++n_excluded;
            continue;
        }
        if (!e.ok) {
            qhj::WrappingRecord bad;
            records.push_back(bad);
            os << fmt(e.x_target) << " 0 0 0 0 0 0\n";
            continue;
        }
        auto tr = qhj::integrate(sup, qhj::TrajectoryKind::quantum, e.z_launch,
                                 t_launch, t_end, c.tol);
        auto rec = qhj::wrapping_time(tr, smoothing);
        if (rec.unbounded) ++n_unbounded;
        records.push_back(rec);
        os << fmt(e.x_target) << " " << fmt(rec.t_first_min) << " "
           << fmt(rec.t_last_min) << " " << fmt(rec.t_wrap) << " "
           << rec.loop_count << " " << (rec.valid ? 1 : 0) << " "
           << (rec.unbounded ? 1 : 0) << "\n";
    }
    int n_invalid = 0;
    const double mean = qhj::average_wrapping_time(records, &n_invalid);
    double wmin = std::numeric_limits<double>::max(), wmax = 0.0;
    for (const auto& r : records)
        if (r.valid) {
            wmin = std::min(wmin, r.t_wrap);
            wmax = std::max(wmax, r.t_wrap);
        }
    auto w = qhj::interference_lifetime(sym);
    auto sm = out.open("summary.dat");
    sm << "mean_wrap = " << fmt(mean) << "\n";
    sm << "min_wrap = " << fmt(wmin) << "\n";
    sm << "max_wrap = " << fmt(wmax) << "\n";
    sm << "n_valid = " << records.size() - n_invalid << "\n";
    sm << "n_invalid = " << n_invalid << "\n";
    sm << "n_excluded = " << n_excluded << "\n";
    sm << "n_unbounded = " << n_unbounded << "\n";
    sm << "lifetime_t_enter = " << fmt(w.t_enter) << "\n";
    sm << "lifetime_t_exit = "
       << (std::isinf(w.t_exit) ? std::string("inf") : fmt(w.t_exit)) << "\n";
    sm << "lifetime = "
       << (std::isinf(w.lifetime) ? std::string("inf") : fmt(w.lifetime))
       << "\n";
    std::cout << "mean_wrap=" << fmt(mean) << "\n";
    out.commit();
    return 0;
}

int run_cave(const Common& c, qhj::CaveGridSpec spec, bool have_iso,
             const std::string& format, const std::string& file) {
    if (c.schema) {
        std::cout << "volume file: text header (axis/iso/scenario), then "
                     "psi_abs and dpsi_abs blocks, x-fastest row-major; "
                     "binary mode stores little-endian float32\n";
        return 0;
    }
    auto sc = resolve_scenario(c);
    auto sup = sc.superposition();
    if (!have_iso) {
        if (sc.name == "case1") {
            spec.iso_psi = 0.053;
            spec.iso_dpsi = 0.106;
        } else if (sc.name == "case2") {
            spec.iso_psi = 0.16;
            spec.iso_dpsi = 0.23;
        }
    }
    auto grid = qhj::sample_cave(sup, spec);
    grid.scenario = sc.describe();
    OutputSet out(c.out);
    qhj::export_volume(grid, out.stage(file),
                       format == "binary" ? qhj::VolumeFormat::binary
                                          : qhj::VolumeFormat::text);
    out.commit();
    return 0;
}

int run_density(const Common& c, double xmin, double xmax, int nx, double tmin,
                double tmax, int nt) {
    if (c.schema) {
        std::cout << "density.dat: t x density\n";
        return 0;
    }
    auto sc = resolve_scenario(c);
    auto sup = sc.superposition();
    OutputSet out(c.out);
    auto os = out.open("density.dat");
    os << "# t x density\n";
    for (int it = 0; it < nt; ++it) {
        const double t = tmin + (tmax - tmin) * it / std::max(1, nt - 1);
        for (int ix = 0; ix < nx; ++ix) {
            const double x = xmin + (xmax - xmin) * ix / std::max(1, nx - 1);
            const double a = std::abs(sup.value(cplx(x, 0.0), t));
            os << fmt(t) << " " << fmt(x) << " " << fmt(a * a) << "\n";
        }
    }
    out.commit();
    return 0;
}

int run_divvort(const Common& c, const std::string& launch,
                const std::string& kind_name, double t0, double t1) {
    if (c.schema) {
        std::cout << "divvort.dat: t re_z im_z gamma omega\n";
        return 0;
    }
    auto sc = resolve_scenario(c);
    auto sup = sc.superposition();
    std::istringstream ss(launch);
    double re, im;
    char comma = ',';
    if (!(ss >> re)) throw qhj::Error("bad --launch value: " + launch);
    ss >> comma >> im;
    const auto kind = kind_name == "polya" ? qhj::TrajectoryKind::polya
                                           : qhj::TrajectoryKind::quantum;
    auto tr = qhj::integrate(sup, kind, cplx(re, im), t0, t1, c.tol);
    OutputSet out(c.out);
    auto os = out.open("divvort.dat");
    os << "# t re_z im_z gamma omega\n";
    for (const auto& s : tr.samples)
        os << fmt(s.t) << " " << fmt(s.z.real()) << " " << fmt(s.z.imag())
           << " " << fmt(s.gamma) << " " << fmt(s.omega) << "\n";
    out.commit();
    return 0;
}

int run_stagnation(const Common& c, double re, double im, double tmin,
                   double tmax, int nt) {
    if (c.schema) {
        std::cout << "stagnation.dat: t re_dp im_dp\n";
        return 0;
    }
    auto sc = resolve_scenario(c);
    auto sup = sc.superposition();
    OutputSet out(c.out);
    auto os = out.open("stagnation.dat");
    os << "# t re_dp im_dp\n";
    for (int i = 0; i < nt; ++i) {
        const double t = tmin + (tmax - tmin) * i / std::max(1, nt - 1);
        auto d = qhj::qmf_dz(sup, cplx(re, im), t);
        os << fmt(t) << " " << fmt(d.dp.real()) << " " << fmt(d.dp.imag())
           << "\n";
    }
    out.commit();
    return 0;
}

int run_approx(const Common& c, std::optional<double> t0_opt,
               const std::vector<double>& offsets, double dt_max, int nt) {
    if (c.schema) {
        std::cout << "approx.dat: x_start dt re_exact im_exact re_approx "
                     "im_approx err\n";
        return 0;
    }
    auto sc = resolve_scenario(c);
    auto sup = sc.superposition();
    qhj::SymmetricScenario sym(sup);
    const double t0 = t0_opt ? *t0_opt : sym.max_interference_time();
    auto exp = qhj::stagnation_expansion(sup, cplx(0.0, 0.0), t0);
    OutputSet out(c.out);
    auto os = out.open("approx.dat");
    os << "# x_start dt re_exact im_exact re_approx im_approx err\n";
    for (double x : offsets) {
        const cplx z0(x, 0.0);
        auto fwd = qhj::integrate(sup, qhj::TrajectoryKind::quantum, z0, t0,
                                  t0 + dt_max, c.tol);
        auto bwd = qhj::integrate(sup, qhj::TrajectoryKind::quantum, z0, t0,
                                  t0 - dt_max, c.tol);
        for (int i = 0; i <= nt; ++i) {
            const double dt = -dt_max + 2.0 * dt_max * i / nt;
            const cplx ze = dt >= 0.0 ? fwd.at(t0 + dt) : bwd.at(t0 + dt);
            const cplx za = qhj::approx_trajectory(exp, z0, dt);
            os << fmt(x) << " " << fmt(dt) << " " << fmt(ze.real()) << " "
               << fmt(ze.imag()) << " " << fmt(za.real()) << " "
               << fmt(za.imag()) << " " << fmt(std::abs(ze - za)) << "\n";
        }
    }
    out.commit();
    return 0;
}

int run_polelocal(const Common& c, int nt, int order) {
    if (c.schema) {
        std::cout << "polelocal.dat: streamline t x y gamma omega\n";
        return 0;
    }
    // streamline parametrization around a first-order pole:
    // 1,3: (x, y) = (-/+ 0.1 sec t, +/- 0.1 tan t)
    // 2,4: (x, y) = (+/- 0.1 tan t, -/+ 0.1 sec t)
    OutputSet out(c.out);
    auto os = out.open("polelocal.dat");
    os << "# streamline t x y gamma omega\n";
    for (int s = 1; s <= 4; ++s) {
        for (int i = 0; i <= nt; ++i) {
            const double t = -pi / 3.0 + 2.0 * pi / 3.0 * i / nt;
            double x, y;
            switch (s) {
                case 1: x = -0.1 / std::cos(t); y = 0.1 * std::tan(t); break;
                case 3: x = 0.1 / std::cos(t); y = -0.1 * std::tan(t); break;
                case 2: x = 0.1 * std::tan(t); y = -0.1 / std::cos(t); break;
                default: x = -0.1 * std::tan(t); y = 0.1 / std::cos(t); break;
            }
            auto [gamma, omega] = qhj::pole_local_div_vort(order, cplx(x, y));
            os << s << " " << fmt(t) << " " << fmt(x) << " " << fmt(y) << " "
               << fmt(gamma) << " " << fmt(omega) << "\n";
        }
    }
    out.commit();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"complex quantum Hamilton-Jacobi wave-packet interference "
                 "toolkit"};
    app.require_subcommand(1);

    Common c_fields, c_nodal, c_traj, c_iso, c_metrics, c_cave, c_density,
        c_divvort, c_stag, c_approx, c_pole;

    // fields
    auto* fields = app.add_subcommand("fields", "field samples on a z-plane grid");
    add_common(fields, c_fields);
    double f_t = 5.0, f_xmin = -4.0, f_xmax = 4.0, f_ymin = -3.0, f_ymax = 3.0;
    int f_nx = 161, f_ny = 121;
    fields->add_option("--t", f_t);
    fields->add_option("--xmin", f_xmin);
    fields->add_option("--xmax", f_xmax);
    fields->add_option("--nx", f_nx);
    fields->add_option("--ymin", f_ymin);
    fields->add_option("--ymax", f_ymax);
    fields->add_option("--ny", f_ny);

    // nodal
    auto* nodal = app.add_subcommand("nodal", "nodal-line dynamics and node tables");
    add_common(nodal, c_nodal);
    double n_tmin = 0.0, n_tmax = 10.0;
    int n_nt = 101, n_nmin = -3, n_nmax = 2;
    std::vector<double> n_angles;
    nodal->add_option("--tmin", n_tmin);
    nodal->add_option("--tmax", n_tmax);
    nodal->add_option("--nt", n_nt);
    nodal->add_option("--nmin", n_nmin);
    nodal->add_option("--nmax", n_nmax);
    nodal->add_option("--angles", n_angles,
                      "nodal-line angles (degrees) to report crossing times");

    // trajectories
    auto* traj = app.add_subcommand("trajectories", "integrate trajectories");
    add_common(traj, c_traj);
    std::vector<std::string> t_launch;
    std::string t_kind = "quantum";
    double t_t0 = 0.0, t_t1 = 10.0;
    traj->add_option("--launch", t_launch, "launch point 're,im' (repeatable)")
        ->required();
    traj->add_option("--kind", t_kind)->check(CLI::IsMember({"quantum", "polya"}));
    traj->add_option("--t0", t_t0);
    traj->add_option("--t1", t_t1);

    // isochrone
    auto* iso = app.add_subcommand("isochrone", "backward-shooting launch table");
    add_common(iso, c_iso);
    double i_xmin = -3.9, i_xmax = 3.9, i_dx = 0.05, i_tlaunch = 0.0;
    std::optional<double> i_tarr;
    std::string i_kind = "quantum";
    iso->add_option("--x-min", i_xmin);
    iso->add_option("--x-max", i_xmax);
    iso->add_option("--dx", i_dx);
    iso->add_option("--t-arrival", i_tarr);
    iso->add_option("--t-launch", i_tlaunch);
    iso->add_option("--kind", i_kind)->check(CLI::IsMember({"quantum", "polya"}));

    // metrics
    auto* metrics = app.add_subcommand("metrics", "wrapping records and lifetimes");
    add_common(metrics, c_metrics);
    double m_xmin = -3.9, m_xmax = 3.9, m_dx = 0.05, m_tlaunch = 0.0,
           m_smoothing = 0.025;
    std::optional<double> m_tend;
    metrics->add_option("--x-min", m_xmin);
    metrics->add_option("--x-max", m_xmax);
    metrics->add_option("--dx", m_dx);
    metrics->add_option("--t-launch", m_tlaunch);
    metrics->add_option("--t-end", m_tend);
    metrics->add_option("--smoothing", m_smoothing);

    // cave
    auto* cave = app.add_subcommand("cave", "scalar volume export");
    add_common(cave, c_cave);
    qhj::CaveGridSpec spec;
    spec.x = {-4.0, 4.0, 161};
    spec.y = {-3.0, 3.0, 121};
    spec.t = {0.0, 10.0, 201};
    std::string cv_format = "binary", cv_file = "cave.vol";
    bool have_iso = false;
    double iso_psi = 0.0, iso_dpsi = 0.0;
    cave->add_option("--xmin", spec.x.min);
    cave->add_option("--xmax", spec.x.max);
    cave->add_option("--nx", spec.x.count);
    cave->add_option("--ymin", spec.y.min);
    cave->add_option("--ymax", spec.y.max);
    cave->add_option("--ny", spec.y.count);
    cave->add_option("--tmin", spec.t.min);
    cave->add_option("--tmax", spec.t.max);
    cave->add_option("--nt", spec.t.count);
    cave->add_option("--budget", spec.budget);
    auto* o1 = cave->add_option("--iso-psi", iso_psi);
    auto* o2 = cave->add_option("--iso-dpsi", iso_dpsi);
    cave->add_option("--format", cv_format)
        ->check(CLI::IsMember({"text", "binary"}));
    cave->add_option("--file", cv_file);

    // density
    auto* density = app.add_subcommand("density", "|Psi|^2 on the real axis");
    add_common(density, c_density);
    double d_xmin = -20.0, d_xmax = 20.0, d_tmin = 0.0, d_tmax = 10.0;
    int d_nx = 801, d_nt = 201;
    density->add_option("--xmin", d_xmin);
    density->add_option("--xmax", d_xmax);
    density->add_option("--nx", d_nx);
    density->add_option("--tmin", d_tmin);
    density->add_option("--tmax", d_tmax);
    density->add_option("--nt", d_nt);

    // divvort
    auto* divvort = app.add_subcommand(
        "divvort", "divergence/vorticity along one trajectory");
    add_common(divvort, c_divvort);
    std::string dv_launch;
    std::string dv_kind = "quantum";
    double dv_t0 = 0.0, dv_t1 = 10.0;
    divvort->add_option("--launch", dv_launch, "launch point 're,im'")
        ->required();
    divvort->add_option("--kind", dv_kind)
        ->check(CLI::IsMember({"quantum", "polya"}));
    divvort->add_option("--t0", dv_t0);
    divvort->add_option("--t1", dv_t1);

    // stagnation
    auto* stag = app.add_subcommand("stagnation", "QMF first derivative vs t");
    add_common(stag, c_stag);
    double s_re = 0.0, s_im = 0.0, s_tmin = 0.0, s_tmax = 10.0;
    int s_nt = 1001;
    stag->add_option("--re", s_re);
    stag->add_option("--im", s_im);
    stag->add_option("--tmin", s_tmin);
    stag->add_option("--tmax", s_tmax);
    stag->add_option("--nt", s_nt);

    // approx
    auto* approx = app.add_subcommand(
        "approx", "exact vs linearized trajectories near the origin");
    add_common(approx, c_approx);
    std::optional<double> a_t0;
    std::vector<double> a_offsets{-0.3, -0.2, -0.1, 0.1, 0.2, 0.3};
    double a_dtmax = 0.5;
    int a_nt = 100;
    approx->add_option("--t0", a_t0);
    approx->add_option("--offsets", a_offsets);
    approx->add_option("--dt-max", a_dtmax);
    approx->add_option("--nt", a_nt);

    // polelocal
    auto* pole = app.add_subcommand(
        "polelocal", "pole-local divergence/vorticity streamlines");
    add_common(pole, c_pole);
    int p_nt = 240, p_order = 1;
    pole->add_option("--nt", p_nt);
    pole->add_option("--order", p_order);

    CLI11_PARSE(app, argc, argv);

    try {
        if (fields->parsed())
            return run_fields(c_fields, f_t, f_xmin, f_xmax, f_nx, f_ymin,
                              f_ymax, f_ny);
        if (nodal->parsed())
            return run_nodal(c_nodal, n_tmin, n_tmax, n_nt, n_nmin, n_nmax,
                             n_angles);
        if (traj->parsed())
            return run_trajectories(c_traj, t_launch, t_kind, t_t0, t_t1);
        if (iso->parsed())
            return run_isochrone(c_iso, i_xmin, i_xmax, i_dx, i_tarr,
                                 i_tlaunch, i_kind);
        if (metrics->parsed())
            return run_metrics(c_metrics, m_xmin, m_xmax, m_dx, m_tlaunch,
                               m_tend, m_smoothing);
        if (cave->parsed()) {
            have_iso = o1->count() > 0 || o2->count() > 0;
            if (have_iso) {
                spec.iso_psi = iso_psi;
                spec.iso_dpsi = iso_dpsi;
            }
            return run_cave(c_cave, spec, have_iso, cv_format, cv_file);
        }
        if (density->parsed())
            return run_density(c_density, d_xmin, d_xmax, d_nx, d_tmin,
                               d_tmax, d_nt);
        if (divvort->parsed())
            return run_divvort(c_divvort, dv_launch, dv_kind, dv_t0, dv_t1);
        if (stag->parsed())
            return run_stagnation(c_stag, s_re, s_im, s_tmin, s_tmax, s_nt);
        if (approx->parsed())
            return run_approx(c_approx, a_t0, a_offsets, a_dtmax, a_nt);
        if (pole->parsed()) return run_polelocal(c_pole, p_nt, p_order);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
