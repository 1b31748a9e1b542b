#include "qhj/cave.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "qhj/errors.hpp"

namespace qhj {

namespace {

double axis_value(const AxisSpec& a, int i) {
    if (a.count == 1) return a.min;
    return a.min + (a.max - a.min) * i / (a.count - 1);
}

void write_f32(std::ostream& os, double v) {
    const float f = static_cast<float>(v);
    std::uint32_t u;
    std::memcpy(&u, &f, 4);
    if constexpr (std::endian::native == std::endian::big)
        u = __builtin_bswap32(u);
    os.write(reinterpret_cast<const char*>(&u), 4);
}

double read_f32(std::istream& is) {
    std::uint32_t u;
    is.read(reinterpret_cast<char*>(&u), 4);
    if constexpr (std::endian::native == std::endian::big)
        u = __builtin_bswap32(u);
    float f;
    std::memcpy(&f, &u, 4);
    return f;
}

}  // namespace

CaveGrid sample_cave(const Superposition& sup, const CaveGridSpec& spec) {
    for (const AxisSpec* a : {&spec.x, &spec.y, &spec.t})
        if (a->count < 1 || !std::isfinite(a->min) || !std::isfinite(a->max))
            throw Error("cave grid axes must be finite with count >= 1");
    const std::size_t total = static_cast<std::size_t>(spec.x.count) *
                              spec.y.count * spec.t.count;
    if (total > spec.budget)
        throw GridTooLargeError("requested grid exceeds the point budget");

    CaveGrid g;
    g.x = spec.x;
    g.y = spec.y;
    g.t = spec.t;
    g.iso_psi = spec.iso_psi;
    g.iso_dpsi = spec.iso_dpsi;
    g.psi_abs.resize(total);
    g.dpsi_abs.resize(total);
    for (int it = 0; it < spec.t.count; ++it) {
        const double t = axis_value(spec.t, it);
        for (int iy = 0; iy < spec.y.count; ++iy) {
            const double y = axis_value(spec.y, iy);
            for (int ix = 0; ix < spec.x.count; ++ix) {
                const cplx z(axis_value(spec.x, ix), y);
                const std::size_t k = g.index(ix, iy, it);
                g.psi_abs[k] = std::abs(sup.value(z, t));
                g.dpsi_abs[k] = std::abs(sup.dz(z, t));
            }
        }
    }
    return g;
}

void export_volume(const CaveGrid& g, const std::filesystem::path& path,
                   VolumeFormat format) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open volume file for writing: " + path.string());
    os.precision(12);
    os << "qhj-volume 1\n";
    os << "format " << (format == VolumeFormat::binary ? "binary" : "text")
       << "\n";
    os << "axis x " << g.x.min << " " << g.x.max << " " << g.x.count << "\n";
    os << "axis y " << g.y.min << " " << g.y.max << " " << g.y.count << "\n";
    os << "axis t " << g.t.min << " " << g.t.max << " " << g.t.count << "\n";
    os << "iso psi " << g.iso_psi << "\n";
    os << "iso dpsi " << g.iso_dpsi << "\n";
    os << "scenario " << g.scenario << "\n";
    os << "end_header\n";
    if (format == VolumeFormat::binary) {
        for (double v : g.psi_abs) write_f32(os, v);
        for (double v : g.dpsi_abs) write_f32(os, v);
    } else {
        for (double v : g.psi_abs) os << v << "\n";
        for (double v : g.dpsi_abs) os << v << "\n";
    }
    if (!os) throw IoError("write failure on volume file: " + path.string());
}

CaveGrid read_volume(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open volume file: " + path.string());
    std::string line;
    if (!std::getline(is, line) || line != "qhj-volume 1")
        throw IoError("not a qhj volume file: " + path.string());
    CaveGrid g;
    bool binary = false;
    while (std::getline(is, line) && line != "end_header") {
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "format") {
            std::string f;
            ss >> f;
            binary = (f == "binary");
        } else if (key == "axis") {
            std::string name;
            AxisSpec a;
            ss >> name >> a.min >> a.max >> a.count;
            if (name == "x")
                g.x = a;
            else if (name == "y")
                g.y = a;
            else
                g.t = a;
        } else if (key == "iso") {
            std::string which;
            double v;
            ss >> which >> v;
            (which == "psi" ? g.iso_psi : g.iso_dpsi) = v;
        } else if (key == "scenario") {
            std::getline(ss >> std::ws, g.scenario);
        } else {
            throw IoError("unknown volume header key: " + key);
        }
    }
    const std::size_t total =
        static_cast<std::size_t>(g.x.count) * g.y.count * g.t.count;
    g.psi_abs.resize(total);
    g.dpsi_abs.resize(total);
    if (binary) {
        for (auto& v : g.psi_abs) v = read_f32(is);
        for (auto& v : g.dpsi_abs) v = read_f32(is);
    } else {
        for (auto& v : g.psi_abs) is >> v;
        for (auto& v : g.dpsi_abs) is >> v;
    }
    if (!is) throw IoError("truncated volume file: " + path.string());
    return g;
}

}  // namespace qhj
