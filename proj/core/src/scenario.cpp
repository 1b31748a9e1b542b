#include "qhj/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qhj/errors.hpp"

namespace qhj {

std::string Scenario::describe() const {
    std::ostringstream ss;
    ss.precision(12);
    ss << name;
    for (const auto& p : packets)
        ss << " packet(" << p.x0 << "," << p.vp << "," << p.sigma0 << ")";
    ss << " mass=" << packets.front().mass << " hbar=" << packets.front().hbar;
    return ss.str();
}

Scenario preset_case1() {
    const double s = std::sqrt(2.0);
    return {"case1", {{-10.0, 2.0, s}, {10.0, -2.0, s}}};
}

Scenario preset_case2() {
    const double s = std::sqrt(2.0) / 4.0;
    return {"case2", {{-5.0, 1.0, s}, {5.0, -1.0, s}}};
}

Scenario preset(const std::string& name) {
    if (name == "case1") return preset_case1();
    if (name == "case2") return preset_case2();
    throw ScenarioParseError("unknown preset: " + name);
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw ScenarioParseError("cannot open scenario file: " + path.string());
    Scenario sc;
    sc.name = "unnamed";
    double mass = 1.0, hbar = 1.0;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ss(line);
        std::string key;
        if (!(ss >> key)) continue;
        std::string eq;
        ss >> eq;
        if (eq != "=")
            throw ScenarioParseError("expected 'key = value' at line " +
                                     std::to_string(lineno));
        if (key == "name") {
            ss >> sc.name;
        } else if (key == "mass") {
            if (!(ss >> mass))
                throw ScenarioParseError("bad mass at line " + std::to_string(lineno));
        } else if (key == "hbar") {
            if (!(ss >> hbar))
                throw ScenarioParseError("bad hbar at line " + std::to_string(lineno));
        } else if (key == "packet") {
            GaussianPacket p;
            if (!(ss >> p.x0 >> p.vp >> p.sigma0))
                throw ScenarioParseError("packet needs '<x0> <vp> <sigma0>' at line " +
                                         std::to_string(lineno));
            sc.packets.push_back(p);
        } else {
            throw ScenarioParseError("unknown key '" + key + "' at line " +
                                     std::to_string(lineno));
        }
        std::string extra;
        if (ss >> extra)
            throw ScenarioParseError("trailing content at line " +
                                     std::to_string(lineno));
    }
    if (sc.packets.empty())
        throw ScenarioParseError("scenario has no packets: " + path.string());
    for (auto& p : sc.packets) {
        p.mass = mass;
        p.hbar = hbar;
        if (!(p.sigma0 > 0.0))
            throw ScenarioParseError("packet sigma0 must be > 0");
    }
    if (!(mass > 0.0) || !(hbar > 0.0))
        throw ScenarioParseError("mass and hbar must be > 0");
    return sc;
}

}  // namespace qhj
