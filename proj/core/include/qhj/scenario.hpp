#ifndef QHJ_SCENARIO_HPP
#define QHJ_SCENARIO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "qhj/packet.hpp"

namespace qhj {

/// Named packet configuration, the unit of CLI input.
struct Scenario {
    std::string name;
    std::vector<GaussianPacket> packets;

    Superposition superposition() const { return Superposition(packets); }
    /// One-line echo for file headers.
    std::string describe() const;
};

/// Head-on collision, vp > vs: x0 = -/+10, vp = +/-2, sigma0 = sqrt(2).
Scenario preset_case1();
/// Head-on collision, vp <~ vs: x0 = -/+5, vp = +/-1, sigma0 = sqrt(2)/4.
Scenario preset_case2();

/// Look up a preset by name; throws ScenarioParseError for unknown names.
Scenario preset(const std::string& name);

/// Parse a key-value scenario file. Keys: name, mass, hbar,
/// packet = <x0> <vp> <sigma0>. '#' starts a comment. Unknown keys are
/// rejected.
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace qhj

#endif
