#ifndef QHJ_CAVE_HPP
#define QHJ_CAVE_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "qhj/packet.hpp"

namespace qhj {

struct AxisSpec {
    double min = 0.0;
    double max = 1.0;
    int count = 2;
};

struct CaveGridSpec {
    AxisSpec x;
    AxisSpec y;
    AxisSpec t;
    double iso_psi = 0.0;   ///< recorded in metadata only
    double iso_dpsi = 0.0;
    std::size_t budget = 100000000;  ///< max grid points
};

/// |Psi| and |dPsi/dz| sampled on a regular (x, y, t) grid, row-major with
/// x fastest, then y, then t.
struct CaveGrid {
    AxisSpec x, y, t;
    double iso_psi = 0.0;
    double iso_dpsi = 0.0;
    std::string scenario;  ///< free-form echo for the volume header
    std::vector<double> psi_abs;
    std::vector<double> dpsi_abs;

    std::size_t index(int ix, int iy, int it) const {
        return static_cast<std::size_t>(it) * y.count * x.count +
               static_cast<std::size_t>(iy) * x.count + ix;
    }
};

/// Dense evaluation of the field magnitudes. Throws GridTooLargeError when
/// the requested point count exceeds the budget.
CaveGrid sample_cave(const Superposition& sup, const CaveGridSpec& spec);

enum class VolumeFormat { text, binary };

/// Self-describing volume file: plain-text header, then psi_abs followed by
/// dpsi_abs, x-fastest row-major, as decimal text or little-endian float32.
void export_volume(const CaveGrid& grid, const std::filesystem::path& path,
                   VolumeFormat format);

/// Read back a file written by export_volume.
CaveGrid read_volume(const std::filesystem::path& path);

}  // namespace qhj

#endif
