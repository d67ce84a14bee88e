#pragma once

#include <optional>
#include <string>

#include "shearlet/system2d.hpp"
#include "shearlet/system3d.hpp"

namespace shearlet {

/// Plain-text description of a shearlet system: grid size, scale offset,
/// shear levels, boundary-filter flag, QMF taps and the fan asset checksum.
/// Enough to rebuild the system bit-identically.
struct SystemDescriptor {
    bool is_3d = false;
    std::size_t dims[3] = {0, 0, 0};
    int j0 = 0;
    std::vector<int> shear_levels;
    bool full_system = false;
    Taps1d qmf_lowpass;
    std::string fan_name;          // "dmaxflat4", "impulse" or "custom"
    std::uint64_t fan_checksum = 0;
};

SystemDescriptor describe(const ShearletSystem2D& sys);
SystemDescriptor describe(const ShearletSystem3D& sys);

void write_descriptor(const SystemDescriptor& d, const std::string& path);
SystemDescriptor read_descriptor(const std::string& path);

/// Resolves the named fan asset; throws FormatError for unknown names or a
/// checksum that does not match the bundled asset.
FanFilter fan_from_descriptor(const SystemDescriptor& d);

ShearletSystem2D build_from_descriptor_2d(const SystemDescriptor& d, int threads = 0);
ShearletSystem3D build_from_descriptor_3d(const SystemDescriptor& d, int threads = 0);

} // namespace shearlet
