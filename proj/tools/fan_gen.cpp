// Regenerates the bundled fan filter asset. The construction is pure dyadic
// arithmetic, so the output is bit-identical across platforms.
#include <cstdio>

#include "shearlet/filters.hpp"

int main(int argc, char** argv) {
    const std::string path = argc > 1 ? argv[1] : "fan_dmaxflat4.txt";
    shearlet::FanFilter fan{shearlet::fan_design::maxflat_fan(4), "dmaxflat4"};
    shearlet::save_fan_filter(fan, path);
    std::printf("wrote %s (%zux%zu, checksum %#018llx)\n", path.c_str(), fan.taps.size0(),
                fan.taps.size1(),
                static_cast<unsigned long long>(shearlet::fan_checksum(fan.taps)));
    return 0;
}
