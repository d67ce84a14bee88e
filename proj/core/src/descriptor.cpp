#include "shearlet/descriptor.hpp"

#include <fstream>
#include <sstream>

#include "shearlet/errors.hpp"

namespace shearlet {

namespace {

std::string fan_name_of(const FanFilter& fan) {
    if (fan.provenance == "dmaxflat4" || fan.provenance == "impulse") return fan.provenance;
    return "custom";
}

SystemDescriptor describe_common(const ScaleProfile& profile, bool full_system,
                                 const QmfPair& qmf, const FanFilter& fan) {
    SystemDescriptor d;
    d.j0 = profile.coarsest_scale_offset;
    d.shear_levels = profile.shear_levels;
    d.full_system = full_system;
    d.qmf_lowpass = qmf.lowpass;
    d.fan_name = fan_name_of(fan);
    d.fan_checksum = fan_checksum(fan.taps);
    return d;
}

} // namespace

SystemDescriptor describe(const ShearletSystem2D& sys) {
    SystemDescriptor d = describe_common(sys.profile, sys.full_system, sys.qmf, sys.fan);
    d.is_3d = false;
    d.dims[0] = sys.rows;
    d.dims[1] = sys.cols;
    return d;
}

SystemDescriptor describe(const ShearletSystem3D& sys) {
    SystemDescriptor d = describe_common(sys.profile, sys.full_system, sys.qmf, sys.fan);
    d.is_3d = true;
    d.dims[0] = sys.dims[0];
    d.dims[1] = sys.dims[1];
    d.dims[2] = sys.dims[2];
    return d;
}

void write_descriptor(const SystemDescriptor& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write system descriptor: " + path);
    out << "shearlet-system 1\n";
    out << "dims";
    for (int i = 0; i < (d.is_3d ? 3 : 2); ++i) out << ' ' << d.dims[i];
    out << '\n';
    out << "j0 " << d.j0 << '\n';
    out << "shear_levels";
    for (int v : d.shear_levels) out << ' ' << v;
    out << '\n';
    out << "full_system " << (d.full_system ? 1 : 0) << '\n';
    out << "qmf_center " << d.qmf_lowpass.center << '\n';
    out << "qmf";
    out.precision(17);
    for (double v : d.qmf_lowpass.v) out << ' ' << v;
    out << '\n';
    out << "fan " << d.fan_name << ' ' << std::hex << d.fan_checksum << std::dec << '\n';
    if (!out) throw FormatError("descriptor write failed: " + path);
}

SystemDescriptor read_descriptor(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open system descriptor: " + path);
    SystemDescriptor d;
    std::string line;
    bool saw_magic = false, saw_dims = false, saw_levels = false, saw_qmf = false,
         saw_fan = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key.empty() || key[0] == '#') continue;
        if (key == "shearlet-system") {
            int version = 0;
            if (!(ls >> version) || version != 1)
                throw FormatError("descriptor: unsupported version: " + path);
            saw_magic = true;
        } else if (key == "dims") {
            std::vector<std::size_t> v;
            std::size_t x;
            while (ls >> x) v.push_back(x);
            if (v.size() != 2 && v.size() != 3)
                throw FormatError("descriptor: dims must have 2 or 3 entries: " + path);
            d.is_3d = v.size() == 3;
            for (std::size_t i = 0; i < v.size(); ++i) d.dims[i] = v[i];
            saw_dims = true;
        } else if (key == "j0") {
            if (!(ls >> d.j0)) throw FormatError("descriptor: bad j0: " + path);
        } else if (key == "shear_levels") {
            int v;
            d.shear_levels.clear();
            while (ls >> v) d.shear_levels.push_back(v);
            saw_levels = true;
        } else if (key == "full_system") {
            int v = 0;
            if (!(ls >> v)) throw FormatError("descriptor: bad full_system: " + path);
            d.full_system = v != 0;
        } else if (key == "qmf_center") {
            if (!(ls >> d.qmf_lowpass.center))
                throw FormatError("descriptor: bad qmf_center: " + path);
        } else if (key == "qmf") {
            double v;
            d.qmf_lowpass.v.clear();
            while (ls >> v) d.qmf_lowpass.v.push_back(v);
            if (d.qmf_lowpass.v.empty())
                throw FormatError("descriptor: empty qmf taps: " + path);
            saw_qmf = true;
        } else if (key == "fan") {
            if (!(ls >> d.fan_name >> std::hex >> d.fan_checksum))
                throw FormatError("descriptor: bad fan line: " + path);
            saw_fan = true;
        } else {
            throw FormatError("descriptor: unknown key '" + key + "': " + path);
        }
    }
    if (!saw_magic || !saw_dims || !saw_levels || !saw_qmf || !saw_fan)
        throw FormatError("descriptor: missing required fields: " + path);
    return d;
}

FanFilter fan_from_descriptor(const SystemDescriptor& d) {
    FanFilter fan;
    if (d.fan_name == "dmaxflat4")
        fan = default_fan_filter();
    else if (d.fan_name == "impulse")
        fan = FanFilter::impulse();
    else
        throw FormatError("descriptor: cannot rebuild a custom fan asset");
    if (fan_checksum(fan.taps) != d.fan_checksum)
        throw FormatError("descriptor: fan checksum does not match the bundled asset");
    return fan;
}

ShearletSystem2D build_from_descriptor_2d(const SystemDescriptor& d, int threads) {
    if (d.is_3d) throw FormatError("descriptor: expected a 2D system");
    const auto profile = ScaleProfile::from_levels(d.shear_levels, d.j0);
    return build_system_2d(d.dims[0], d.dims[1], profile, fan_from_descriptor(d),
                           QmfPair::from_lowpass(d.qmf_lowpass), d.full_system, threads);
}

ShearletSystem3D build_from_descriptor_3d(const SystemDescriptor& d, int threads) {
    if (!d.is_3d) throw FormatError("descriptor: expected a 3D system");
    const auto profile = ScaleProfile::from_levels(d.shear_levels, d.j0);
    return build_system_3d({d.dims[0], d.dims[1], d.dims[2]}, profile,
                           fan_from_descriptor(d), QmfPair::from_lowpass(d.qmf_lowpass),
                           d.full_system, threads);
}

} // namespace shearlet
