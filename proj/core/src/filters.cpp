#include "shearlet/filters.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "shearlet/errors.hpp"

namespace shearlet {

Taps1d default_lowpass() {
    const double r2 = std::sqrt(2.0);
    const double a = (7.0 - 4.0 * r2) / 128.0;
    const double b = (8.0 * r2 - 13.0) / 64.0;
    const double c = (8.0 - 8.0 * r2) / 64.0;
    const double d = (29.0 - 8.0 * r2) / 64.0;
    const double e = (9.0 + 20.0 * r2) / 64.0;
    return Taps1d{{a, b, c, d, e, d, c, b, a}, 4};
}

Taps1d mirror_highpass(const Taps1d& lowpass) {
    if (lowpass.v.empty()) throw DomainError("mirror_highpass: empty tap sequence");
    Taps1d out = lowpass;
    for (std::size_t i = 0; i < out.v.size(); ++i) {
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(i) - out.center;
        if (n & 1) out.v[i] = -out.v[i];
    }
    return out;
}

QmfPair QmfPair::from_lowpass(const Taps1d& low) {
    return QmfPair{low, mirror_highpass(low)};
}

QmfPair QmfPair::maximally_flat_9tap() {
    return from_lowpass(default_lowpass());
}

FilterCascade cascade(const QmfPair& pair, int level) {
    if (level < 0) throw DomainError("cascade: negative level");
    FilterCascade out;
    out.level = level;
    if (level == 0) {
        out.lowpass = Taps1d::impulse();
        out.highpass = Taps1d::impulse();
        return out;
    }
    Taps1d h = pair.lowpass;
    for (int j = 1; j < level; ++j)
        h = conv(h, upsample(pair.lowpass, std::size_t{1} << j));
    out.lowpass = h;
    // g_j = up(g, 2^{j-1}) * h_{j-1}
    Taps1d g = upsample(pair.highpass, std::size_t{1} << (level - 1));
    if (level > 1) {
        Taps1d hprev = pair.lowpass;
        for (int j = 1; j < level - 1; ++j)
            hprev = conv(hprev, upsample(pair.lowpass, std::size_t{1} << j));
        g = conv(g, hprev);
    }
    out.highpass = g;
    return out;
}

double orthonormality_defect(const Taps1d& lowpass) {
    const std::ptrdiff_t L = static_cast<std::ptrdiff_t>(lowpass.size());
    double worst = 0.0;
    for (std::ptrdiff_t l = -L; l <= L; ++l) {
        double s = 0.0;
        for (std::ptrdiff_t n = 0; n < L; ++n) {
            const std::ptrdiff_t m = n + 2 * l;
            if (m >= 0 && m < L) s += lowpass.v[n] * lowpass.v[m];
        }
        const double target = (l == 0) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(2.0 * s - target));
    }
    return worst;
}

Taps1d shear_interpolation_taps(const QmfPair& pair, int level) {
    if (level < 0) throw DomainError("shear_interpolation_taps: negative level");
    return scaled(cascade(pair, level).lowpass, std::pow(std::sqrt(2.0), level));
}

FanFilter FanFilter::impulse() {
    return FanFilter{Taps2d::impulse(), "impulse"};
}

std::uint64_t fan_checksum(const Taps2d& taps) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const void* p, std::size_t n) {
        const auto* b = static_cast<const unsigned char*>(p);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= b[i];
            h *= 1099511628211ull;
        }
    };
    const std::uint64_t meta[4] = {taps.size0(), taps.size1(),
                                   static_cast<std::uint64_t>(taps.center0),
                                   static_cast<std::uint64_t>(taps.center1)};
    mix(meta, sizeof(meta));
    for (double x : taps.v.raw()) {
        std::uint64_t bits;
        std::memcpy(&bits, &x, sizeof(bits));
        unsigned char le[8];
        for (int i = 0; i < 8; ++i) le[i] = static_cast<unsigned char>(bits >> (8 * i));
        mix(le, 8);
    }
    return h;
}

namespace {
// Checksum of fan_design::maxflat_fan(4), the bundled default asset.
constexpr std::uint64_t kDefaultFanChecksum = 0xb942f71dc884b1baull;
} // namespace

FanFilter default_fan_filter() {
    FanFilter fan{fan_design::maxflat_fan(4), "dmaxflat4"};
    if (fan_checksum(fan.taps) != kDefaultFanChecksum)
        throw AssetError("default_fan_filter: checksum mismatch on bundled fan filter");
    return fan;
}

FanFilter load_fan_filter(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw AssetError("fan filter asset not readable: " + path);
    std::size_t rows = 0, cols = 0;
    std::ptrdiff_t c0 = 0, c1 = 0;
    if (!(in >> rows >> cols >> c0 >> c1) || rows == 0 || cols == 0)
        throw AssetError("fan filter asset header corrupt: " + path);
    Taps2d t;
    t.v = RealGrid2(rows, cols);
    t.center0 = c0;
    t.center1 = c1;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (!(in >> t.v(i, j)))
                throw AssetError("fan filter asset truncated: " + path);
    return FanFilter{t, "file:" + path};
}

void save_fan_filter(const FanFilter& fan, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw AssetError("cannot write fan filter asset: " + path);
    out << fan.taps.size0() << ' ' << fan.taps.size1() << ' ' << fan.taps.center0
        << ' ' << fan.taps.center1 << '\n';
    out.precision(17);
    for (std::size_t i = 0; i < fan.taps.size0(); ++i) {
        for (std::size_t j = 0; j < fan.taps.size1(); ++j) {
            if (j) out << ' ';
            out << fan.taps.v(i, j);
        }
        out << '\n';
    }
    if (!out) throw AssetError("write failed: " + path);
}

namespace {
bool is_pow2(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }
} // namespace

Taps2d upsample_filter_2d(const Taps2d& filter, std::size_t factor0, std::size_t factor1) {
    if (!is_pow2(factor0) || !is_pow2(factor1))
        throw DomainError("upsample_filter_2d: factors must be powers of two");
    return upsample2(filter, factor0, factor1);
}

void ScaleProfile::validate() const {
    if (n_scales < 0) throw ConfigError("ScaleProfile: n_scales must be >= 0");
    if (coarsest_scale_offset < 0)
        throw ConfigError("ScaleProfile: coarsest scale offset must be >= 0");
    if (shear_levels.size() != static_cast<std::size_t>(n_scales))
        throw ConfigError("ScaleProfile: shear_levels length must equal n_scales");
    for (int d : shear_levels)
        if (d < 0) throw ConfigError("ScaleProfile: shear levels must be >= 0");
}

ScaleProfile ScaleProfile::from_levels(std::vector<int> levels, int j0) {
    ScaleProfile p;
    p.n_scales = static_cast<int>(levels.size());
    p.shear_levels = std::move(levels);
    p.coarsest_scale_offset = j0;
    p.validate();
    return p;
}

ScaleProfile ScaleProfile::parabolic(int n_scales, int j0) {
    std::vector<int> levels(static_cast<std::size_t>(n_scales));
    for (int i = 0; i < n_scales; ++i) {
        const int j = j0 + i;
        levels[static_cast<std::size_t>(i)] = (j + 1) / 2;
    }
    return from_levels(std::move(levels), j0);
}

std::vector<int> alpha_to_shear_levels(std::span<const double> alpha, int j0) {
    std::vector<int> out;
    out.reserve(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const double a = alpha[i];
        if (!(a > 0.0 && a < 2.0))
            throw DomainError("alpha_to_shear_levels: alpha must lie in (0, 2)");
        const int j = j0 + static_cast<int>(i);
        out.push_back(static_cast<int>(std::ceil((2.0 - a) * static_cast<double>(j) / 2.0)));
    }
    return out;
}

} // namespace shearlet
