#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "shearlet/taps.hpp"

namespace shearlet {

/// Quadrature-mirror pair. The lowpass is normalized so its taps sum to 1;
/// the mirror highpass is g(n) = (-1)^n h(n) with n counted from the center.
struct QmfPair {
    Taps1d lowpass;
    Taps1d highpass;

    static QmfPair from_lowpass(const Taps1d& low);
    /// Default pair built around the symmetric maximally flat 9-tap lowpass.
    static QmfPair maximally_flat_9tap();
};

/// Level-j iterated filters h_j, g_j of a quadrature-mirror pair.
/// h_j realizes the product response prod_{k<j} h_hat(2^k xi), g_j the
/// response g_hat(2^{j-1} xi) h_hat_{j-1}(xi); level 0 is the unit impulse.
struct FilterCascade {
    int level = 0;
    Taps1d lowpass;
    Taps1d highpass;
};

/// Symmetric maximally flat 9-tap lowpass, taps summing to 1, with an exact
/// half-band -3 dB point. Closed form in x = sin^2(omega/2):
/// response = 1 + (8*sqrt(2)-15) x^3 + (14-8*sqrt(2)) x^4.
Taps1d default_lowpass();

/// g(n) = (-1)^n h(n), indices relative to the declared center.
Taps1d mirror_highpass(const Taps1d& lowpass);

FilterCascade cascade(const QmfPair& pair, int level);

/// max over shifts l of |2 sum_n h(n) h(n+2l) - delta_{l0}|.
double orthonormality_defect(const Taps1d& lowpass);

/// Interpolation taps for the refinement inside the digital shear:
/// the level-d lowpass cascade rescaled by sqrt(2)^d so the
/// upsample/convolve/convolve/downsample chain is norm preserving for
/// orthonormal filters.
Taps1d shear_interpolation_taps(const QmfPair& pair, int level);

/// 2D directional fan filter with recorded provenance.
struct FanFilter {
    Taps2d taps;
    std::string provenance;

    static FanFilter impulse();
};

/// The bundled maximally flat fan filter (odd-sized grid, checksum verified).
FanFilter default_fan_filter();

/// Reads a fan filter asset: first line "rows cols center_row center_col",
/// then one whitespace-separated row of decimal taps per line.
FanFilter load_fan_filter(const std::string& path);
void save_fan_filter(const FanFilter& fan, const std::string& path);

/// FNV-1a 64 over dims, centers and the little-endian tap bytes.
std::uint64_t fan_checksum(const Taps2d& taps);

/// Zero-insertion upsampling of a 2D filter; factors must be powers of two.
Taps2d upsample_filter_2d(const Taps2d& filter, std::size_t factor0, std::size_t factor1);

/// Per-scale system geometry: scales j = j0 ... j0 + n_scales - 1 with one
/// shear level d_j >= 0 each.
struct ScaleProfile {
    int n_scales = 0;
    std::vector<int> shear_levels;
    int coarsest_scale_offset = 0;

    int top_level() const { return coarsest_scale_offset + n_scales; }
    void validate() const;

    static ScaleProfile from_levels(std::vector<int> levels, int j0 = 0);
    /// d_j = ceil(j/2) for j = j0 ... j0 + n - 1.
    static ScaleProfile parabolic(int n_scales, int j0 = 1);
};

/// d_j = ceil((2 - alpha_j) j / 2) for absolute scales starting at j0;
/// each alpha_j must lie in the open interval (0, 2).
std::vector<int> alpha_to_shear_levels(std::span<const double> alpha, int j0);

namespace fan_design {
/// Maximally flat fan filter: a diamond half-band filter obtained by the
/// diamond McClellan transform of the 1D Lagrange half-band filter of the
/// given order, modulated by (-1)^{n0} to move its passband onto the
/// horizontal fan. All taps are dyadic rationals, so the construction is
/// bit-reproducible.
Taps2d maxflat_fan(int order);
} // namespace fan_design

} // namespace shearlet
