#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "shearlet/filters.hpp"
#include "shearlet/grid.hpp"

namespace shearlet {

enum class FilterKind3D : std::uint8_t {
    lowpass = 0,
    pyramid_1 = 3,
    pyramid_2 = 4,
    pyramid_3 = 5,
};

struct FilterIndex3D {
    FilterKind3D kind = FilterKind3D::lowpass;
    int scale = -1;
    long k1 = 0, k2 = 0;

    bool operator==(const FilterIndex3D&) const = default;
};

/// 3D digital shearlet system. Filters are Kronecker-style products of a 1D
/// highpass spectrum along the pyramid's principal axis with two sheared 2D
/// component spectra; they are materialized on demand so that at most one
/// full 3D grid lives per worker.
class ShearletSystem3D {
  public:
    std::array<std::size_t, 3> dims{0, 0, 0};
    ScaleProfile profile;
    bool full_system = false;
    QmfPair qmf;
    FanFilter fan;

    std::vector<FilterIndex3D> index;
    RealGrid3 frame_weight;
    std::vector<double> filter_norms;

    std::size_t redundancy() const { return index.size(); }

    /// Frequency grid of filter i.
    ComplexGrid3 filter_freq(std::size_t i) const;
    /// Dual filter gamma_i = psi_i / frame weight.
    ComplexGrid3 dual_freq(std::size_t i) const;

    std::pair<double, double> frame_bounds() const;

    // Construction ingredients, filled by build_system_3d.
    struct Scale {
        int d = 0;
        Taps1d highpass;             // g_{J-j}
        std::vector<Taps2d> phi;     // sheared component taps, k = -2^d .. 2^d
    };
    std::vector<Scale> scales;
    Taps1d lowpass_taps;             // h_J
};

/// Component taps S^d_{k/2^d}(h_{J-(j-d_j)} *_axis1 p_j): the 2D shearlet
/// construction with the highpass factor replaced by an impulse.
Taps2d build_phi_component(int j, long k, int d_j, int top_level, const FanFilter& fan,
                           const QmfPair& qmf);

ShearletSystem3D build_system_3d(std::array<std::size_t, 3> dims,
                                 const ScaleProfile& profile, const FanFilter& fan,
                                 const QmfPair& qmf, bool full_system = false,
                                 int threads = 0);

std::size_t redundancy_3d(const ScaleProfile& profile, bool full_system);

/// Index records in system order: lowpass, then per scale pyramids 1..3
/// over (k1, k2); the omission rule drops pyramid-2 entries with |k1| at
/// the boundary and pyramid-3 entries with |k1| or |k2| at the boundary.
std::vector<FilterIndex3D> enumerate_filters_3d(const ScaleProfile& profile,
                                                bool full_system);

} // namespace shearlet
