#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "shearlet/filters.hpp"
#include "shearlet/grid.hpp"

namespace shearlet {

enum class FilterKind2D : std::uint8_t {
    lowpass = 0,
    cone_horizontal = 1,
    cone_vertical = 2,
};

struct FilterIndex2D {
    FilterKind2D kind = FilterKind2D::lowpass;
    int scale = -1; // absolute scale j; -1 for the lowpass
    long shear = 0;

    bool operator==(const FilterIndex2D&) const = default;
};

/// Full 2D digital shearlet system on a fixed periodic grid: frequency
/// domain filters for both cones plus the separable lowpass, the frame
/// weight, and (on demand) the dual filters giving exact reconstruction.
class ShearletSystem2D {
  public:
    std::size_t rows = 0, cols = 0;
    ScaleProfile profile;
    bool full_system = false;
    QmfPair qmf;
    FanFilter fan;

    std::vector<FilterIndex2D> index;
    std::vector<ComplexGrid2> filters;   // aligned with index
    RealGrid2 frame_weight;
    std::vector<double> filter_norms;    // spatial L2 norm per filter

    std::size_t redundancy() const { return filters.size(); }

    /// gamma_i = psi_i / frame weight; cached after the first call.
    const std::vector<ComplexGrid2>& duals() const;

    std::pair<double, double> frame_bounds() const;

  private:
    mutable std::vector<ComplexGrid2> duals_;
};

/// W_j = g_{J-j} (axis 0) outer h_{J-(j-d_j)} (axis 1).
Taps2d build_wavelet_tensor(int j, int d_j, int top_level, const QmfPair& qmf);

/// The spatial taps of one cone filter (horizontal-cone orientation; the
/// vertical cone transposes them).
Taps2d build_shearlet_taps(int j, long k, int d_j, int top_level, const FanFilter& fan,
                           const QmfPair& qmf);

/// Frequency grid of one cone filter on a rows x cols periodic grid.
ComplexGrid2 build_shearlet_filter(int j, long k, int d_j, int top_level,
                                   FilterKind2D cone, const FanFilter& fan,
                                   const QmfPair& qmf, std::size_t rows, std::size_t cols);

ShearletSystem2D build_system_2d(std::size_t rows, std::size_t cols,
                                 const ScaleProfile& profile, const FanFilter& fan,
                                 const QmfPair& qmf, bool full_system = false,
                                 int threads = 0);

std::size_t redundancy_2d(const ScaleProfile& profile, bool full_system);

/// Index records in system order: lowpass, then per scale the horizontal
/// cone k = -2^d..2^d followed by the vertical cone (boundary shears
/// k = +-2^d dropped unless full_system).
std::vector<FilterIndex2D> enumerate_filters_2d(const ScaleProfile& profile,
                                                bool full_system);

/// Pointwise sum of squared magnitudes over a filter list.
RealGrid2 frame_weight(const std::vector<ComplexGrid2>& filters);

/// Pointwise division by the frame weight. Throws SingularFrameError when
/// the weight dips below 1e-12.
std::vector<ComplexGrid2> dual_filters(const std::vector<ComplexGrid2>& filters,
                                       const RealGrid2& weight);

} // namespace shearlet
