#include "shearlet/system2d.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "shearlet/errors.hpp"
#include "shearlet/fft.hpp"
#include "shearlet/parallel.hpp"
#include "shearlet/shear.hpp"

namespace shearlet {

Taps2d build_wavelet_tensor(int j, int d_j, int top_level, const QmfPair& qmf) {
    const int lg = top_level - j;
    const int lh = top_level - (j - d_j);
    if (lg < 0 || lh < 0) throw DomainError("build_wavelet_tensor: negative cascade level");
    return outer(cascade(qmf, lg).highpass, cascade(qmf, lh).lowpass);
}

Taps2d build_shearlet_taps(int j, long k, int d_j, int top_level, const FanFilter& fan,
                           const QmfPair& qmf) {
    if (d_j < 0) throw DomainError("build_shearlet_taps: negative shear level");
    const long kmax = 1L << d_j;
    if (k < -kmax || k > kmax) throw DomainError("build_shearlet_taps: |k| exceeds 2^d");
    const int lg = top_level - j;
    const int lh = top_level - (j - d_j);
    if (lg < 1 || lh < 0) throw DomainError("build_shearlet_taps: scale out of range");

    // p_j * W_j with W_j = g_{J-j} x h_{J-(j-d_j)} done as two axis
    // convolutions of the upsampled fan (the tensor is separable).
    const Taps2d p = upsample_filter_2d(fan.taps, std::size_t{1} << (top_level - j - 1),
                                        std::size_t{1} << lh);
    Taps2d q = conv_axis(p, cascade(qmf, lg).highpass, 0);
    q = conv_axis(q, cascade(qmf, lh).lowpass, 1);
    return digital_shear_taps(q, k, d_j, shear_interpolation_taps(qmf, d_j));
}

ComplexGrid2 build_shearlet_filter(int j, long k, int d_j, int top_level,
                                   FilterKind2D cone, const FanFilter& fan,
                                   const QmfPair& qmf, std::size_t rows, std::size_t cols) {
    if (rows < 8 || cols < 8)
        throw UnsupportedSizeError("build_shearlet_filter: grid must be at least 8x8");
    Taps2d t = build_shearlet_taps(j, k, d_j, top_level, fan, qmf);
    if (cone == FilterKind2D::cone_vertical) t = transposed(t);
    return fft::forward_real(embed_periodic(t, rows, cols));
}

std::size_t redundancy_2d(const ScaleProfile& profile, bool full_system) {
    profile.validate();
    std::size_t r = 1;
    for (int d : profile.shear_levels) {
        const std::size_t per_cone = 2 * (std::size_t{1} << d) + 1;
        r += full_system ? 2 * per_cone : 2 * per_cone - 2;
    }
    return r;
}

std::vector<FilterIndex2D> enumerate_filters_2d(const ScaleProfile& profile, bool full_system) {
    std::vector<FilterIndex2D> idx;
    idx.push_back(FilterIndex2D{FilterKind2D::lowpass, -1, 0});
    for (int s = 0; s < profile.n_scales; ++s) {
        const int j = profile.coarsest_scale_offset + s;
        const long kmax = 1L << profile.shear_levels[static_cast<std::size_t>(s)];
        for (long k = -kmax; k <= kmax; ++k)
            idx.push_back(FilterIndex2D{FilterKind2D::cone_horizontal, j, k});
        for (long k = -kmax; k <= kmax; ++k) {
            if (!full_system && (k == kmax || k == -kmax)) continue;
            idx.push_back(FilterIndex2D{FilterKind2D::cone_vertical, j, k});
        }
    }
    return idx;
}

ShearletSystem2D build_system_2d(std::size_t rows, std::size_t cols,
                                 const ScaleProfile& profile, const FanFilter& fan,
                                 const QmfPair& qmf, bool full_system, int threads) {
    if (rows < 8 || cols < 8)
        throw UnsupportedSizeError("build_system_2d: grid must be at least 8x8");
    profile.validate();

    ShearletSystem2D sys;
    sys.rows = rows;
    sys.cols = cols;
    sys.profile = profile;
    sys.full_system = full_system;
    sys.qmf = qmf;
    sys.fan = fan;
    sys.index = enumerate_filters_2d(profile, full_system);
    sys.filters.resize(sys.index.size());

    const int J = profile.top_level();
    parallel_for(sys.index.size(), threads, [&](std::size_t i) {
        const FilterIndex2D& fi = sys.index[i];
        if (fi.kind == FilterKind2D::lowpass) {
            const Taps1d hJ = cascade(qmf, J).lowpass;
            sys.filters[i] = fft::forward_real(embed_periodic(outer(hJ, hJ), rows, cols));
        } else {
            const int s = fi.scale - profile.coarsest_scale_offset;
            sys.filters[i] = build_shearlet_filter(
                fi.scale, fi.shear, profile.shear_levels[static_cast<std::size_t>(s)], J,
                fi.kind, fan, qmf, rows, cols);
        }
    });

    sys.frame_weight = frame_weight(sys.filters);

    sys.filter_norms.resize(sys.filters.size());
    const double inv_n = 1.0 / static_cast<double>(rows * cols);
    for (std::size_t i = 0; i < sys.filters.size(); ++i) {
        double s = 0.0;
        for (const auto& z : sys.filters[i].raw()) s += std::norm(z);
        sys.filter_norms[i] = std::sqrt(s * inv_n);
    }
    return sys;
}

RealGrid2 frame_weight(const std::vector<ComplexGrid2>& filters) {
    if (filters.empty()) throw ConfigError("frame_weight: no filters");
    RealGrid2 w(filters[0].size0(), filters[0].size1(), 0.0);
    for (const auto& f : filters) {
        if (!f.same_shape(filters[0])) throw ShapeError("frame_weight: mixed filter shapes");
        for (std::size_t i = 0; i < w.size(); ++i) w.raw()[i] += std::norm(f.raw()[i]);
    }
    return w;
}

std::vector<ComplexGrid2> dual_filters(const std::vector<ComplexGrid2>& filters,
                                       const RealGrid2& weight) {
    const double wmin = *std::min_element(weight.raw().begin(), weight.raw().end());
    if (wmin < 1e-12)
        throw SingularFrameError("dual_filters: frame weight below 1e-12");
    std::vector<ComplexGrid2> duals(filters.size());
    for (std::size_t i = 0; i < filters.size(); ++i) {
        duals[i] = filters[i];
        for (std::size_t p = 0; p < weight.size(); ++p)
            duals[i].raw()[p] /= weight.raw()[p];
    }
    return duals;
}

const std::vector<ComplexGrid2>& ShearletSystem2D::duals() const {
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (duals_.empty() && !filters.empty())
        duals_ = dual_filters(filters, frame_weight);
    return duals_;
}

std::pair<double, double> ShearletSystem2D::frame_bounds() const {
    const auto [lo, hi] =
        std::minmax_element(frame_weight.raw().begin(), frame_weight.raw().end());
    return {*lo, *hi};
}

} // namespace shearlet
