#include "shearlet/system3d.hpp"

#include <algorithm>
#include <cmath>

#include "shearlet/errors.hpp"
#include "shearlet/fft.hpp"
#include "shearlet/parallel.hpp"
#include "shearlet/shear.hpp"

namespace shearlet {

Taps2d build_phi_component(int j, long k, int d_j, int top_level, const FanFilter& fan,
                           const QmfPair& qmf) {
    if (d_j < 0) throw DomainError("build_phi_component: negative shear level");
    const long kmax = 1L << d_j;
    if (k < -kmax || k > kmax) throw DomainError("build_phi_component: |k| exceeds 2^d");
    const int lh = top_level - (j - d_j);
    if (top_level - j < 1 || lh < 0)
        throw DomainError("build_phi_component: scale out of range");
    const Taps2d p = upsample_filter_2d(fan.taps, std::size_t{1} << (top_level - j - 1),
                                        std::size_t{1} << lh);
    const Taps2d q = conv_axis(p, cascade(qmf, lh).lowpass, 1);
    return digital_shear_taps(q, k, d_j, shear_interpolation_taps(qmf, d_j));
}

std::size_t redundancy_3d(const ScaleProfile& profile, bool full_system) {
    profile.validate();
    std::size_t r = 1;
    for (int d : profile.shear_levels) {
        const std::size_t q = 2 * (std::size_t{1} << d) + 1;
        r += full_system ? 3 * q * q : 3 * q * q - 6 * q + 4;
    }
    return r;
}

namespace {

// Pyramid p has principal axis p-1 (0-based); its first component plane
// pairs the principal axis with the lower remaining axis, the second with
// the higher one. The boundary duplicates dropped by the omission rule are
// exactly the seams already represented by a lower-numbered pyramid.
struct PyramidAxes {
    int principal, sec1, sec2;
};

PyramidAxes pyramid_axes(FilterKind3D kind) {
    switch (kind) {
        case FilterKind3D::pyramid_1: return {0, 1, 2};
        case FilterKind3D::pyramid_2: return {1, 0, 2};
        case FilterKind3D::pyramid_3: return {2, 0, 1};
        default: throw DomainError("pyramid_axes: not a pyramid filter");
    }
}

} // namespace

std::vector<FilterIndex3D> enumerate_filters_3d(const ScaleProfile& profile, bool full_system) {
    std::vector<FilterIndex3D> idx;
    idx.push_back(FilterIndex3D{FilterKind3D::lowpass, -1, 0, 0});
    for (int s = 0; s < profile.n_scales; ++s) {
        const int j = profile.coarsest_scale_offset + s;
        const long K = 1L << profile.shear_levels[static_cast<std::size_t>(s)];
        auto on_boundary = [K](long k) { return k == K || k == -K; };
        for (FilterKind3D kind :
             {FilterKind3D::pyramid_1, FilterKind3D::pyramid_2, FilterKind3D::pyramid_3}) {
            for (long k1 = -K; k1 <= K; ++k1)
                for (long k2 = -K; k2 <= K; ++k2) {
                    if (!full_system) {
                        if (kind == FilterKind3D::pyramid_2 && on_boundary(k1)) continue;
                        if (kind == FilterKind3D::pyramid_3 &&
                            (on_boundary(k1) || on_boundary(k2)))
                            continue;
                    }
                    idx.push_back(FilterIndex3D{kind, j, k1, k2});
                }
        }
    }
    return idx;
}

ShearletSystem3D build_system_3d(std::array<std::size_t, 3> dims,
                                 const ScaleProfile& profile, const FanFilter& fan,
                                 const QmfPair& qmf, bool full_system, int threads) {
    for (std::size_t d : dims)
        if (d < 8) throw UnsupportedSizeError("build_system_3d: each dim must be >= 8");
    profile.validate();

    ShearletSystem3D sys;
    sys.dims = dims;
    sys.profile = profile;
    sys.full_system = full_system;
    sys.qmf = qmf;
    sys.fan = fan;
    sys.index = enumerate_filters_3d(profile, full_system);

    const int J = profile.top_level();
    sys.lowpass_taps = cascade(qmf, J).lowpass;
    sys.scales.resize(static_cast<std::size_t>(profile.n_scales));
    parallel_for(static_cast<std::size_t>(profile.n_scales), threads, [&](std::size_t s) {
        const int j = profile.coarsest_scale_offset + static_cast<int>(s);
        const int d = profile.shear_levels[s];
        auto& sc = sys.scales[s];
        sc.d = d;
        sc.highpass = cascade(qmf, J - j).highpass;
        const long K = 1L << d;
        sc.phi.resize(static_cast<std::size_t>(2 * K + 1));
        for (long k = -K; k <= K; ++k)
            sc.phi[static_cast<std::size_t>(k + K)] = build_phi_component(j, k, d, J, fan, qmf);
    });

    // Frame weight by streaming the filters, one 3D grid per worker.
    const int t = resolve_threads(threads);
    std::vector<RealGrid3> partial(static_cast<std::size_t>(t),
                                   RealGrid3(dims[0], dims[1], dims[2], 0.0));
    sys.filter_norms.assign(sys.index.size(), 0.0);
    {
        std::vector<std::thread> pool;
        const std::size_t n = sys.index.size();
        for (int w = 0; w < t; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < n;
                     i += static_cast<std::size_t>(t)) {
                    const ComplexGrid3 f = sys.filter_freq(i);
                    auto& acc = partial[static_cast<std::size_t>(w)];
                    double e = 0.0;
                    for (std::size_t p = 0; p < f.size(); ++p) {
                        const double m = std::norm(f.raw()[p]);
                        acc.raw()[p] += m;
                        e += m;
                    }
                    sys.filter_norms[i] = std::sqrt(e / static_cast<double>(f.size()));
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    sys.frame_weight = RealGrid3(dims[0], dims[1], dims[2], 0.0);
    for (const auto& p : partial)
        for (std::size_t i = 0; i < p.size(); ++i) sys.frame_weight.raw()[i] += p.raw()[i];
    return sys;
}

ComplexGrid3 ShearletSystem3D::filter_freq(std::size_t i) const {
    const FilterIndex3D& fi = index.at(i);
    ComplexGrid3 out(dims[0], dims[1], dims[2]);
    if (fi.kind == FilterKind3D::lowpass) {
        std::array<std::vector<std::complex<double>>, 3> h;
        for (int a = 0; a < 3; ++a)
            h[static_cast<std::size_t>(a)] =
                fft::forward_real(embed_periodic(lowpass_taps, dims[static_cast<std::size_t>(a)]));
        for (std::size_t a = 0; a < dims[0]; ++a)
            for (std::size_t b = 0; b < dims[1]; ++b)
                for (std::size_t c = 0; c < dims[2]; ++c)
                    out(a, b, c) = h[0][a] * h[1][b] * h[2][c];
        return out;
    }

    const std::size_t s = static_cast<std::size_t>(fi.scale - profile.coarsest_scale_offset);
    const auto& sc = scales.at(s);
    const PyramidAxes ax = pyramid_axes(fi.kind);
    const long K = 1L << sc.d;

    const std::size_t np = dims[static_cast<std::size_t>(ax.principal)];
    const std::size_t ns1 = dims[static_cast<std::size_t>(ax.sec1)];
    const std::size_t ns2 = dims[static_cast<std::size_t>(ax.sec2)];

    const std::vector<std::complex<double>> g =
        fft::forward_real(embed_periodic(sc.highpass, np));
    ComplexGrid2 phi1 = fft::forward_real(
        embed_periodic(sc.phi[static_cast<std::size_t>(fi.k1 + K)], np, ns1));
    ComplexGrid2 phi2 = fft::forward_real(
        embed_periodic(sc.phi[static_cast<std::size_t>(fi.k2 + K)], np, ns2));

    std::size_t id[3];
    for (std::size_t a = 0; a < dims[0]; ++a)
        for (std::size_t b = 0; b < dims[1]; ++b)
            for (std::size_t c = 0; c < dims[2]; ++c) {
                id[0] = a; id[1] = b; id[2] = c;
                const std::size_t p = id[static_cast<std::size_t>(ax.principal)];
                const std::size_t s1 = id[static_cast<std::size_t>(ax.sec1)];
                const std::size_t s2 = id[static_cast<std::size_t>(ax.sec2)];
                out(a, b, c) = g[p] * phi1(p, s1) * phi2(p, s2);
            }
    return out;
}

ComplexGrid3 ShearletSystem3D::dual_freq(std::size_t i) const {
    const double wmin =
        *std::min_element(frame_weight.raw().begin(), frame_weight.raw().end());
    if (wmin < 1e-12) throw SingularFrameError("dual_freq: frame weight below 1e-12");
    ComplexGrid3 f = filter_freq(i);
    for (std::size_t p = 0; p < f.size(); ++p) f.raw()[p] /= frame_weight.raw()[p];
    return f;
}

std::pair<double, double> ShearletSystem3D::frame_bounds() const {
    const auto [lo, hi] =
        std::minmax_element(frame_weight.raw().begin(), frame_weight.raw().end());
    return {*lo, *hi};
}

} // namespace shearlet
