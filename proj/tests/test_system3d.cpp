#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "shearlet/errors.hpp"
#include "shearlet/shear.hpp"
#include "shearlet/system3d.hpp"
#include "shearlet/transform.hpp"

using namespace shearlet;

namespace {
const QmfPair& qmf() {
    static const QmfPair q = QmfPair::maximally_flat_9tap();
    return q;
}
const FanFilter& fan() {
    static const FanFilter f = default_fan_filter();
    return f;
}
} // namespace

TEST_SUITE_BEGIN("system3d");

TEST_CASE("phi component") {
    SUBCASE("zero shear, zero level is the lowpass-convolved fan") {
        const Taps2d phi = build_phi_component(0, 0, 0, 1, fan(), qmf());
        const Taps2d p = upsample_filter_2d(fan().taps, 1, 2);
        const Taps2d ref = conv_axis(p, cascade(qmf(), 1).lowpass, 1);
        REQUIRE(phi.size0() == ref.size0());
        REQUIRE(phi.size1() == ref.size1());
        CHECK(oracle::max_abs_diff(phi.v, ref.v) == 0.0);
    }
    SUBCASE("matches the 2D construction with the highpass replaced by an impulse") {
        const int j = 1, d = 1, J = 3;
        for (long k = -2; k <= 2; ++k) {
            const Taps2d phi = build_phi_component(j, k, d, J, fan(), qmf());
            // 2D route: p_j * (impulse (x) h_{J-(j-d)}), then the digital shear
            const Taps2d p = upsample_filter_2d(fan().taps, std::size_t{1} << (J - j - 1),
                                                std::size_t{1} << (J - (j - d)));
            Taps2d q = conv_axis(p, Taps1d::impulse(), 0);
            q = conv_axis(q, cascade(qmf(), J - (j - d)).lowpass, 1);
            const Taps2d ref = digital_shear_taps(q, k, d, shear_interpolation_taps(qmf(), d));
            REQUIRE(phi.size0() == ref.size0());
            REQUIRE(phi.size1() == ref.size1());
            CHECK(oracle::max_abs_diff(phi.v, ref.v) <= 1e-12);
        }
    }
    SUBCASE("out-of-range shear rejected") {
        CHECK_THROWS_AS(build_phi_component(1, 3, 1, 3, fan(), qmf()), DomainError);
    }
}

TEST_CASE("redundancy formulas") {
    CHECK(redundancy_3d(ScaleProfile::from_levels({0, 0, 1}), false) == 76);
    CHECK(redundancy_3d(ScaleProfile::from_levels({1, 1, 2}), false) == 292);
    CHECK(redundancy_3d(ScaleProfile::from_levels({0}), true) == 28);
    CHECK(redundancy_3d(ScaleProfile::from_levels({}), false) == 1);
}

TEST_CASE("enumeration count equals redundancy for all small profiles") {
    for (int n = 0; n <= 3; ++n) {
        std::vector<int> levels(static_cast<std::size_t>(n), 0);
        while (true) {
            const auto profile = ScaleProfile::from_levels(levels);
            for (bool full : {false, true})
                CHECK(enumerate_filters_3d(profile, full).size() ==
                      redundancy_3d(profile, full));
            int i = 0;
            for (; i < n; ++i) {
                if (levels[static_cast<std::size_t>(i)] < 2) {
                    ++levels[static_cast<std::size_t>(i)];
                    break;
                }
                levels[static_cast<std::size_t>(i)] = 0;
            }
            if (i == n) break;
        }
    }
}

TEST_CASE("pyramid filters") {
    const auto sys = build_system_3d({16, 16, 16}, ScaleProfile::from_levels({1}), fan(),
                                     qmf(), /*full_system=*/true);
    SUBCASE("pyramid 2 permutes axes 0 and 1 of pyramid 1") {
        for (long k1 = -2; k1 <= 2; ++k1)
            for (long k2 = -2; k2 <= 2; ++k2) {
                std::size_t i1 = 0, i2 = 0;
                bool f1 = false, f2 = false;
                for (std::size_t i = 0; i < sys.index.size(); ++i) {
                    const auto& fi = sys.index[i];
                    if (fi.scale != 0 || fi.k1 != k1 || fi.k2 != k2) continue;
                    if (fi.kind == FilterKind3D::pyramid_1) { i1 = i; f1 = true; }
                    if (fi.kind == FilterKind3D::pyramid_2) { i2 = i; f2 = true; }
                }
                REQUIRE(f1);
                REQUIRE(f2);
                const ComplexGrid3 p1 = sys.filter_freq(i1);
                const ComplexGrid3 p2 = sys.filter_freq(i2);
                double worst = 0.0;
                for (std::size_t a = 0; a < 16; ++a)
                    for (std::size_t b = 0; b < 16; ++b)
                        for (std::size_t c = 0; c < 16; ++c)
                            worst = std::max(worst, std::abs(p2(a, b, c) - p1(b, a, c)));
                CHECK(worst <= 1e-10);
                if (k1 == 2 && k2 == 2) break; // full grid checked once is plenty
            }
    }
    SUBCASE("DC response vanishes") {
        for (std::size_t i = 1; i < sys.index.size(); i += 7)
            CHECK(std::abs(sys.filter_freq(i)(0, 0, 0)) <= 1e-3);
    }
    SUBCASE("Hermitian symmetry") {
        const ComplexGrid3 f = sys.filter_freq(5);
        double worst = 0.0;
        for (std::size_t a = 0; a < 16; ++a)
            for (std::size_t b = 0; b < 16; ++b)
                for (std::size_t c = 0; c < 16; ++c)
                    worst = std::max(worst,
                                     std::abs(f(a, b, c) - std::conj(f((16 - a) % 16,
                                                                       (16 - b) % 16,
                                                                       (16 - c) % 16))));
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("impulse fan degenerates to the separable tensor") {
    const auto sys = build_system_3d({16, 16, 16}, ScaleProfile::from_levels({0}),
                                     FanFilter::impulse(), qmf(), false);
    // find pyramid 1, k = (0,0)
    std::size_t idx = 0;
    for (std::size_t i = 0; i < sys.index.size(); ++i)
        if (sys.index[i].kind == FilterKind3D::pyramid_1 && sys.index[i].k1 == 0 &&
            sys.index[i].k2 == 0)
            idx = i;
    const ComplexGrid3 f = sys.filter_freq(idx);
    const auto g = cascade(qmf(), 1).highpass;
    const auto h = cascade(qmf(), 1).lowpass;
    auto dft = [&](const Taps1d& t, std::size_t s) {
        return oracle::dft_taps(t.v, t.center, double(s) / 16.0);
    };
    double worst = 0.0;
    for (std::size_t a = 0; a < 16; ++a)
        for (std::size_t b = 0; b < 16; ++b)
            for (std::size_t c = 0; c < 16; ++c)
                worst = std::max(worst, std::abs(f(a, b, c) - dft(g, a) * dft(h, b) * dft(h, c)));
    CHECK(worst <= 1e-12);
}

TEST_CASE("built system counts and frame weight") {
    const auto sys = build_system_3d({16, 16, 16}, ScaleProfile::from_levels({0, 0, 1}),
                                     fan(), qmf(), false);
    CHECK(sys.redundancy() == 76);
    const auto [A, B] = sys.frame_bounds();
    CHECK(A > 0.0);

    SUBCASE("n_scales = 0 leaves only the lowpass") {
        const auto lp = build_system_3d({8, 8, 8}, ScaleProfile::from_levels({}), fan(),
                                        qmf(), false);
        CHECK(lp.redundancy() == 1);
    }

    SUBCASE("reconstruction identity on the grid") {
        double worst = 0.0;
        RealGrid3 acc(16, 16, 16, 0.0);
        for (std::size_t i = 0; i < sys.index.size(); ++i) {
            const ComplexGrid3 f = sys.filter_freq(i);
            for (std::size_t p = 0; p < acc.size(); ++p)
                acc.raw()[p] += (std::conj(f.raw()[p]) * f.raw()[p]).real() /
                                sys.frame_weight.raw()[p];
        }
        for (double v : acc.raw()) worst = std::max(worst, std::abs(v - 1.0));
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("pyramid bands commute with the axis permutation") {
    // Swapping input axes 0 and 1 maps pyramid-1 bands onto pyramid-2 bands.
    const auto sys = build_system_3d({16, 16, 16}, ScaleProfile::from_levels({1}), fan(),
                                     qmf(), /*full_system=*/true);
    const Signal3D v = oracle::random_volume(16, 16, 16, 77);
    Signal3D vt(16, 16, 16);
    for (std::size_t a = 0; a < 16; ++a)
        for (std::size_t b = 0; b < 16; ++b)
            for (std::size_t c = 0; c < 16; ++c) vt(a, b, c) = v(b, a, c);
    const auto cv = forward(v, sys);
    const auto cvt = forward(vt, sys);
    for (long k1 = -2; k1 <= 2; ++k1)
        for (long k2 = -2; k2 <= 2; ++k2) {
            std::size_t i1 = 0, i2 = 0;
            for (std::size_t i = 0; i < sys.index.size(); ++i) {
                const auto& fi = sys.index[i];
                if (fi.scale != 0 || fi.k1 != k1 || fi.k2 != k2) continue;
                if (fi.kind == FilterKind3D::pyramid_1) i1 = i;
                if (fi.kind == FilterKind3D::pyramid_2) i2 = i;
            }
            double worst = 0.0;
            for (std::size_t a = 0; a < 16; ++a)
                for (std::size_t b = 0; b < 16; ++b)
                    for (std::size_t c = 0; c < 16; ++c)
                        worst = std::max(worst, std::abs(cvt.bands[i2](a, b, c) -
                                                         cv.bands[i1](b, a, c)));
            CHECK(worst <= 1e-10);
        }
}

TEST_SUITE_END();
