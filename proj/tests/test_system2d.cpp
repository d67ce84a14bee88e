#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "shearlet/errors.hpp"
#include "shearlet/fft.hpp"
#include "shearlet/system2d.hpp"

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

TEST_SUITE_BEGIN("system2d");

TEST_CASE("wavelet tensor") {
    SUBCASE("single-level case is the base outer product") {
        const Taps2d w = build_wavelet_tensor(0, 0, 1, qmf());
        REQUIRE(w.size0() == 9);
        REQUIRE(w.size1() == 9);
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = 0; j < 9; ++j)
                CHECK(w.v(i, j) ==
                      doctest::Approx(qmf().highpass.v[i] * qmf().lowpass.v[j]).epsilon(1e-15));
    }
    SUBCASE("DC response vanishes") {
        const Taps2d w = build_wavelet_tensor(1, 1, 4, qmf());
        CHECK(std::abs(frequency_response(w, 0.0, 0.0)) <= 1e-3);
    }
    SUBCASE("tap grid dims follow the cascade lengths") {
        const Taps2d w = build_wavelet_tensor(2, 1, 4, qmf());
        CHECK(w.size0() == cascade(qmf(), 2).highpass.size());
        CHECK(w.size1() == cascade(qmf(), 3).lowpass.size());
    }
    SUBCASE("negative cascade level") {
        CHECK_THROWS_AS(build_wavelet_tensor(5, 0, 4, qmf()), DomainError);
    }
}

TEST_CASE("cone filter geometry") {
    SUBCASE("horizontal k=0 concentrates on the horizontal cone") {
        const ComplexGrid2 psi = build_shearlet_filter(2, 0, 1, 4, FilterKind2D::cone_horizontal,
                                                       fan(), qmf(), 512, 512);
        double cone = 0.0, total = 0.0;
        for (std::size_t a = 0; a < 512; ++a)
            for (std::size_t b = 0; b < 512; ++b) {
                const double x0 = a < 256 ? double(a) : double(a) - 512.0;
                const double x1 = b < 256 ? double(b) : double(b) - 512.0;
                const double e = std::norm(psi(a, b));
                total += e;
                if (std::abs(x0) >= std::abs(x1)) cone += e;
            }
        CHECK(cone / total >= 0.75);
    }
    SUBCASE("vertical cone is the transpose") {
        const ComplexGrid2 h = build_shearlet_filter(1, 1, 1, 2, FilterKind2D::cone_horizontal,
                                                     fan(), qmf(), 32, 32);
        const ComplexGrid2 v = build_shearlet_filter(1, 1, 1, 2, FilterKind2D::cone_vertical,
                                                     fan(), qmf(), 32, 32);
        double worst = 0.0;
        for (std::size_t a = 0; a < 32; ++a)
            for (std::size_t b = 0; b < 32; ++b)
                worst = std::max(worst, std::abs(v(a, b) - h(b, a)));
        CHECK(worst <= 1e-10);
    }
    SUBCASE("negated shear reflects the second axis") {
        const ComplexGrid2 plus = build_shearlet_filter(1, 1, 1, 2, FilterKind2D::cone_horizontal,
                                                        fan(), qmf(), 32, 32);
        const ComplexGrid2 minus = build_shearlet_filter(1, -1, 1, 2, FilterKind2D::cone_horizontal,
                                                         fan(), qmf(), 32, 32);
        double worst = 0.0;
        for (std::size_t a = 0; a < 32; ++a)
            for (std::size_t b = 0; b < 32; ++b)
                worst = std::max(worst,
                                 std::abs(minus(a, b) - plus(a, (32 - b) % 32)));
        CHECK(worst <= 1e-10);
    }
    SUBCASE("shear out of range") {
        CHECK_THROWS_AS(build_shearlet_filter(1, 3, 1, 2, FilterKind2D::cone_horizontal,
                                              fan(), qmf(), 32, 32),
                        DomainError);
    }
    SUBCASE("tiny grids rejected") {
        CHECK_THROWS_AS(build_shearlet_filter(1, 0, 1, 2, FilterKind2D::cone_horizontal,
                                              fan(), qmf(), 4, 32),
                        UnsupportedSizeError);
    }
}

TEST_CASE("redundancy formulas") {
    CHECK(redundancy_2d(ScaleProfile::from_levels({1}), true) == 11);
    CHECK(redundancy_2d(ScaleProfile::from_levels({1, 1, 2, 2}), false) == 49);
    CHECK(redundancy_2d(ScaleProfile::from_levels({0, 0, 1, 1}), false) == 25);
    CHECK(redundancy_2d(ScaleProfile::from_levels({}), false) == 1);
}

TEST_CASE("filter count equals redundancy for all small profiles") {
    // exhaustive over n_scales <= 5, d_j <= 3, both omission settings
    for (int n = 0; n <= 5; ++n) {
        std::vector<int> levels(static_cast<std::size_t>(n), 0);
        while (true) {
            const auto profile = ScaleProfile::from_levels(levels);
            for (bool full : {false, true})
                CHECK(enumerate_filters_2d(profile, full).size() ==
                      redundancy_2d(profile, full));
            int i = 0;
            for (; i < n; ++i) {
                if (levels[static_cast<std::size_t>(i)] < 3) {
                    ++levels[static_cast<std::size_t>(i)];
                    break;
                }
                levels[static_cast<std::size_t>(i)] = 0;
            }
            if (i == n) break;
        }
    }
}

TEST_CASE("built systems match the published redundancy") {
    auto s1 = build_system_2d(64, 64, ScaleProfile::from_levels({0, 0, 1, 1}), fan(), qmf());
    CHECK(s1.redundancy() == 25);
    auto s2 = build_system_2d(64, 64, ScaleProfile::from_levels({1, 1, 2, 2}), fan(), qmf());
    CHECK(s2.redundancy() == 49);
    auto s0 = build_system_2d(64, 64, ScaleProfile::from_levels({}), fan(), qmf());
    CHECK(s0.redundancy() == 1);
}

TEST_CASE("system invariants on a 64x64 build") {
    const auto sys = build_system_2d(64, 64, ScaleProfile::from_levels({1, 1, 2, 2}),
                                     fan(), qmf());
    SUBCASE("Hermitian symmetry of every frequency grid") {
        double worst = 0.0;
        for (const auto& f : sys.filters)
            for (std::size_t a = 0; a < 64; ++a)
                for (std::size_t b = 0; b < 64; ++b)
                    worst = std::max(worst, std::abs(f(a, b) -
                                                     std::conj(f((64 - a) % 64, (64 - b) % 64))));
        CHECK(worst <= 1e-10);
    }
    SUBCASE("frame weight equals the filter-by-filter re-sum") {
        RealGrid2 resum(64, 64, 0.0);
        for (const auto& f : sys.filters)
            for (std::size_t i = 0; i < resum.size(); ++i)
                resum.raw()[i] += std::norm(f.raw()[i]);
        CHECK(oracle::max_abs_diff(resum, sys.frame_weight) <= 1e-12);
    }
    SUBCASE("frame weight strictly positive") {
        const auto [A, B] = sys.frame_bounds();
        CHECK(A > 0.0);
        CHECK(B >= A);
    }
    SUBCASE("reconstruction identity at every frequency sample") {
        const auto& duals = sys.duals();
        double worst = 0.0;
        for (std::size_t p = 0; p < 64 * 64; ++p) {
            std::complex<double> acc = 0.0;
            for (std::size_t i = 0; i < sys.filters.size(); ++i)
                acc += duals[i].raw()[p] * std::conj(sys.filters[i].raw()[p]);
            worst = std::max(worst, std::abs(acc - 1.0));
        }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("radial energy centroid grows with the scale") {
    const auto sys = build_system_2d(128, 128, ScaleProfile::from_levels({1, 1, 2, 2}),
                                     fan(), qmf());
    double prev = -1.0;
    for (int s = 0; s < 4; ++s) {
        // locate the horizontal k=0 filter of scale s
        double centroid = 0.0, mass = 0.0;
        for (std::size_t i = 0; i < sys.index.size(); ++i) {
            const auto& fi = sys.index[i];
            if (fi.kind != FilterKind2D::cone_horizontal || fi.scale != s || fi.shear != 0)
                continue;
            for (std::size_t a = 0; a < 128; ++a)
                for (std::size_t b = 0; b < 128; ++b) {
                    const double x0 = (a < 64 ? double(a) : double(a) - 128.0) / 128.0;
                    const double x1 = (b < 64 ? double(b) : double(b) - 128.0) / 128.0;
                    const double e = std::norm(sys.filters[i](a, b));
                    centroid += std::sqrt(x0 * x0 + x1 * x1) * e;
                    mass += e;
                }
        }
        REQUIRE(mass > 0.0);
        centroid /= mass;
        CHECK(centroid > prev);
        prev = centroid;
    }
}

TEST_CASE("boundary filters nearly duplicate across cones") {
    // The maximally sheared horizontal filter pairs with the vertical one of
    // the same k. The relative distance shrinks roughly by half per shear
    // level as the straddling wedges narrow around the diagonal.
    auto boundary_distance = [](int d, std::size_t n) {
        const auto sys = build_system_2d(n, n, ScaleProfile::from_levels({d}), fan(), qmf(),
                                         /*full_system=*/true);
        const long K = 1L << d;
        const ComplexGrid2 *h = nullptr, *v = nullptr;
        for (std::size_t i = 0; i < sys.index.size(); ++i) {
            const auto& fi = sys.index[i];
            if (fi.kind == FilterKind2D::cone_horizontal && fi.shear == K)
                h = &sys.filters[i];
            if (fi.kind == FilterKind2D::cone_vertical && fi.shear == K)
                v = &sys.filters[i];
        }
        REQUIRE(h);
        REQUIRE(v);
        double num = 0.0, den = 0.0;
        for (std::size_t p = 0; p < h->size(); ++p) {
            num += std::norm(h->raw()[p] - v->raw()[p]);
            den += std::norm(h->raw()[p]);
        }
        return std::sqrt(num / den);
    };
    const double d1 = boundary_distance(1, 64);
    const double d2 = boundary_distance(2, 64);
    const double d3 = boundary_distance(3, 128);
    CHECK(d3 <= 0.1);
    CHECK(d2 <= 0.2);
    CHECK(d1 <= 0.35);
    CHECK(d2 < d1);
    CHECK(d3 < d2);
}

TEST_CASE("dual filter edge cases") {
    SUBCASE("tight single-allpass system") {
        const auto sys = build_system_2d(16, 16, ScaleProfile::from_levels({}), fan(), qmf());
        REQUIRE(sys.redundancy() == 1);
        double worst = 0.0;
        for (std::size_t p = 0; p < sys.frame_weight.size(); ++p)
            worst = std::max(worst, std::abs(sys.frame_weight.raw()[p] - 1.0));
        CHECK(worst <= 1e-12);
        const auto [A, B] = sys.frame_bounds();
        CHECK(A == doctest::Approx(1.0));
        CHECK(B == doctest::Approx(1.0));
        const auto& duals = sys.duals();
        double dworst = 0.0;
        for (std::size_t p = 0; p < duals[0].size(); ++p)
            dworst = std::max(dworst, std::abs(duals[0].raw()[p] - sys.filters[0].raw()[p]));
        CHECK(dworst <= 1e-12);
    }
    SUBCASE("singular frame rejected") {
        std::vector<ComplexGrid2> filters{ComplexGrid2(8, 8)}; // all-zero filter
        const RealGrid2 weight = frame_weight(filters);
        CHECK_THROWS_AS(dual_filters(filters, weight), SingularFrameError);
    }
}

TEST_SUITE_END();
