#include "shearlet/shear.hpp"

#include <atomic>

#include "shearlet/errors.hpp"

namespace shearlet {

namespace {

std::atomic<std::size_t> g_warnings{0};

void check_axis2(int axis) {
    if (axis < 0 || axis > 1) throw DomainError("invalid axis for 2D signal");
}
void check_axis3(int axis) {
    if (axis < 0 || axis > 2) throw DomainError("invalid axis for 3D signal");
}
bool is_pow2(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

template <typename G>
G upsample_axis_impl(const G& s, int axis, std::size_t factor) {
    if (!is_pow2(factor)) throw DomainError("upsample_axis: factor must be a power of two");
    if (factor == 1) return s;
    G out = [&] {
        if constexpr (requires { s.size2(); }) {
            return G(axis == 0 ? s.size0() * factor : s.size0(),
                     axis == 1 ? s.size1() * factor : s.size1(),
                     axis == 2 ? s.size2() * factor : s.size2(), 0.0);
        } else {
            return G(axis == 0 ? s.size0() * factor : s.size0(),
                     axis == 1 ? s.size1() * factor : s.size1(), 0.0);
        }
    }();
    if constexpr (requires { s.size2(); }) {
        for (std::size_t i = 0; i < s.size0(); ++i)
            for (std::size_t j = 0; j < s.size1(); ++j)
                for (std::size_t k = 0; k < s.size2(); ++k)
                    out(axis == 0 ? i * factor : i, axis == 1 ? j * factor : j,
                        axis == 2 ? k * factor : k) = s(i, j, k);
    } else {
        for (std::size_t i = 0; i < s.size0(); ++i)
            for (std::size_t j = 0; j < s.size1(); ++j)
                out(axis == 0 ? i * factor : i, axis == 1 ? j * factor : j) = s(i, j);
    }
    return out;
}

template <typename G>
G downsample_axis_impl(const G& s, int axis, std::size_t factor) {
    if (!is_pow2(factor)) throw DomainError("downsample_axis: factor must be a power of two");
    if (factor == 1) return s;
    if (s.size_along(axis) % factor != 0)
        throw DomainError("downsample_axis: axis length not divisible by factor");
    if constexpr (requires { s.size2(); }) {
        G out(axis == 0 ? s.size0() / factor : s.size0(),
              axis == 1 ? s.size1() / factor : s.size1(),
              axis == 2 ? s.size2() / factor : s.size2(), 0.0);
        for (std::size_t i = 0; i < out.size0(); ++i)
            for (std::size_t j = 0; j < out.size1(); ++j)
                for (std::size_t k = 0; k < out.size2(); ++k)
                    out(i, j, k) = s(axis == 0 ? i * factor : i, axis == 1 ? j * factor : j,
                                     axis == 2 ? k * factor : k);
        return out;
    } else {
        G out(axis == 0 ? s.size0() / factor : s.size0(),
              axis == 1 ? s.size1() / factor : s.size1(), 0.0);
        for (std::size_t i = 0; i < out.size0(); ++i)
            for (std::size_t j = 0; j < out.size1(); ++j)
                out(i, j) = s(axis == 0 ? i * factor : i, axis == 1 ? j * factor : j);
        return out;
    }
}

void convolve_line(const double* in, double* out, std::size_t n, std::size_t stride,
                   const Taps1d& taps) {
    for (std::size_t m = 0; m < n; ++m) {
        double acc = 0.0;
        for (std::size_t i = 0; i < taps.size(); ++i) {
            const std::ptrdiff_t rel = static_cast<std::ptrdiff_t>(i) - taps.center;
            const std::size_t src = mod_index(static_cast<std::ptrdiff_t>(m) - rel, n);
            acc += taps.v[i] * in[src * stride];
        }
        out[m * stride] = acc;
    }
}

template <typename G>
G convolve_axis_impl(const G& s, const Taps1d& taps, int axis) {
    if (taps.v.empty()) throw DomainError("convolve_axis: empty taps");
    const std::size_t n = s.size_along(axis);
    if (taps.size() > 4 * n) g_warnings.fetch_add(1, std::memory_order_relaxed);
    G out = s;
    if constexpr (requires { s.size2(); }) {
        const std::size_t n0 = s.size0(), n1 = s.size1(), n2 = s.size2();
        if (axis == 0) {
            for (std::size_t j = 0; j < n1; ++j)
                for (std::size_t k = 0; k < n2; ++k)
                    convolve_line(s.data() + j * n2 + k, out.data() + j * n2 + k, n0, n1 * n2, taps);
        } else if (axis == 1) {
            for (std::size_t i = 0; i < n0; ++i)
                for (std::size_t k = 0; k < n2; ++k)
                    convolve_line(s.data() + i * n1 * n2 + k, out.data() + i * n1 * n2 + k, n1, n2, taps);
        } else {
            for (std::size_t i = 0; i < n0; ++i)
                for (std::size_t j = 0; j < n1; ++j)
                    convolve_line(s.data() + (i * n1 + j) * n2, out.data() + (i * n1 + j) * n2, n2, 1, taps);
        }
    } else {
        const std::size_t n0 = s.size0(), n1 = s.size1();
        if (axis == 0) {
            for (std::size_t j = 0; j < n1; ++j)
                convolve_line(s.data() + j, out.data() + j, n0, n1, taps);
        } else {
            for (std::size_t i = 0; i < n0; ++i)
                convolve_line(s.data() + i * n1, out.data() + i * n1, n1, 1, taps);
        }
    }
    return out;
}

} // namespace

Signal2D upsample_axis(const Signal2D& s, int axis, std::size_t factor) {
    check_axis2(axis);
    return upsample_axis_impl(s, axis, factor);
}
Signal3D upsample_axis(const Signal3D& s, int axis, std::size_t factor) {
    check_axis3(axis);
    return upsample_axis_impl(s, axis, factor);
}

Signal2D downsample_axis(const Signal2D& s, int axis, std::size_t factor) {
    check_axis2(axis);
    return downsample_axis_impl(s, axis, factor);
}
Signal3D downsample_axis(const Signal3D& s, int axis, std::size_t factor) {
    check_axis3(axis);
    return downsample_axis_impl(s, axis, factor);
}

Signal2D convolve_axis(const Signal2D& s, const Taps1d& taps, int axis) {
    check_axis2(axis);
    return convolve_axis_impl(s, taps, axis);
}
Signal3D convolve_axis(const Signal3D& s, const Taps1d& taps, int axis) {
    check_axis3(axis);
    return convolve_axis_impl(s, taps, axis);
}

Signal2D resample_integer_shear(const Signal2D& s, long k, int sheared_axis, int shear_axis) {
    check_axis2(sheared_axis);
    check_axis2(shear_axis);
    if (sheared_axis == shear_axis)
        throw DomainError("resample_integer_shear: axes must differ");
    const std::size_t ns = s.size_along(sheared_axis);
    Signal2D out(s.size0(), s.size1());
    for (std::size_t i = 0; i < s.size0(); ++i)
        for (std::size_t j = 0; j < s.size1(); ++j) {
            const std::ptrdiff_t n_shear =
                static_cast<std::ptrdiff_t>(sheared_axis == 0 ? j : i);
            const std::ptrdiff_t n_sheared =
                static_cast<std::ptrdiff_t>(sheared_axis == 0 ? i : j);
            const std::size_t src = mod_index(n_sheared + k * n_shear, ns);
            out(i, j) = (sheared_axis == 0)
                            ? s(src, static_cast<std::size_t>(n_shear))
                            : s(static_cast<std::size_t>(n_shear), src);
        }
    return out;
}

Signal3D resample_integer_shear(const Signal3D& s, long k, int sheared_axis, int shear_axis) {
    check_axis3(sheared_axis);
    check_axis3(shear_axis);
    if (sheared_axis == shear_axis)
        throw DomainError("resample_integer_shear: axes must differ");
    const std::size_t ns = s.size_along(sheared_axis);
    Signal3D out(s.size0(), s.size1(), s.size2());
    std::size_t idx[3];
    for (idx[0] = 0; idx[0] < s.size0(); ++idx[0])
        for (idx[1] = 0; idx[1] < s.size1(); ++idx[1])
            for (idx[2] = 0; idx[2] < s.size2(); ++idx[2]) {
                const std::ptrdiff_t n_shear = static_cast<std::ptrdiff_t>(idx[shear_axis]);
                const std::ptrdiff_t n_sheared = static_cast<std::ptrdiff_t>(idx[sheared_axis]);
                std::size_t src[3] = {idx[0], idx[1], idx[2]};
                src[sheared_axis] = mod_index(n_sheared + k * n_shear, ns);
                out(idx[0], idx[1], idx[2]) = s(src[0], src[1], src[2]);
            }
    return out;
}

namespace {

template <typename G>
G digital_shear_impl(const G& s, long k, int d, const Taps1d& interp_taps,
                     int sheared_axis, int shear_axis) {
    if (d < 0) throw DomainError("digital_shear: negative refinement level");
    const long kmax = 1L << d;
    if (k < -kmax || k > kmax)
        throw DomainError("digital_shear: |k| exceeds 2^d");
    if (d == 0) return resample_integer_shear(s, k, sheared_axis, shear_axis);
    const std::size_t factor = std::size_t{1} << d;
    G up = upsample_axis(s, sheared_axis, factor);
    up = convolve_axis(up, interp_taps, sheared_axis);
    up = resample_integer_shear(up, k, sheared_axis, shear_axis);
    up = convolve_axis(up, reversed(interp_taps), sheared_axis);
    return downsample_axis(up, sheared_axis, factor);
}

} // namespace

Signal2D digital_shear(const Signal2D& s, long k, int d, const Taps1d& interp_taps,
                       int sheared_axis, int shear_axis) {
    return digital_shear_impl(s, k, d, interp_taps, sheared_axis, shear_axis);
}

Signal3D digital_shear(const Signal3D& s, long k, int d, const Taps1d& interp_taps,
                       int sheared_axis, int shear_axis) {
    return digital_shear_impl(s, k, d, interp_taps, sheared_axis, shear_axis);
}

Taps2d digital_shear_taps(const Taps2d& t, long k, int d, const Taps1d& interp_taps) {
    if (d < 0) throw DomainError("digital_shear_taps: negative refinement level");
    const long kmax = 1L << d;
    if (k < -kmax || k > kmax)
        throw DomainError("digital_shear_taps: |k| exceeds 2^d");

    // Integer shear on the centered support: rel (b0, b1) <- (b0 + k*b1, b1).
    auto shear_support = [](const Taps2d& in, long kk) {
        if (kk == 0) return in;
        const std::ptrdiff_t lo1 = -in.center1;
        const std::ptrdiff_t hi1 = static_cast<std::ptrdiff_t>(in.size1()) - 1 - in.center1;
        const std::ptrdiff_t lo0in = -in.center0;
        const std::ptrdiff_t hi0in = static_cast<std::ptrdiff_t>(in.size0()) - 1 - in.center0;
        std::ptrdiff_t lo0 = std::min(lo0in - kk * lo1, lo0in - kk * hi1);
        std::ptrdiff_t hi0 = std::max(hi0in - kk * lo1, hi0in - kk * hi1);
        Taps2d out;
        out.v = RealGrid2(static_cast<std::size_t>(hi0 - lo0 + 1), in.size1());
        out.center0 = -lo0;
        out.center1 = in.center1;
        for (std::size_t j = 0; j < in.size1(); ++j) {
            const std::ptrdiff_t b1 = static_cast<std::ptrdiff_t>(j) - in.center1;
            for (std::size_t i = 0; i < in.size0(); ++i) {
                const std::ptrdiff_t a0 = static_cast<std::ptrdiff_t>(i) - in.center0;
                const std::ptrdiff_t b0 = a0 - kk * b1; // a0 = b0 + k*b1
                out.v(static_cast<std::size_t>(b0 + out.center0), j) = in.v(i, j);
            }
        }
        return out;
    };

    if (d == 0) return shear_support(t, k);

    const std::size_t factor = std::size_t{1} << d;
    Taps2d up = upsample2(t, factor, 1);
    up = conv_axis(up, interp_taps, 0);
    up = shear_support(up, k);
    up = conv_axis(up, reversed(interp_taps), 0);

    // Keep taps at relative indices divisible by 2^d.
    const std::ptrdiff_t lo = -up.center0;
    const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(up.size0()) - 1 - up.center0;
    const std::ptrdiff_t f = static_cast<std::ptrdiff_t>(factor);
    auto ceil_div = [](std::ptrdiff_t a, std::ptrdiff_t b) {
        return a >= 0 ? (a + b - 1) / b : -((-a) / b);
    };
    auto floor_div = [](std::ptrdiff_t a, std::ptrdiff_t b) {
        return a >= 0 ? a / b : -((-a + b - 1) / b);
    };
    const std::ptrdiff_t qlo = ceil_div(lo, f);
    const std::ptrdiff_t qhi = floor_div(hi, f);
    Taps2d out;
    out.v = RealGrid2(static_cast<std::size_t>(qhi - qlo + 1), up.size1());
    out.center0 = -qlo;
    out.center1 = up.center1;
    for (std::ptrdiff_t q = qlo; q <= qhi; ++q)
        for (std::size_t j = 0; j < up.size1(); ++j)
            out.v(static_cast<std::size_t>(q - qlo), j) =
                up.v(static_cast<std::size_t>(q * f + up.center0), j);
    return out;
}

std::size_t warning_count() { return g_warnings.load(std::memory_order_relaxed); }
void reset_warning_count() { g_warnings.store(0, std::memory_order_relaxed); }

} // namespace shearlet
