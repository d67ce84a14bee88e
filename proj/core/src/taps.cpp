#include "shearlet/taps.hpp"

#include <cmath>

namespace shearlet {

Taps1d conv(const Taps1d& a, const Taps1d& b) {
    Taps1d out;
    out.v.assign(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out.v[i + j] += a.v[i] * b.v[j];
    out.center = a.center + b.center;
    return out;
}

Taps1d upsample(const Taps1d& a, std::size_t factor) {
    if (factor == 1) return a;
    Taps1d out;
    out.v.assign((a.size() - 1) * factor + 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) out.v[i * factor] = a.v[i];
    out.center = a.center * static_cast<std::ptrdiff_t>(factor);
    return out;
}

Taps1d reversed(const Taps1d& a) {
    Taps1d out;
    out.v.assign(a.v.rbegin(), a.v.rend());
    out.center = static_cast<std::ptrdiff_t>(a.size()) - 1 - a.center;
    return out;
}

Taps1d scaled(const Taps1d& a, double s) {
    Taps1d out = a;
    for (double& x : out.v) x *= s;
    return out;
}

Taps2d outer(const Taps1d& along0, const Taps1d& along1) {
    Taps2d out;
    out.v = RealGrid2(along0.size(), along1.size());
    for (std::size_t i = 0; i < along0.size(); ++i)
        for (std::size_t j = 0; j < along1.size(); ++j)
            out.v(i, j) = along0.v[i] * along1.v[j];
    out.center0 = along0.center;
    out.center1 = along1.center;
    return out;
}

Taps2d conv_axis(const Taps2d& g, const Taps1d& t, int axis) {
    Taps2d out;
    if (axis == 0) {
        out.v = RealGrid2(g.size0() + t.size() - 1, g.size1());
        for (std::size_t i = 0; i < g.size0(); ++i)
            for (std::size_t k = 0; k < t.size(); ++k) {
                const double w = t.v[k];
                if (w == 0.0) continue;
                for (std::size_t j = 0; j < g.size1(); ++j)
                    out.v(i + k, j) += g.v(i, j) * w;
            }
        out.center0 = g.center0 + t.center;
        out.center1 = g.center1;
    } else {
        out.v = RealGrid2(g.size0(), g.size1() + t.size() - 1);
        for (std::size_t i = 0; i < g.size0(); ++i)
            for (std::size_t k = 0; k < t.size(); ++k) {
                const double w = t.v[k];
                if (w == 0.0) continue;
                for (std::size_t j = 0; j < g.size1(); ++j)
                    out.v(i, j + k) += g.v(i, j) * w;
            }
        out.center0 = g.center0;
        out.center1 = g.center1 + t.center;
    }
    return out;
}

Taps2d upsample2(const Taps2d& g, std::size_t factor0, std::size_t factor1) {
    if (factor0 == 1 && factor1 == 1) return g;
    Taps2d out;
    out.v = RealGrid2((g.size0() - 1) * factor0 + 1, (g.size1() - 1) * factor1 + 1);
    for (std::size_t i = 0; i < g.size0(); ++i)
        for (std::size_t j = 0; j < g.size1(); ++j)
            out.v(i * factor0, j * factor1) = g.v(i, j);
    out.center0 = g.center0 * static_cast<std::ptrdiff_t>(factor0);
    out.center1 = g.center1 * static_cast<std::ptrdiff_t>(factor1);
    return out;
}

Taps2d transposed(const Taps2d& g) {
    Taps2d out;
    out.v = RealGrid2(g.size1(), g.size0());
    for (std::size_t i = 0; i < g.size0(); ++i)
        for (std::size_t j = 0; j < g.size1(); ++j)
            out.v(j, i) = g.v(i, j);
    out.center0 = g.center1;
    out.center1 = g.center0;
    return out;
}

RealGrid2 embed_periodic(const Taps2d& t, std::size_t n0, std::size_t n1) {
    RealGrid2 out(n0, n1, 0.0);
    for (std::size_t i = 0; i < t.size0(); ++i) {
        const std::size_t r0 = mod_index(static_cast<std::ptrdiff_t>(i) - t.center0, n0);
        for (std::size_t j = 0; j < t.size1(); ++j) {
            const std::size_t r1 = mod_index(static_cast<std::ptrdiff_t>(j) - t.center1, n1);
            out(r0, r1) += t.v(i, j);
        }
    }
    return out;
}

std::vector<double> embed_periodic(const Taps1d& t, std::size_t n) {
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < t.size(); ++i)
        out[mod_index(static_cast<std::ptrdiff_t>(i) - t.center, n)] += t.v[i];
    return out;
}

std::complex<double> frequency_response(const Taps1d& t, double xi) {
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double n = static_cast<double>(static_cast<std::ptrdiff_t>(i) - t.center);
        s += t.v[i] * std::polar(1.0, -2.0 * M_PI * n * xi);
    }
    return s;
}

std::complex<double> frequency_response(const Taps2d& t, double xi0, double xi1) {
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < t.size0(); ++i) {
        const double n0 = static_cast<double>(static_cast<std::ptrdiff_t>(i) - t.center0);
        for (std::size_t j = 0; j < t.size1(); ++j) {
            const double n1 = static_cast<double>(static_cast<std::ptrdiff_t>(j) - t.center1);
            s += t.v(i, j) * std::polar(1.0, -2.0 * M_PI * (n0 * xi0 + n1 * xi1));
        }
    }
    return s;
}

} // namespace shearlet
