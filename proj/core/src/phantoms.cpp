#include "shearlet/phantoms.hpp"

#include <cmath>
#include <random>

#include "shearlet/errors.hpp"

namespace shearlet::phantoms {

namespace {
double sq(double x) { return x * x; }
} // namespace

Signal2D cartoon(std::size_t n) {
    Signal2D img(n, n, 32.0);
    const double N = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double x = static_cast<double>(i) / N - 0.5;
            const double y = static_cast<double>(j) / N - 0.5;
            // Curved half-plane.
            if (y > 0.12 + 0.18 * std::sin(5.0 * x)) img(i, j) = 96.0;
            // Tilted ellipse.
            const double u = 0.8 * (x + 0.12) + 0.6 * (y + 0.18);
            const double v = -0.6 * (x + 0.12) + 0.8 * (y + 0.18);
            if (sq(u / 0.28) + sq(v / 0.16) < 1.0) img(i, j) = 200.0;
            // Disk with a hole.
            const double r2 = sq(x - 0.22) + sq(y - 0.2);
            if (r2 < sq(0.16)) img(i, j) = 150.0;
            if (r2 < sq(0.055)) img(i, j) = 60.0;
            // Small bright square, axis aligned.
            if (std::abs(x + 0.3) < 0.06 && std::abs(y + 0.32) < 0.06) img(i, j) = 255.0;
        }
    }
    return img;
}

Signal2D curves(std::size_t n) {
    Signal2D img(n, n, 0.0);
    const double N = static_cast<double>(n);
    const double w = 1.0 / N; // half thickness in unit coordinates
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double x = static_cast<double>(i) / N - 0.5;
            const double y = static_cast<double>(j) / N - 0.5;
            bool on = false;
            // Two rings.
            on |= std::abs(std::sqrt(sq(x + 0.14) + sq(y + 0.1)) - 0.27) < w;
            on |= std::abs(std::sqrt(sq(x - 0.25) + sq(y - 0.22)) - 0.14) < w;
            // Sine band crossing the frame.
            on |= std::abs(y - 0.3 * std::sin(2.0 * M_PI * (x + 0.5) * 1.25) + 0.22) < w;
            // Straight diagonal segment.
            if (x > -0.42 && x < 0.1)
                on |= std::abs(y - (0.8 * x + 0.38)) < w;
            if (on) img(i, j) = 1.0;
        }
    }
    return img;
}

Signal2D dots(std::size_t n) {
    Signal2D img(n, n, 0.0);
    const double N = static_cast<double>(n);
    const double centers[][2] = {
        {-0.35, -0.05}, {-0.22, 0.31}, {-0.05, -0.3}, {0.05, 0.12},
        {0.18, -0.12},  {0.3, 0.35},   {0.38, -0.33}, {-0.4, -0.38},
        {0.42, 0.05},   {-0.1, 0.44},  {0.12, -0.44}, {-0.28, -0.22},
    };
    const double radius = 2.6 / N;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double x = static_cast<double>(i) / N - 0.5;
            const double y = static_cast<double>(j) / N - 0.5;
            for (const auto& c : centers)
                if (sq(x - c[0]) + sq(y - c[1]) < sq(radius)) {
                    img(i, j) = 1.0;
                    break;
                }
        }
    return img;
}

Signal2D curves_plus_dots(std::size_t n) {
    Signal2D c = curves(n);
    const Signal2D d = dots(n);
    for (std::size_t i = 0; i < c.size(); ++i)
        c.raw()[i] = 255.0 * std::min(1.0, c.raw()[i] + d.raw()[i]);
    return c;
}

Signal3D cartoon_volume(std::size_t n) {
    Signal3D vol(n, n, n, 20.0);
    const double N = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const double x = static_cast<double>(i) / N - 0.5;
                const double y = static_cast<double>(j) / N - 0.5;
                const double z = static_cast<double>(k) / N - 0.5;
                if (z > 0.1 + 0.15 * std::sin(4.0 * x) * std::cos(3.0 * y))
                    vol(i, j, k) = 90.0;
                if (sq(x + 0.1) + sq(y + 0.08) + sq(z + 0.1) < sq(0.24))
                    vol(i, j, k) = 190.0;
                if (sq(x - 0.2) / sq(0.2) + sq(y - 0.15) / sq(0.12) + sq(z) / sq(0.12) < 1.0)
                    vol(i, j, k) = 140.0;
            }
    return vol;
}

Signal2D random_mask(std::size_t rows, std::size_t cols, double keep_fraction,
                     std::uint64_t seed) {
    if (!(keep_fraction >= 0.0 && keep_fraction <= 1.0))
        throw DomainError("random_mask: keep fraction must lie in [0, 1]");
    Signal2D m(rows, cols, 0.0);
    std::mt19937_64 rng(seed);
    for (auto& x : m.raw())
        x = (static_cast<double>(rng()) * 0x1.0p-64 < keep_fraction) ? 1.0 : 0.0;
    return m;
}

Signal3D random_mask(std::size_t n0, std::size_t n1, std::size_t n2, double keep_fraction,
                     std::uint64_t seed) {
    if (!(keep_fraction >= 0.0 && keep_fraction <= 1.0))
        throw DomainError("random_mask: keep fraction must lie in [0, 1]");
    Signal3D m(n0, n1, n2, 0.0);
    std::mt19937_64 rng(seed);
    for (auto& x : m.raw())
        x = (static_cast<double>(rng()) * 0x1.0p-64 < keep_fraction) ? 1.0 : 0.0;
    return m;
}

} // namespace shearlet::phantoms
