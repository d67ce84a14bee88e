#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "shearlet/grid.hpp"

namespace shearlet {

/// Finite 1D filter with a declared center index: taps[center] sits at
/// absolute position n = 0, taps[i] at n = i - center.
struct Taps1d {
    std::vector<double> v;
    std::ptrdiff_t center = 0;

    std::size_t size() const { return v.size(); }
    std::ptrdiff_t min_index() const { return -center; }
    std::ptrdiff_t max_index() const { return static_cast<std::ptrdiff_t>(v.size()) - 1 - center; }

    static Taps1d impulse() { return Taps1d{{1.0}, 0}; }
};

/// Finite 2D coefficient grid with a declared center (center0, center1).
struct Taps2d {
    RealGrid2 v;
    std::ptrdiff_t center0 = 0;
    std::ptrdiff_t center1 = 0;

    std::size_t size0() const { return v.size0(); }
    std::size_t size1() const { return v.size1(); }

    static Taps2d impulse() {
        Taps2d t;
        t.v = RealGrid2(1, 1, 1.0);
        return t;
    }
};

// Aperiodic tap arithmetic. Centers follow the support: convolution adds
// centers, zero-insertion upsampling scales them.

Taps1d conv(const Taps1d& a, const Taps1d& b);
Taps1d upsample(const Taps1d& a, std::size_t factor);
Taps1d reversed(const Taps1d& a);
Taps1d scaled(const Taps1d& a, double s);

Taps2d outer(const Taps1d& along0, const Taps1d& along1);
Taps2d conv_axis(const Taps2d& g, const Taps1d& t, int axis);
Taps2d upsample2(const Taps2d& g, std::size_t factor0, std::size_t factor1);
Taps2d transposed(const Taps2d& g);

/// Embed centered taps into a periodic grid: tap at relative index r lands
/// on grid index r mod n, accumulating on wrap-around.
RealGrid2 embed_periodic(const Taps2d& t, std::size_t n0, std::size_t n1);
std::vector<double> embed_periodic(const Taps1d& t, std::size_t n);

/// Frequency response by direct summation at a frequency in cycles
/// (xi in [-1/2, 1/2] spans the full band).
std::complex<double> frequency_response(const Taps1d& t, double xi);
std::complex<double> frequency_response(const Taps2d& t, double xi0, double xi1);

} // namespace shearlet
