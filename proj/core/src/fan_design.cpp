#include "shearlet/filters.hpp"

#include "shearlet/errors.hpp"

namespace shearlet::fan_design {

namespace {

// Sum of two centered tap grids with support alignment.
Taps2d combine(const Taps2d& a, double sa, const Taps2d& b, double sb) {
    const std::ptrdiff_t lo0 = std::min(-a.center0, -b.center0);
    const std::ptrdiff_t hi0 = std::max(static_cast<std::ptrdiff_t>(a.size0()) - 1 - a.center0,
                                        static_cast<std::ptrdiff_t>(b.size0()) - 1 - b.center0);
    const std::ptrdiff_t lo1 = std::min(-a.center1, -b.center1);
    const std::ptrdiff_t hi1 = std::max(static_cast<std::ptrdiff_t>(a.size1()) - 1 - a.center1,
                                        static_cast<std::ptrdiff_t>(b.size1()) - 1 - b.center1);
    Taps2d out;
    out.v = RealGrid2(static_cast<std::size_t>(hi0 - lo0 + 1),
                      static_cast<std::size_t>(hi1 - lo1 + 1));
    out.center0 = -lo0;
    out.center1 = -lo1;
    for (std::size_t i = 0; i < a.size0(); ++i)
        for (std::size_t j = 0; j < a.size1(); ++j)
            out.v(i + static_cast<std::size_t>(-a.center0 - lo0),
                  j + static_cast<std::size_t>(-a.center1 - lo1)) += sa * a.v(i, j);
    for (std::size_t i = 0; i < b.size0(); ++i)
        for (std::size_t j = 0; j < b.size1(); ++j)
            out.v(i + static_cast<std::size_t>(-b.center0 - lo0),
                  j + static_cast<std::size_t>(-b.center1 - lo1)) += sb * b.v(i, j);
    return out;
}

Taps2d conv2(const Taps2d& a, const Taps2d& b) {
    Taps2d out;
    out.v = RealGrid2(a.size0() + b.size0() - 1, a.size1() + b.size1() - 1);
    for (std::size_t i = 0; i < a.size0(); ++i)
        for (std::size_t j = 0; j < a.size1(); ++j) {
            const double x = a.v(i, j);
            if (x == 0.0) continue;
            for (std::size_t p = 0; p < b.size0(); ++p)
                for (std::size_t q = 0; q < b.size1(); ++q)
                    out.v(i + p, j + q) += x * b.v(p, q);
        }
    out.center0 = a.center0 + b.center0;
    out.center1 = a.center1 + b.center1;
    return out;
}

// Lagrange interpolation weights at the half-sample point for 2N nodes
// -(N-1) ... N. These are the odd taps (times two) of the maximally flat
// half-band filter of the given order.
std::vector<double> lagrange_halfsample_weights(int order) {
    const int n_nodes = 2 * order;
    std::vector<double> w(static_cast<std::size_t>(n_nodes));
    for (int i = 0; i < n_nodes; ++i) {
        const double xi = static_cast<double>(i - order + 1);
        double prod = 1.0;
        for (int j = 0; j < n_nodes; ++j) {
            if (j == i) continue;
            const double xj = static_cast<double>(j - order + 1);
            prod *= (0.5 - xj) / (xi - xj);
        }
        w[static_cast<std::size_t>(i)] = prod;
    }
    return w;
}

} // namespace

Taps2d maxflat_fan(int order) {
    if (order < 1) throw DomainError("maxflat_fan: order must be >= 1");

    // Diamond McClellan kernel t = (cos w0 + cos w1)/2 as a tap grid.
    Taps2d kappa;
    kappa.v = RealGrid2(3, 3, 0.0);
    kappa.center0 = kappa.center1 = 1;
    kappa.v(0, 1) = kappa.v(2, 1) = 0.25;
    kappa.v(1, 0) = kappa.v(1, 2) = 0.25;

    const std::vector<double> w = lagrange_halfsample_weights(order);

    // D = 1/2 delta + sum over odd m of 2 h_m T_m(kappa), h_m = w/2.
    Taps2d diamond = Taps2d::impulse();
    diamond.v(0, 0) = 0.5;

    Taps2d t_prev = Taps2d::impulse(); // T_0
    Taps2d t_cur = kappa;              // T_1
    for (int m = 1; m <= 2 * order - 1; ++m) {
        if (m & 1) {
            // Node at x = (m+1)/2 carries the weight of tap m.
            const double hm = w[static_cast<std::size_t>(order - 1 + (m + 1) / 2)] / 2.0;
            diamond = combine(diamond, 1.0, t_cur, 2.0 * hm);
        }
        Taps2d t_next = combine(conv2(kappa, t_cur), 2.0, t_prev, -1.0);
        t_prev = std::move(t_cur);
        t_cur = std::move(t_next);
    }

    // Quincunx-style modulation: shift the passband from the diamond around
    // the origin to the fan around the horizontal frequency axis.
    for (std::size_t i = 0; i < diamond.size0(); ++i) {
        const std::ptrdiff_t n0 = static_cast<std::ptrdiff_t>(i) - diamond.center0;
        if (n0 & 1)
            for (std::size_t j = 0; j < diamond.size1(); ++j)
                if (diamond.v(i, j) != 0.0) diamond.v(i, j) = -diamond.v(i, j);
    }
    return diamond;
}

} // namespace shearlet::fan_design
