#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "shearlet/errors.hpp"

namespace shearlet {

/// Dense 2D array, row-major (axis 1 varies fastest). Axis 0 is the
/// "horizontal" axis of the filter-bank conventions used throughout.
template <typename T>
class Grid2 {
  public:
    Grid2() : n0_(0), n1_(0) {}
    Grid2(std::size_t n0, std::size_t n1, T fill = T{})
        : n0_(n0), n1_(n1), v_(n0 * n1, fill) {}

    std::size_t size0() const { return n0_; }
    std::size_t size1() const { return n1_; }
    std::size_t size() const { return v_.size(); }
    std::size_t size_along(int axis) const { return axis == 0 ? n0_ : n1_; }

    T& operator()(std::size_t i0, std::size_t i1) { return v_[i0 * n1_ + i1]; }
    const T& operator()(std::size_t i0, std::size_t i1) const { return v_[i0 * n1_ + i1]; }

    T* data() { return v_.data(); }
    const T* data() const { return v_.data(); }
    std::vector<T>& raw() { return v_; }
    const std::vector<T>& raw() const { return v_; }

    bool same_shape(const Grid2& o) const { return n0_ == o.n0_ && n1_ == o.n1_; }

  private:
    std::size_t n0_, n1_;
    std::vector<T> v_;
};

/// Dense 3D array, row-major (axis 2 varies fastest).
template <typename T>
class Grid3 {
  public:
    Grid3() : n0_(0), n1_(0), n2_(0) {}
    Grid3(std::size_t n0, std::size_t n1, std::size_t n2, T fill = T{})
        : n0_(n0), n1_(n1), n2_(n2), v_(n0 * n1 * n2, fill) {}

    std::size_t size0() const { return n0_; }
    std::size_t size1() const { return n1_; }
    std::size_t size2() const { return n2_; }
    std::size_t size() const { return v_.size(); }
    std::size_t size_along(int axis) const {
        return axis == 0 ? n0_ : (axis == 1 ? n1_ : n2_);
    }

    T& operator()(std::size_t i0, std::size_t i1, std::size_t i2) {
        return v_[(i0 * n1_ + i1) * n2_ + i2];
    }
    const T& operator()(std::size_t i0, std::size_t i1, std::size_t i2) const {
        return v_[(i0 * n1_ + i1) * n2_ + i2];
    }

    T* data() { return v_.data(); }
    const T* data() const { return v_.data(); }
    std::vector<T>& raw() { return v_; }
    const std::vector<T>& raw() const { return v_; }

    bool same_shape(const Grid3& o) const {
        return n0_ == o.n0_ && n1_ == o.n1_ && n2_ == o.n2_;
    }

  private:
    std::size_t n0_, n1_, n2_;
    std::vector<T> v_;
};

using RealGrid2 = Grid2<double>;
using RealGrid3 = Grid3<double>;
using ComplexGrid2 = Grid2<std::complex<double>>;
using ComplexGrid3 = Grid3<std::complex<double>>;

/// Real 2D image and 3D volume signals on a periodic integer grid.
using Signal2D = RealGrid2;
using Signal3D = RealGrid3;

template <typename G>
double l2_norm(const G& g) {
    double s = 0.0;
    for (const auto& x : g.raw()) s += std::norm(std::complex<double>(x));
    return std::sqrt(s);
}

inline double l2_norm(const RealGrid2& g) {
    double s = 0.0;
    for (double x : g.raw()) s += x * x;
    return std::sqrt(s);
}

inline double l2_norm(const RealGrid3& g) {
    double s = 0.0;
    for (double x : g.raw()) s += x * x;
    return std::sqrt(s);
}

inline std::size_t mod_index(std::ptrdiff_t i, std::size_t n) {
    std::ptrdiff_t m = i % static_cast<std::ptrdiff_t>(n);
    if (m < 0) m += static_cast<std::ptrdiff_t>(n);
    return static_cast<std::size_t>(m);
}

} // namespace shearlet
