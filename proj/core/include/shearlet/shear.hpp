#pragma once

#include "shearlet/grid.hpp"
#include "shearlet/taps.hpp"

namespace shearlet {

// Periodic-grid operators. Axis indices follow the grid storage: axis 0 is
// the horizontal filter-bank axis, axis 1 the second axis (axis 2 in 3D).

Signal2D upsample_axis(const Signal2D& s, int axis, std::size_t factor);
Signal3D upsample_axis(const Signal3D& s, int axis, std::size_t factor);

/// Circular convolution along one axis, centered per the tap center index.
/// Taps longer than 4x the axis length still compute (the taps periodize)
/// but raise the warning counter.
Signal2D convolve_axis(const Signal2D& s, const Taps1d& taps, int axis);
Signal3D convolve_axis(const Signal3D& s, const Taps1d& taps, int axis);

Signal2D downsample_axis(const Signal2D& s, int axis, std::size_t factor);
Signal3D downsample_axis(const Signal3D& s, int axis, std::size_t factor);

/// out(n_shear, n_sheared) = in(n_shear, n_sheared + k * n_shear), indices
/// along sheared_axis wrapping periodically. A bijective re-indexing.
Signal2D resample_integer_shear(const Signal2D& s, long k, int sheared_axis, int shear_axis);
Signal3D resample_integer_shear(const Signal3D& s, long k, int sheared_axis, int shear_axis);

/// Sub-integer shear by k/2^d: upsample by 2^d along sheared_axis, convolve
/// with the interpolation taps, integer shear, convolve with the reversed
/// taps, downsample. d == 0 reduces to resample_integer_shear. Requires
/// |k| <= 2^d.
Signal2D digital_shear(const Signal2D& s, long k, int d, const Taps1d& interp_taps,
                       int sheared_axis, int shear_axis);
Signal3D digital_shear(const Signal3D& s, long k, int d, const Taps1d& interp_taps,
                       int sheared_axis, int shear_axis);

/// Aperiodic counterpart acting on centered tap grids: same five stages on
/// the infinite integer grid, support growing as needed. Axis 0 is sheared
/// against axis 1, with displacements measured from the tap centers. The
/// system builders construct their filters through this path and wrap the
/// result into the target grid afterwards.
Taps2d digital_shear_taps(const Taps2d& t, long k, int d, const Taps1d& interp_taps);

/// Number of convolve_axis calls that periodized oversized taps.
std::size_t warning_count();
void reset_warning_count();

} // namespace shearlet
