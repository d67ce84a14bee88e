#pragma once

#include "shearlet/grid.hpp"

namespace shearlet {

/// Deterministic test images, pixel values in [0, 255].
namespace phantoms {

/// Piecewise-constant cartoon: smooth curved region boundaries, flat
/// interiors. Good for denoising and inpainting exercises.
Signal2D cartoon(std::size_t n);

/// Binary (0/1) curvilinear structures: rings, a sine band, line segments.
Signal2D curves(std::size_t n);

/// Binary (0/1) isotropic blobs: small filled disks.
Signal2D dots(std::size_t n);

/// 255 * clamp(curves + dots): the separation experiment input.
Signal2D curves_plus_dots(std::size_t n);

/// Piecewise-constant 3D volume with curved interfaces.
Signal3D cartoon_volume(std::size_t n);

/// Deterministic binary mask keeping the given fraction of pixels.
Signal2D random_mask(std::size_t rows, std::size_t cols, double keep_fraction,
                     std::uint64_t seed);
Signal3D random_mask(std::size_t n0, std::size_t n1, std::size_t n2, double keep_fraction,
                     std::uint64_t seed);

} // namespace phantoms

} // namespace shearlet
