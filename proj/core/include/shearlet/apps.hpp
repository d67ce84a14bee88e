#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "shearlet/transform.hpp"

namespace shearlet {

/// Deterministic Gaussian noise: mt19937_64 seeded as given, Box-Muller
/// conversion. Same seed, same platform-independent output.
Signal2D add_gaussian_noise(const Signal2D& s, double sigma, std::uint64_t seed);
Signal3D add_gaussian_noise(const Signal3D& s, double sigma, std::uint64_t seed);

/// Per-scale threshold factors K_j and the noise level sigma; the
/// per-band threshold is K_j * sigma, scaled by the band filter's spatial
/// L2 norm unless norm scaling is disabled.
struct ThresholdSchedule {
    std::vector<double> per_scale_factors;
    double sigma = 0.0;
    bool scale_by_filter_norm = true;

    /// K = 2.5 per scale with 3.8 on the finest (the stock 4-scale vector
    /// is 2.5, 2.5, 2.5, 3.8).
    static ThresholdSchedule defaults_2d(double sigma, int n_scales = 4);
    /// K = 3 per scale with 4 on the finest (stock 3-scale vector 3, 3, 4).
    static ThresholdSchedule defaults_3d(double sigma, int n_scales = 3);
};

/// Hard thresholding: zero every non-lowpass coefficient below its band
/// threshold. Keeps values with |x| >= threshold; the lowpass band is
/// untouched.
CoefficientStack2D hard_threshold(const CoefficientStack2D& coeffs,
                                  const ThresholdSchedule& schedule,
                                  const ShearletSystem2D& sys);
CoefficientStack3D hard_threshold(const CoefficientStack3D& coeffs,
                                  const ThresholdSchedule& schedule,
                                  const ShearletSystem3D& sys);

Signal2D denoise(const Signal2D& noisy, const ShearletSystem2D& sys,
                 const ThresholdSchedule& schedule, int threads = 0);
Signal3D denoise(const Signal3D& noisy, const ShearletSystem3D& sys,
                 const ThresholdSchedule& schedule, int threads = 0);

/// 20 log10(255 sqrt(N) / ||ref - test||_F); +inf for identical inputs.
double psnr(const Signal2D& reference, const Signal2D& test);
double psnr(const Signal3D& reference, const Signal3D& test);

struct InpaintConfig {
    int iterations = 100;
    double delta_init = -1.0;   // < 0 selects "auto": max coefficient of the input
    double delta_min = 0.01;    // final threshold as a fraction of delta_init
    bool scale_by_filter_norm = true;
};

/// Per-iteration observer, called right after the residual is formed:
/// (iteration, threshold, residual, current estimate).
using InpaintObserver = std::function<void(int iteration, double delta,
                                           const Signal2D& residual,
                                           const Signal2D& estimate)>;

/// Iterative thresholding over the observed pixels: the residual
/// mask .* (masked - estimate) is analyzed together with the running
/// estimate, hard thresholded at a geometrically decaying delta, and
/// synthesized back.
Signal2D inpaint(const Signal2D& masked_signal, const Signal2D& mask,
                 const ShearletSystem2D& sys, const InpaintConfig& config,
                 int threads = 0, const InpaintObserver& observer = nullptr);
Signal3D inpaint(const Signal3D& masked_signal, const Signal3D& mask,
                 const ShearletSystem3D& sys, const InpaintConfig& config,
                 int threads = 0);

struct SeparationResult {
    Signal2D curvilinear;
    Signal2D blobs;
};

/// Joint iterative thresholding against two transforms: a directional
/// system capturing curves and an isotropic one capturing blobs. The
/// isotropic transform is typically the degenerate system with all shear
/// levels zero and an impulse fan.
SeparationResult separate(const Signal2D& signal, const ShearletSystem2D& directional,
                          const ShearletSystem2D& isotropic, const InpaintConfig& config,
                          int threads = 0);

/// 1 where |g| >= delta, else 0.
Signal2D binarize(const Signal2D& signal, double delta);

/// L1-normalized Gaussian taps, sigma in pixels, truncated at 4 sigma.
Taps2d gaussian_kernel(double sigma_pixels = 2.0);

/// Q(recovered, delta) = ||g*truth - g*binarize(recovered, delta)||_2 /
/// ||g*truth||_2 with periodic convolution; truth must be binary.
double quality_q(const Signal2D& recovered, const Signal2D& truth, double delta,
                 const Taps2d& gaussian);

/// Minimum of quality_q over integer delta = 0..255 (ties: smallest delta).
std::pair<double, int> quality_q_opt(const Signal2D& recovered, const Signal2D& truth,
                                     const Taps2d& gaussian);

} // namespace shearlet
