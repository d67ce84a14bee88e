#include "shearlet/apps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "shearlet/errors.hpp"
#include "shearlet/fft.hpp"

namespace shearlet {

namespace {

// Box-Muller on mt19937_64 draws; fixed algorithm so seeds reproduce
// everywhere, unlike std::normal_distribution.
class GaussianSource {
  public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_) {
            have_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_ = true;
        return r * std::cos(a);
    }

  private:
    double uniform01() {
        return static_cast<double>(rng_()) * 0x1.0p-64;
    }
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_ = false;
};

template <typename G>
G add_noise_impl(const G& s, double sigma, std::uint64_t seed) {
    if (sigma < 0.0) throw DomainError("add_gaussian_noise: sigma must be >= 0");
    G out = s;
    if (sigma == 0.0) return out;
    GaussianSource gauss(seed);
    for (auto& x : out.raw()) x += sigma * gauss.next();
    return out;
}

template <typename Stack, typename Sys>
Stack hard_threshold_impl(const Stack& coeffs, const ThresholdSchedule& schedule,
                          const Sys& sys) {
    if (schedule.per_scale_factors.size() !=
        static_cast<std::size_t>(sys.profile.n_scales))
        throw ConfigError("hard_threshold: schedule length must equal n_scales");
    if (schedule.sigma < 0.0) throw ConfigError("hard_threshold: sigma must be >= 0");
    for (double k : schedule.per_scale_factors)
        if (!(k > 0.0)) throw ConfigError("hard_threshold: factors must be positive");
    if (coeffs.bands.size() != sys.index.size())
        throw ShapeError("hard_threshold: stack does not match the system");

    Stack out = coeffs;
    for (std::size_t i = 0; i < out.bands.size(); ++i) {
        const auto& fi = sys.index[i];
        if (fi.scale < 0) continue; // lowpass untouched
        const std::size_t s =
            static_cast<std::size_t>(fi.scale - sys.profile.coarsest_scale_offset);
        double delta = schedule.per_scale_factors[s] * schedule.sigma;
        if (schedule.scale_by_filter_norm) delta *= sys.filter_norms[i];
        for (auto& x : out.bands[i].raw())
            if (std::abs(x) < delta) x = 0.0;
    }
    return out;
}

} // namespace

Signal2D add_gaussian_noise(const Signal2D& s, double sigma, std::uint64_t seed) {
    return add_noise_impl(s, sigma, seed);
}
Signal3D add_gaussian_noise(const Signal3D& s, double sigma, std::uint64_t seed) {
    return add_noise_impl(s, sigma, seed);
}

ThresholdSchedule ThresholdSchedule::defaults_2d(double sigma, int n_scales) {
    std::vector<double> k(static_cast<std::size_t>(n_scales), 2.5);
    if (n_scales > 0) k.back() = 3.8;
    return ThresholdSchedule{std::move(k), sigma, true};
}
ThresholdSchedule ThresholdSchedule::defaults_3d(double sigma, int n_scales) {
    std::vector<double> k(static_cast<std::size_t>(n_scales), 3.0);
    if (n_scales > 0) k.back() = 4.0;
    return ThresholdSchedule{std::move(k), sigma, true};
}

CoefficientStack2D hard_threshold(const CoefficientStack2D& coeffs,
                                  const ThresholdSchedule& schedule,
                                  const ShearletSystem2D& sys) {
    return hard_threshold_impl(coeffs, schedule, sys);
}
CoefficientStack3D hard_threshold(const CoefficientStack3D& coeffs,
                                  const ThresholdSchedule& schedule,
                                  const ShearletSystem3D& sys) {
    return hard_threshold_impl(coeffs, schedule, sys);
}

Signal2D denoise(const Signal2D& noisy, const ShearletSystem2D& sys,
                 const ThresholdSchedule& schedule, int threads) {
    return inverse(hard_threshold(forward(noisy, sys, threads), schedule, sys), sys, threads);
}
Signal3D denoise(const Signal3D& noisy, const ShearletSystem3D& sys,
                 const ThresholdSchedule& schedule, int threads) {
    return inverse(hard_threshold(forward(noisy, sys, threads), schedule, sys), sys, threads);
}

namespace {
template <typename G>
double psnr_impl(const G& reference, const G& test) {
    if (!reference.same_shape(test)) throw ShapeError("psnr: dimension mismatch");
    double err2 = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        const double d = reference.raw()[i] - test.raw()[i];
        err2 += d * d;
    }
    if (err2 == 0.0) return std::numeric_limits<double>::infinity();
    const double n = static_cast<double>(reference.size());
    return 20.0 * std::log10(255.0 * std::sqrt(n) / std::sqrt(err2));
}
} // namespace

double psnr(const Signal2D& reference, const Signal2D& test) {
    return psnr_impl(reference, test);
}
double psnr(const Signal3D& reference, const Signal3D& test) {
    return psnr_impl(reference, test);
}

namespace {

// Uniform hard threshold across all bands (the iterative schemes decay one
// global delta); band thresholds optionally scale with the filter norms.
template <typename Stack>
void threshold_uniform(Stack& coeffs, double delta, const std::vector<double>& norms,
                       bool scale_by_norm) {
    for (std::size_t i = 0; i < coeffs.bands.size(); ++i) {
        const double d = scale_by_norm ? delta * norms[i] : delta;
        for (auto& x : coeffs.bands[i].raw())
            if (std::abs(x) < d) x = 0.0;
    }
}

template <typename Stack>
double max_band_amplitude(const Stack& coeffs, const std::vector<double>& norms,
                          bool scale_by_norm) {
    double m = 0.0;
    for (std::size_t i = 0; i < coeffs.bands.size(); ++i) {
        double bm = 0.0;
        for (const auto& x : coeffs.bands[i].raw()) bm = std::max(bm, std::abs(x));
        if (scale_by_norm && norms[i] > 0.0) bm /= norms[i];
        m = std::max(m, bm);
    }
    return m;
}

void validate_iter_config(const InpaintConfig& config) {
    if (config.iterations < 2)
        throw ConfigError("iterative thresholding needs at least 2 iterations");
    if (!(config.delta_min > 0.0 && config.delta_min < 1.0))
        throw ConfigError("delta_min must lie in (0, 1)");
}

template <typename G, typename Sys>
G inpaint_impl(const G& masked_signal, const G& mask, const Sys& sys,
               const InpaintConfig& config, int threads, const InpaintObserver* observer) {
    if (!masked_signal.same_shape(mask))
        throw ShapeError("inpaint: mask dims must match the signal");
    validate_iter_config(config);
    bool any_observed = false;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        const double m = mask.raw()[i];
        if (m != 0.0 && m != 1.0)
            throw DomainError("inpaint: mask must be binary");
        if (m == 1.0) any_observed = true;
        else if (masked_signal.raw()[i] != 0.0)
            throw DomainError("inpaint: masked signal must vanish off the mask");
    }
    if (!any_observed) throw DegenerateMaskError("inpaint: mask observes no pixels");

    double delta = config.delta_init;
    if (delta < 0.0) {
        const auto c0 = forward(masked_signal, sys, threads);
        delta = max_band_amplitude(c0, sys.filter_norms, config.scale_by_filter_norm);
    }
    const double lambda =
        std::pow(config.delta_min, 1.0 / static_cast<double>(config.iterations - 1));

    G estimate(mask);
    for (auto& x : estimate.raw()) x = 0.0;

    for (int it = 0; it < config.iterations; ++it) {
        G residual = masked_signal;
        for (std::size_t i = 0; i < residual.size(); ++i)
            residual.raw()[i] = mask.raw()[i] * (masked_signal.raw()[i] - estimate.raw()[i]);
        if constexpr (std::is_same_v<G, Signal2D>) {
            if (observer && *observer) (*observer)(it, delta, residual, estimate);
        }
        for (std::size_t i = 0; i < residual.size(); ++i)
            residual.raw()[i] += estimate.raw()[i];
        auto coeffs = forward(residual, sys, threads);
        threshold_uniform(coeffs, delta, sys.filter_norms, config.scale_by_filter_norm);
        estimate = inverse(coeffs, sys, threads);
        delta *= lambda;
    }
    return estimate;
}

} // namespace

Signal2D inpaint(const Signal2D& masked_signal, const Signal2D& mask,
                 const ShearletSystem2D& sys, const InpaintConfig& config, int threads,
                 const InpaintObserver& observer) {
    return inpaint_impl(masked_signal, mask, sys, config, threads, &observer);
}

Signal3D inpaint(const Signal3D& masked_signal, const Signal3D& mask,
                 const ShearletSystem3D& sys, const InpaintConfig& config, int threads) {
    return inpaint_impl(masked_signal, mask, sys, config, threads, nullptr);
}

SeparationResult separate(const Signal2D& signal, const ShearletSystem2D& directional,
                          const ShearletSystem2D& isotropic, const InpaintConfig& config,
                          int threads) {
    if (signal.size0() != directional.rows || signal.size1() != directional.cols ||
        signal.size0() != isotropic.rows || signal.size1() != isotropic.cols)
        throw ShapeError("separate: both systems must match the signal dims");
    validate_iter_config(config);

    double delta = config.delta_init;
    if (delta < 0.0) {
        const auto c0 = forward(signal, directional, threads);
        const auto c1 = forward(signal, isotropic, threads);
        delta = std::max(
            max_band_amplitude(c0, directional.filter_norms, config.scale_by_filter_norm),
            max_band_amplitude(c1, isotropic.filter_norms, config.scale_by_filter_norm));
    }
    const double lambda =
        std::pow(config.delta_min, 1.0 / static_cast<double>(config.iterations - 1));

    Signal2D curves(signal.size0(), signal.size1(), 0.0);
    Signal2D blobs(signal.size0(), signal.size1(), 0.0);

    for (int it = 0; it < config.iterations; ++it) {
        // One shared residual per iteration, then two threshold passes.
        Signal2D residual = signal;
        for (std::size_t i = 0; i < residual.size(); ++i)
            residual.raw()[i] -= curves.raw()[i] + blobs.raw()[i];

        Signal2D arg0 = residual;
        for (std::size_t i = 0; i < arg0.size(); ++i) arg0.raw()[i] += curves.raw()[i];
        auto c0 = forward(arg0, directional, threads);
        threshold_uniform(c0, delta, directional.filter_norms, config.scale_by_filter_norm);
        curves = inverse(c0, directional, threads);

        Signal2D arg1 = residual;
        for (std::size_t i = 0; i < arg1.size(); ++i) arg1.raw()[i] += blobs.raw()[i];
        auto c1 = forward(arg1, isotropic, threads);
        threshold_uniform(c1, delta, isotropic.filter_norms, config.scale_by_filter_norm);
        blobs = inverse(c1, isotropic, threads);

        delta *= lambda;
    }
    return SeparationResult{std::move(curves), std::move(blobs)};
}

Signal2D binarize(const Signal2D& signal, double delta) {
    if (delta < 0.0) throw DomainError("binarize: delta must be >= 0");
    Signal2D out = signal;
    for (auto& x : out.raw()) x = (std::abs(x) >= delta) ? 1.0 : 0.0;
    return out;
}

Taps2d gaussian_kernel(double sigma_pixels) {
    if (!(sigma_pixels > 0.0)) throw DomainError("gaussian_kernel: sigma must be > 0");
    const int radius = static_cast<int>(std::ceil(4.0 * sigma_pixels));
    const std::size_t n = static_cast<std::size_t>(2 * radius + 1);
    Taps2d t;
    t.v = RealGrid2(n, n);
    t.center0 = t.center1 = radius;
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i)
        for (int j = -radius; j <= radius; ++j) {
            const double v =
                std::exp(-(static_cast<double>(i) * i + static_cast<double>(j) * j) /
                         (2.0 * sigma_pixels * sigma_pixels));
            t.v(static_cast<std::size_t>(i + radius), static_cast<std::size_t>(j + radius)) = v;
            sum += v;
        }
    for (auto& v : t.v.raw()) v /= sum;
    return t;
}

namespace {
// Periodic convolution with a centered kernel, done in the frequency domain.
Signal2D blur_periodic(const Signal2D& s, const Taps2d& kernel) {
    ComplexGrid2 K = fft::forward_real(embed_periodic(kernel, s.size0(), s.size1()));
    ComplexGrid2 F = fft::forward_real(s);
    for (std::size_t i = 0; i < F.size(); ++i) F.raw()[i] *= K.raw()[i];
    return fft::inverse_real(F);
}
} // namespace

double quality_q(const Signal2D& recovered, const Signal2D& truth, double delta,
                 const Taps2d& gaussian) {
    if (!recovered.same_shape(truth)) throw ShapeError("quality_q: dimension mismatch");
    for (double v : truth.raw())
        if (v != 0.0 && v != 1.0) throw DomainError("quality_q: truth must be binary");
    const Signal2D ref = blur_periodic(truth, gaussian);
    const double ref_norm = l2_norm(ref);
    if (ref_norm == 0.0) throw DegenerateTruthError("quality_q: truth carries no energy");
    const Signal2D rec = blur_periodic(binarize(recovered, delta), gaussian);
    double err2 = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        const double d = ref.raw()[i] - rec.raw()[i];
        err2 += d * d;
    }
    return std::sqrt(err2) / ref_norm;
}

std::pair<double, int> quality_q_opt(const Signal2D& recovered, const Signal2D& truth,
                                     const Taps2d& gaussian) {
    if (!recovered.same_shape(truth)) throw ShapeError("quality_q_opt: dimension mismatch");
    for (double v : truth.raw())
        if (v != 0.0 && v != 1.0) throw DomainError("quality_q_opt: truth must be binary");
    const Signal2D ref = blur_periodic(truth, gaussian);
    const double ref_norm = l2_norm(ref);
    if (ref_norm == 0.0) throw DegenerateTruthError("quality_q_opt: truth carries no energy");

    double best = std::numeric_limits<double>::infinity();
    int best_delta = 0;
    for (int delta = 0; delta <= 255; ++delta) {
        const Signal2D rec =
            blur_periodic(binarize(recovered, static_cast<double>(delta)), gaussian);
        double err2 = 0.0;
        for (std::size_t i = 0; i < ref.size(); ++i) {
            const double d = ref.raw()[i] - rec.raw()[i];
            err2 += d * d;
        }
        const double q = std::sqrt(err2) / ref_norm;
        if (q < best) {
            best = q;
            best_delta = delta;
        }
    }
    return {best, best_delta};
}

} // namespace shearlet
