// Command line front end: system construction, forward/inverse transforms,
// denoising, inpainting, separation and frame-bound diagnostics over PGM,
// SVOL and SHCF files.
#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "shearlet/apps.hpp"
#include "shearlet/descriptor.hpp"
#include "shearlet/image_io.hpp"
#include "shearlet/phantoms.hpp"

using namespace shearlet;

namespace {

struct ProfileFlags {
    int scales = 4;
    std::string shear_levels;
    std::string alpha;
    int j0 = 0;
    bool full_system = false;
    bool impulse_fan = false;
};

void add_profile_flags(CLI::App* cmd, ProfileFlags& p) {
    cmd->add_option("--scales", p.scales, "Number of scales")->check(CLI::NonNegativeNumber);
    cmd->add_option("--shear-levels", p.shear_levels,
                    "Comma-separated shear levels d_j, one per scale");
    cmd->add_option("--alpha", p.alpha,
                    "Comma-separated per-scale anisotropy values in (0,2); converted to "
                    "shear levels");
    cmd->add_option("--j0", p.j0, "Coarsest scale index")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--full-system", p.full_system, "Keep the boundary filters in all cones");
}

std::vector<double> parse_doubles(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

ScaleProfile resolve_profile(const ProfileFlags& p) {
    std::vector<int> levels;
    if (!p.alpha.empty() && !p.shear_levels.empty())
        throw ConfigError("give either --shear-levels or --alpha, not both");
    if (!p.alpha.empty()) {
        const auto alpha = parse_doubles(p.alpha);
        levels = alpha_to_shear_levels(alpha, p.j0);
    } else if (!p.shear_levels.empty()) {
        for (double v : parse_doubles(p.shear_levels)) {
            if (v < 0 || v != std::floor(v))
                throw ConfigError("--shear-levels must be nonnegative integers");
            levels.push_back(static_cast<int>(v));
        }
    } else {
        // default: the ceil(j/2) pattern counted from the first scale
        for (int i = 0; i < p.scales; ++i) levels.push_back((i + 2) / 2);
        return ScaleProfile::from_levels(std::move(levels), p.j0);
    }
    if (static_cast<int>(levels.size()) != p.scales)
        throw ConfigError("--shear-levels/--alpha length must equal --scales");
    return ScaleProfile::from_levels(std::move(levels), p.j0);
}

FanFilter resolve_fan(const ProfileFlags& p) {
    return p.impulse_fan ? FanFilter::impulse() : default_fan_filter();
}

bool has_extension(const std::string& path, const char* ext) {
    return std::filesystem::path(path).extension() == ext;
}

void require_readable(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot open input file: " + path);
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string fmt(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void print_metrics(const std::string& cmd,
                   const std::vector<std::pair<std::string, std::string>>& kv) {
    std::cout << "metrics cmd=" << cmd;
    for (const auto& [k, v] : kv) std::cout << ' ' << k << '=' << v;
    std::cout << '\n';
}

int threads_flag = 0;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D/3D digital shearlet transform toolkit"};
    app.require_subcommand(1);
    app.add_option("--threads", threads_flag, "Worker threads (default: all cores)");

    // ---- system ----
    ProfileFlags sys_p;
    std::string sys_size, sys_out;
    auto* cmd_system = app.add_subcommand("system", "Write a system descriptor file");
    add_profile_flags(cmd_system, sys_p);
    cmd_system->add_option("--size", sys_size, "Grid size ROWSxCOLS or XxYxZ")->required();
    cmd_system->add_option("--out", sys_out, "Descriptor output path")->required();

    // ---- decompose ----
    ProfileFlags dec_p;
    std::string dec_in, dec_out;
    auto* cmd_dec = app.add_subcommand("decompose", "Forward transform to a SHCF file");
    add_profile_flags(cmd_dec, dec_p);
    cmd_dec->add_option("--in", dec_in, "Input image (.pgm) or volume (.svol)")->required();
    cmd_dec->add_option("--out", dec_out, "Coefficient output (.shcf)")->required();

    // ---- reconstruct ----
    ProfileFlags rec_p;
    std::string rec_coeffs, rec_out;
    auto* cmd_rec = app.add_subcommand("reconstruct", "Inverse transform from a SHCF file");
    add_profile_flags(cmd_rec, rec_p);
    cmd_rec->add_option("--coeffs", rec_coeffs, "Coefficient input (.shcf)")->required();
    cmd_rec->add_option("--out", rec_out, "Output image (.pgm) or volume (.svol)")->required();

    // ---- denoise ----
    ProfileFlags den_p;
    std::string den_in, den_out, den_K, den_mode = "scaled";
    double den_sigma = 0.0;
    std::uint64_t den_seed = 0;
    auto* cmd_den = app.add_subcommand(
        "denoise", "Add seeded Gaussian noise and denoise by hard thresholding");
    add_profile_flags(cmd_den, den_p);
    cmd_den->add_option("--in", den_in, "Clean input image/volume")->required();
    cmd_den->add_option("--sigma", den_sigma, "Noise standard deviation")->required();
    cmd_den->add_option("--K", den_K, "Comma-separated per-scale threshold factors");
    cmd_den->add_option("--seed", den_seed, "Noise seed");
    cmd_den->add_option("--out", den_out, "Denoised output path")->required();
    cmd_den->add_option("--threshold-mode", den_mode, "scaled|strict")
        ->check(CLI::IsMember({"scaled", "strict"}));

    // ---- inpaint ----
    ProfileFlags inp_p;
    std::string inp_in, inp_mask, inp_out;
    int inp_iterations = 100;
    double inp_delta_min = 0.01, inp_delta_init = -1.0;
    auto* cmd_inp = app.add_subcommand("inpaint", "Iterative-thresholding inpainting");
    add_profile_flags(cmd_inp, inp_p);
    cmd_inp->add_option("--in", inp_in, "Input image/volume (occluded values ignored)")
        ->required();
    cmd_inp->add_option("--mask", inp_mask, "Binary mask (nonzero = observed)")->required();
    cmd_inp->add_option("--iterations", inp_iterations, "Iteration count")
        ->check(CLI::PositiveNumber);
    cmd_inp->add_option("--delta-min", inp_delta_min,
                        "Final threshold as a fraction of the initial threshold");
    cmd_inp->add_option("--delta-init", inp_delta_init,
                        "Initial threshold (omit for automatic)");
    cmd_inp->add_option("--out", inp_out, "Inpainted output path")->required();

    // ---- separate ----
    ProfileFlags sep_p;
    std::string sep_in, sep_out_curves, sep_out_blobs, sep_truth_curves, sep_truth_points;
    int sep_iterations = 100;
    double sep_delta_min = 0.005;
    auto* cmd_sep =
        app.add_subcommand("separate", "Split an image into curvilinear and blob parts");
    add_profile_flags(cmd_sep, sep_p);
    cmd_sep->add_option("--in", sep_in, "Input image (.pgm)")->required();
    cmd_sep->add_option("--iterations", sep_iterations, "Iteration count")
        ->check(CLI::PositiveNumber);
    cmd_sep->add_option("--delta-min", sep_delta_min,
                        "Final threshold as a fraction of the initial threshold");
    cmd_sep->add_option("--out-curves", sep_out_curves, "Curvilinear part output")->required();
    cmd_sep->add_option("--out-blobs", sep_out_blobs, "Blob part output")->required();
    cmd_sep->add_option("--truth-curves", sep_truth_curves,
                        "Binary reference for the curve part (enables Q metrics)");
    cmd_sep->add_option("--truth-points", sep_truth_points,
                        "Binary reference for the point part (enables Q metrics)");

    // ---- frame-bounds ----
    ProfileFlags fb_p;
    std::string fb_size;
    auto* cmd_fb = app.add_subcommand("frame-bounds", "Frame bound diagnostics");
    add_profile_flags(cmd_fb, fb_p);
    cmd_fb->add_option("--size", fb_size, "Grid size ROWSxCOLS or XxYxZ")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Timer timer;
        if (*cmd_system || *cmd_fb) {
            const ProfileFlags& p = *cmd_system ? sys_p : fb_p;
            const std::string& size = *cmd_system ? sys_size : fb_size;
            std::vector<std::size_t> dims;
            {
                std::stringstream ss(size);
                std::string item;
                while (std::getline(ss, item, 'x')) dims.push_back(std::stoul(item));
            }
            if (dims.size() != 2 && dims.size() != 3)
                throw ConfigError("--size must be ROWSxCOLS or XxYxZ");
            const auto profile = resolve_profile(p);
            const auto fan = resolve_fan(p);
            const auto qmf = QmfPair::maximally_flat_9tap();
            if (dims.size() == 2) {
                auto sys = build_system_2d(dims[0], dims[1], profile, fan, qmf,
                                           p.full_system, threads_flag);
                const auto [A, B] = sys.frame_bounds();
                if (*cmd_system) {
                    write_descriptor(describe(sys), sys_out);
                    std::cout << "wrote descriptor " << sys_out << '\n';
                }
                std::cout << "2D system " << dims[0] << 'x' << dims[1] << ", redundancy "
                          << sys.redundancy() << ", A=" << fmt(A) << ", B=" << fmt(B)
                          << ", B/A=" << fmt(B / A) << '\n';
                print_metrics(*cmd_system ? "system" : "frame-bounds",
                              {{"redundancy", std::to_string(sys.redundancy())},
                               {"A", fmt(A)},
                               {"B", fmt(B)},
                               {"B_over_A", fmt(B / A)},
                               {"wall_time_s", fmt(timer.seconds())}});
            } else {
                auto sys = build_system_3d({dims[0], dims[1], dims[2]}, profile, fan, qmf,
                                           p.full_system, threads_flag);
                const auto [A, B] = sys.frame_bounds();
                if (*cmd_system) {
                    write_descriptor(describe(sys), sys_out);
                    std::cout << "wrote descriptor " << sys_out << '\n';
                }
                std::cout << "3D system " << dims[0] << 'x' << dims[1] << 'x' << dims[2]
                          << ", redundancy " << sys.redundancy() << ", A=" << fmt(A)
                          << ", B=" << fmt(B) << ", B/A=" << fmt(B / A) << '\n';
                print_metrics(*cmd_system ? "system" : "frame-bounds",
                              {{"redundancy", std::to_string(sys.redundancy())},
                               {"A", fmt(A)},
                               {"B", fmt(B)},
                               {"B_over_A", fmt(B / A)},
                               {"wall_time_s", fmt(timer.seconds())}});
            }
        } else if (*cmd_dec) {
            require_readable(dec_in);
            const auto profile = resolve_profile(dec_p);
            const auto fan = resolve_fan(dec_p);
            const auto qmf = QmfPair::maximally_flat_9tap();
            std::ofstream out(dec_out, std::ios::binary);
            if (!out) throw FormatError("cannot write: " + dec_out);
            if (has_extension(dec_in, ".svol")) {
                const Signal3D vol = load_svol(dec_in);
                auto sys = build_system_3d({vol.size0(), vol.size1(), vol.size2()}, profile,
                                           fan, qmf, dec_p.full_system, threads_flag);
                serialize(forward(vol, sys, threads_flag), out);
            } else {
                const PgmImage img = load_pgm(dec_in);
                auto sys = build_system_2d(img.pixels.size0(), img.pixels.size1(), profile,
                                           fan, qmf, dec_p.full_system, threads_flag);
                serialize(forward(img.pixels, sys, threads_flag), out);
            }
            std::cout << "wrote coefficients " << dec_out << '\n';
            print_metrics("decompose", {{"wall_time_s", fmt(timer.seconds())}});
        } else if (*cmd_rec) {
            require_readable(rec_coeffs);
            const auto profile = resolve_profile(rec_p);
            const auto fan = resolve_fan(rec_p);
            const auto qmf = QmfPair::maximally_flat_9tap();
            std::ifstream in(rec_coeffs, std::ios::binary);
            std::ifstream peek(rec_coeffs, std::ios::binary);
            const int dim = shcf_dimensionality(peek);
            if (dim == 3) {
                const auto coeffs = deserialize_3d(in);
                auto sys = build_system_3d(coeffs.dims, profile, fan, qmf, rec_p.full_system,
                                           threads_flag);
                save_svol(inverse(coeffs, sys, threads_flag), rec_out);
            } else {
                const auto coeffs = deserialize_2d(in);
                auto sys = build_system_2d(coeffs.rows, coeffs.cols, profile, fan, qmf,
                                           rec_p.full_system, threads_flag);
                save_pgm(inverse(coeffs, sys, threads_flag), rec_out);
            }
            std::cout << "wrote reconstruction " << rec_out << '\n';
            print_metrics("reconstruct", {{"wall_time_s", fmt(timer.seconds())}});
        } else if (*cmd_den) {
            require_readable(den_in);
            const auto profile = resolve_profile(den_p);
            const auto fan = resolve_fan(den_p);
            const auto qmf = QmfPair::maximally_flat_9tap();
            const bool scaled = den_mode == "scaled";
            if (has_extension(den_in, ".svol")) {
                const Signal3D clean = load_svol(den_in);
                ThresholdSchedule schedule =
                    den_K.empty() ? ThresholdSchedule::defaults_3d(den_sigma, profile.n_scales)
                                  : ThresholdSchedule{parse_doubles(den_K), den_sigma, scaled};
                schedule.scale_by_filter_norm = scaled;
                schedule.sigma = den_sigma;
                auto sys = build_system_3d({clean.size0(), clean.size1(), clean.size2()},
                                           profile, fan, qmf, den_p.full_system, threads_flag);
                const Signal3D noisy = add_gaussian_noise(clean, den_sigma, den_seed);
                const Signal3D den = denoise(noisy, sys, schedule, threads_flag);
                save_svol(den, den_out);
                const double pn = psnr(clean, noisy), pd = psnr(clean, den);
                std::cout << "noisy PSNR " << fmt(pn) << " dB, denoised PSNR " << fmt(pd)
                          << " dB\n";
                print_metrics("denoise", {{"psnr_noisy", fmt(pn)},
                                          {"psnr_denoised", fmt(pd)},
                                          {"wall_time_s", fmt(timer.seconds())}});
            } else {
                const PgmImage img = load_pgm(den_in);
                ThresholdSchedule schedule =
                    den_K.empty() ? ThresholdSchedule::defaults_2d(den_sigma, profile.n_scales)
                                  : ThresholdSchedule{parse_doubles(den_K), den_sigma, scaled};
                schedule.scale_by_filter_norm = scaled;
                schedule.sigma = den_sigma;
                auto sys = build_system_2d(img.pixels.size0(), img.pixels.size1(), profile,
                                           fan, qmf, den_p.full_system, threads_flag);
                const Signal2D noisy = add_gaussian_noise(img.pixels, den_sigma, den_seed);
                const Signal2D den = denoise(noisy, sys, schedule, threads_flag);
                save_pgm(den, den_out, img.maxval);
                const double pn = psnr(img.pixels, noisy), pd = psnr(img.pixels, den);
                std::cout << "noisy PSNR " << fmt(pn) << " dB, denoised PSNR " << fmt(pd)
                          << " dB\n";
                print_metrics("denoise", {{"psnr_noisy", fmt(pn)},
                                          {"psnr_denoised", fmt(pd)},
                                          {"wall_time_s", fmt(timer.seconds())}});
            }
        } else if (*cmd_inp) {
            require_readable(inp_in);
            require_readable(inp_mask);
            const auto profile = resolve_profile(inp_p);
            const auto fan = resolve_fan(inp_p);
            const auto qmf = QmfPair::maximally_flat_9tap();
            InpaintConfig config;
            config.iterations = inp_iterations;
            config.delta_min = inp_delta_min;
            config.delta_init = inp_delta_init;
            if (has_extension(inp_in, ".svol")) {
                const Signal3D full = load_svol(inp_in);
                Signal3D mask = load_svol(inp_mask);
                for (auto& v : mask.raw()) v = v != 0.0 ? 1.0 : 0.0;
                Signal3D masked = full;
                for (std::size_t i = 0; i < masked.size(); ++i)
                    masked.raw()[i] *= mask.raw()[i];
                auto sys = build_system_3d({full.size0(), full.size1(), full.size2()},
                                           profile, fan, qmf, inp_p.full_system, threads_flag);
                const Signal3D rec = inpaint(masked, mask, sys, config, threads_flag);
                save_svol(rec, inp_out);
                const double pm = psnr(full, masked), pi = psnr(full, rec);
                std::cout << "masked PSNR " << fmt(pm) << " dB, inpainted PSNR " << fmt(pi)
                          << " dB\n";
                print_metrics("inpaint", {{"psnr_masked", fmt(pm)},
                                          {"psnr_inpainted", fmt(pi)},
                                          {"wall_time_s", fmt(timer.seconds())}});
            } else {
                const PgmImage img = load_pgm(inp_in);
                const PgmImage maskimg = load_pgm(inp_mask);
                Signal2D mask = maskimg.pixels;
                for (auto& v : mask.raw()) v = v != 0.0 ? 1.0 : 0.0;
                if (!mask.same_shape(img.pixels))
                    throw ShapeError("inpaint: mask dims must match the input");
                Signal2D masked = img.pixels;
                for (std::size_t i = 0; i < masked.size(); ++i)
                    masked.raw()[i] *= mask.raw()[i];
                auto sys = build_system_2d(img.pixels.size0(), img.pixels.size1(), profile,
                                           fan, qmf, inp_p.full_system, threads_flag);
                const Signal2D rec = inpaint(masked, mask, sys, config, threads_flag);
                save_pgm(rec, inp_out, img.maxval);
                const double pm = psnr(img.pixels, masked), pi = psnr(img.pixels, rec);
                std::cout << "masked PSNR " << fmt(pm) << " dB, inpainted PSNR " << fmt(pi)
                          << " dB\n";
                print_metrics("inpaint", {{"psnr_masked", fmt(pm)},
                                          {"psnr_inpainted", fmt(pi)},
                                          {"wall_time_s", fmt(timer.seconds())}});
            }
        } else if (*cmd_sep) {
            require_readable(sep_in);
            const PgmImage img = load_pgm(sep_in);
            const auto profile = resolve_profile(sep_p);
            const auto qmf = QmfPair::maximally_flat_9tap();
            auto directional =
                build_system_2d(img.pixels.size0(), img.pixels.size1(), profile,
                                resolve_fan(sep_p), qmf, sep_p.full_system, threads_flag);
            const auto iso_profile = ScaleProfile::from_levels(
                std::vector<int>(static_cast<std::size_t>(profile.n_scales), 0),
                profile.coarsest_scale_offset);
            auto isotropic =
                build_system_2d(img.pixels.size0(), img.pixels.size1(), iso_profile,
                                FanFilter::impulse(), qmf, sep_p.full_system, threads_flag);
            InpaintConfig config;
            config.iterations = sep_iterations;
            config.delta_min = sep_delta_min;
            const SeparationResult res =
                separate(img.pixels, directional, isotropic, config, threads_flag);
            save_pgm(res.curvilinear, sep_out_curves, img.maxval);
            save_pgm(res.blobs, sep_out_blobs, img.maxval);
            std::vector<std::pair<std::string, std::string>> kv;
            std::cout << "wrote " << sep_out_curves << " and " << sep_out_blobs << '\n';
            if (!sep_truth_curves.empty()) {
                require_readable(sep_truth_curves);
                Signal2D truth = load_pgm(sep_truth_curves).pixels;
                for (auto& v : truth.raw()) v = v != 0.0 ? 1.0 : 0.0;
                const auto [q, d] = quality_q_opt(res.curvilinear, truth, gaussian_kernel());
                std::cout << "Q_opt(curves) = " << fmt(q) << " at delta " << d << '\n';
                kv.emplace_back("q_opt_curves", fmt(q));
                kv.emplace_back("q_opt_curves_delta", std::to_string(d));
            }
            if (!sep_truth_points.empty()) {
                require_readable(sep_truth_points);
                Signal2D truth = load_pgm(sep_truth_points).pixels;
                for (auto& v : truth.raw()) v = v != 0.0 ? 1.0 : 0.0;
                const auto [q, d] = quality_q_opt(res.blobs, truth, gaussian_kernel());
                std::cout << "Q_opt(points) = " << fmt(q) << " at delta " << d << '\n';
                kv.emplace_back("q_opt_points", fmt(q));
                kv.emplace_back("q_opt_points_delta", std::to_string(d));
            }
            kv.emplace_back("wall_time_s", fmt(timer.seconds()));
            print_metrics("separate", kv);
        }
    } catch (const ConfigError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
