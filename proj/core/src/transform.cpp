#include "shearlet/transform.hpp"

#include <cstring>
#include <istream>
#include <ostream>

#include "shearlet/errors.hpp"
#include "shearlet/fft.hpp"
#include "shearlet/parallel.hpp"

namespace shearlet {

CoefficientStack2D forward(const Signal2D& f, const ShearletSystem2D& sys, int threads) {
    if (f.size0() != sys.rows || f.size1() != sys.cols)
        throw ShapeError("forward: signal dims do not match the system grid");
    const ComplexGrid2 F = fft::forward_real(f);
    const double input_norm = l2_norm(f);

    CoefficientStack2D out;
    out.rows = sys.rows;
    out.cols = sys.cols;
    out.index = sys.index;
    out.bands.resize(sys.filters.size());

    std::vector<double> residue(sys.filters.size(), 0.0);
    parallel_for(sys.filters.size(), threads, [&](std::size_t i) {
        ComplexGrid2 prod(F.size0(), F.size1());
        const auto& psi = sys.filters[i];
        for (std::size_t p = 0; p < F.size(); ++p)
            prod.raw()[p] = std::conj(psi.raw()[p]) * F.raw()[p];
        out.bands[i] = fft::inverse_real(prod, &residue[i]);
    });
    for (double r : residue)
        if (r > 1e-8 * std::max(input_norm, 1e-300))
            throw Error("forward: imaginary residue exceeds 1e-8 of the input norm");
    return out;
}

CoefficientStack3D forward(const Signal3D& f, const ShearletSystem3D& sys, int threads) {
    if (f.size0() != sys.dims[0] || f.size1() != sys.dims[1] || f.size2() != sys.dims[2])
        throw ShapeError("forward: signal dims do not match the system grid");
    const ComplexGrid3 F = fft::forward_real(f);
    const double input_norm = l2_norm(f);

    CoefficientStack3D out;
    out.dims = sys.dims;
    out.index = sys.index;
    out.bands.resize(sys.index.size());

    std::vector<double> residue(sys.index.size(), 0.0);
    parallel_for(sys.index.size(), threads, [&](std::size_t i) {
        ComplexGrid3 prod = sys.filter_freq(i);
        for (std::size_t p = 0; p < F.size(); ++p)
            prod.raw()[p] = std::conj(prod.raw()[p]) * F.raw()[p];
        out.bands[i] = fft::inverse_real(prod, &residue[i]);
    });
    for (double r : residue)
        if (r > 1e-8 * std::max(input_norm, 1e-300))
            throw Error("forward: imaginary residue exceeds 1e-8 of the input norm");
    return out;
}

Signal2D inverse(const CoefficientStack2D& coeffs, const ShearletSystem2D& sys, int threads) {
    if (coeffs.rows != sys.rows || coeffs.cols != sys.cols ||
        coeffs.bands.size() != sys.filters.size())
        throw ShapeError("inverse: coefficient stack does not match the system");
    const auto& duals = sys.duals();

    const int t = resolve_threads(threads);
    const std::size_t n = coeffs.bands.size();
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(t), std::max<std::size_t>(n, 1));
    std::vector<ComplexGrid2> partial(workers, ComplexGrid2(sys.rows, sys.cols));
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::size_t lo = n * w / workers;
            const std::size_t hi = n * (w + 1) / workers;
            for (std::size_t i = lo; i < hi; ++i) {
                ComplexGrid2 B = fft::forward_real(coeffs.bands[i]);
                auto& acc = partial[w];
                for (std::size_t p = 0; p < B.size(); ++p)
                    acc.raw()[p] += B.raw()[p] * duals[i].raw()[p];
            }
        });
    }
    for (auto& th : pool) th.join();
    // Deterministic reduction in worker order.
    ComplexGrid2 acc(sys.rows, sys.cols);
    for (const auto& p : partial)
        for (std::size_t i = 0; i < acc.size(); ++i) acc.raw()[i] += p.raw()[i];
    return fft::inverse_real(acc);
}

Signal3D inverse(const CoefficientStack3D& coeffs, const ShearletSystem3D& sys, int threads) {
    if (coeffs.dims != sys.dims || coeffs.bands.size() != sys.index.size())
        throw ShapeError("inverse: coefficient stack does not match the system");
    const double wmin =
        *std::min_element(sys.frame_weight.raw().begin(), sys.frame_weight.raw().end());
    if (wmin < 1e-12) throw SingularFrameError("inverse: frame weight below 1e-12");

    const int t = resolve_threads(threads);
    const std::size_t n = coeffs.bands.size();
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(t), std::max<std::size_t>(n, 1));
    std::vector<ComplexGrid3> partial(workers,
                                      ComplexGrid3(sys.dims[0], sys.dims[1], sys.dims[2]));
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::size_t lo = n * w / workers;
            const std::size_t hi = n * (w + 1) / workers;
            for (std::size_t i = lo; i < hi; ++i) {
                ComplexGrid3 B = fft::forward_real(coeffs.bands[i]);
                const ComplexGrid3 psi = sys.filter_freq(i);
                auto& acc = partial[w];
                for (std::size_t p = 0; p < B.size(); ++p)
                    acc.raw()[p] += B.raw()[p] * psi.raw()[p] / sys.frame_weight.raw()[p];
            }
        });
    }
    for (auto& th : pool) th.join();
    ComplexGrid3 acc(sys.dims[0], sys.dims[1], sys.dims[2]);
    for (const auto& p : partial)
        for (std::size_t i = 0; i < acc.size(); ++i) acc.raw()[i] += p.raw()[i];
    return fft::inverse_real(acc);
}

namespace {

constexpr char kMagic[4] = {'S', 'H', 'C', 'F'};
constexpr std::uint16_t kVersion = 1;

void put_bytes(std::ostream& out, const void* p, std::size_t n) {
    out.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}
template <typename T>
void put_le(std::ostream& out, T v) {
    unsigned char b[sizeof(T)];
    using U = std::make_unsigned_t<T>;
    U u;
    std::memcpy(&u, &v, sizeof(T));
    for (std::size_t i = 0; i < sizeof(T); ++i)
        b[i] = static_cast<unsigned char>(u >> (8 * i));
    put_bytes(out, b, sizeof(T));
}
void put_f64_le(std::ostream& out, double v) {
    std::uint64_t u;
    std::memcpy(&u, &v, 8);
    put_le(out, u);
}

template <typename T>
T get_le(std::istream& in) {
    unsigned char b[sizeof(T)];
    if (!in.read(reinterpret_cast<char*>(b), sizeof(T)))
        throw FormatError("coefficient stream truncated");
    using U = std::make_unsigned_t<T>;
    U u = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i)
        u |= static_cast<U>(b[i]) << (8 * i);
    T v;
    std::memcpy(&v, &u, sizeof(T));
    return v;
}
double get_f64_le(std::istream& in) {
    const std::uint64_t u = get_le<std::uint64_t>(in);
    double v;
    std::memcpy(&v, &u, 8);
    return v;
}

void read_magic_version(std::istream& in) {
    char m[4];
    if (!in.read(m, 4) || std::memcmp(m, kMagic, 4) != 0)
        throw FormatError("coefficient stream: bad magic");
    const auto version = get_le<std::uint16_t>(in);
    if (version != kVersion) throw FormatError("coefficient stream: unsupported version");
}

} // namespace

void serialize(const CoefficientStack2D& coeffs, std::ostream& out) {
    put_bytes(out, kMagic, 4);
    put_le(out, kVersion);
    put_le(out, std::uint8_t{2});
    put_le(out, static_cast<std::uint32_t>(coeffs.rows));
    put_le(out, static_cast<std::uint32_t>(coeffs.cols));
    put_le(out, static_cast<std::uint32_t>(coeffs.bands.size()));
    for (const auto& fi : coeffs.index) {
        put_le(out, static_cast<std::uint8_t>(fi.kind));
        put_le(out, static_cast<std::int32_t>(fi.scale));
        put_le(out, static_cast<std::int32_t>(fi.shear));
        put_le(out, std::int32_t{0});
    }
    for (const auto& band : coeffs.bands)
        for (double v : band.raw()) put_f64_le(out, v);
    if (!out) throw FormatError("coefficient stream: write failed");
}

void serialize(const CoefficientStack3D& coeffs, std::ostream& out) {
    put_bytes(out, kMagic, 4);
    put_le(out, kVersion);
    put_le(out, std::uint8_t{3});
    for (std::size_t d : coeffs.dims) put_le(out, static_cast<std::uint32_t>(d));
    put_le(out, static_cast<std::uint32_t>(coeffs.bands.size()));
    for (const auto& fi : coeffs.index) {
        put_le(out, static_cast<std::uint8_t>(fi.kind));
        put_le(out, static_cast<std::int32_t>(fi.scale));
        put_le(out, static_cast<std::int32_t>(fi.k1));
        put_le(out, static_cast<std::int32_t>(fi.k2));
    }
    for (const auto& band : coeffs.bands)
        for (double v : band.raw()) put_f64_le(out, v);
    if (!out) throw FormatError("coefficient stream: write failed");
}

int shcf_dimensionality(std::istream& in) {
    read_magic_version(in);
    const auto dim = get_le<std::uint8_t>(in);
    if (dim != 2 && dim != 3) throw FormatError("coefficient stream: bad dimensionality");
    return dim;
}

CoefficientStack2D deserialize_2d(std::istream& in) {
    if (shcf_dimensionality(in) != 2)
        throw FormatError("coefficient stream: expected a 2D stack");
    CoefficientStack2D out;
    out.rows = get_le<std::uint32_t>(in);
    out.cols = get_le<std::uint32_t>(in);
    const auto count = get_le<std::uint32_t>(in);
    if (out.rows == 0 || out.cols == 0 || count == 0)
        throw FormatError("coefficient stream: empty dims or band count");
    out.index.resize(count);
    for (auto& fi : out.index) {
        const auto kind = get_le<std::uint8_t>(in);
        if (kind > 2) throw FormatError("coefficient stream: bad 2D filter kind");
        fi.kind = static_cast<FilterKind2D>(kind);
        fi.scale = get_le<std::int32_t>(in);
        fi.shear = get_le<std::int32_t>(in);
        (void)get_le<std::int32_t>(in);
    }
    out.bands.assign(count, RealGrid2(out.rows, out.cols));
    for (auto& band : out.bands)
        for (double& v : band.raw()) v = get_f64_le(in);
    return out;
}

CoefficientStack3D deserialize_3d(std::istream& in) {
    if (shcf_dimensionality(in) != 3)
        throw FormatError("coefficient stream: expected a 3D stack");
    CoefficientStack3D out;
    for (auto& d : out.dims) d = get_le<std::uint32_t>(in);
    const auto count = get_le<std::uint32_t>(in);
    if (out.dims[0] == 0 || out.dims[1] == 0 || out.dims[2] == 0 || count == 0)
        throw FormatError("coefficient stream: empty dims or band count");
    out.index.resize(count);
    for (auto& fi : out.index) {
        const auto kind = get_le<std::uint8_t>(in);
        if (kind != 0 && (kind < 3 || kind > 5))
            throw FormatError("coefficient stream: bad 3D filter kind");
        fi.kind = static_cast<FilterKind3D>(kind);
        fi.scale = get_le<std::int32_t>(in);
        fi.k1 = get_le<std::int32_t>(in);
        fi.k2 = get_le<std::int32_t>(in);
    }
    out.bands.assign(count, RealGrid3(out.dims[0], out.dims[1], out.dims[2]));
    for (auto& band : out.bands)
        for (double& v : band.raw()) v = get_f64_le(in);
    return out;
}

} // namespace shearlet
