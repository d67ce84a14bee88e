#include "shearlet/fft.hpp"

#include <fftw3.h>

#include <array>
#include <map>
#include <mutex>

namespace shearlet::fft {

namespace {

struct PlanKey {
    std::array<int, 3> dims;
    int rank;
    int sign;
    bool operator<(const PlanKey& o) const {
        if (rank != o.rank) return rank < o.rank;
        if (sign != o.sign) return sign < o.sign;
        return dims < o.dims;
    }
};

// Plans are created once per shape with FFTW_UNALIGNED so they can be
// executed on any buffer; fftw_execute_dft on distinct buffers is
// thread-safe, only planning needs the lock.
fftw_plan get_plan(int rank, const std::array<int, 3>& dims, int sign) {
    static std::map<PlanKey, fftw_plan> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    PlanKey key{dims, rank, sign};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::size_t n = 1;
    for (int r = 0; r < rank; ++r) n *= static_cast<std::size_t>(dims[r]);
    std::vector<std::complex<double>> scratch(n);
    auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft(rank, dims.data(), p, p, sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, plan);
    return plan;
}

void execute(int rank, const std::array<int, 3>& dims, int sign,
             std::complex<double>* data) {
    fftw_plan plan = get_plan(rank, dims, sign);
    auto* p = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, p, p);
}

} // namespace

void forward(std::vector<std::complex<double>>& data) {
    execute(1, {static_cast<int>(data.size()), 0, 0}, FFTW_FORWARD, data.data());
}

void inverse(std::vector<std::complex<double>>& data) {
    execute(1, {static_cast<int>(data.size()), 0, 0}, FFTW_BACKWARD, data.data());
}

void forward(ComplexGrid2& g) {
    execute(2, {static_cast<int>(g.size0()), static_cast<int>(g.size1()), 0},
            FFTW_FORWARD, g.data());
}

void inverse(ComplexGrid2& g) {
    execute(2, {static_cast<int>(g.size0()), static_cast<int>(g.size1()), 0},
            FFTW_BACKWARD, g.data());
}

void forward(ComplexGrid3& g) {
    execute(3,
            {static_cast<int>(g.size0()), static_cast<int>(g.size1()),
             static_cast<int>(g.size2())},
            FFTW_FORWARD, g.data());
}

void inverse(ComplexGrid3& g) {
    execute(3,
            {static_cast<int>(g.size0()), static_cast<int>(g.size1()),
             static_cast<int>(g.size2())},
            FFTW_BACKWARD, g.data());
}

ComplexGrid2 forward_real(const RealGrid2& g) {
    ComplexGrid2 out(g.size0(), g.size1());
    for (std::size_t i = 0; i < g.size(); ++i) out.raw()[i] = g.raw()[i];
    forward(out);
    return out;
}

ComplexGrid3 forward_real(const RealGrid3& g) {
    ComplexGrid3 out(g.size0(), g.size1(), g.size2());
    for (std::size_t i = 0; i < g.size(); ++i) out.raw()[i] = g.raw()[i];
    forward(out);
    return out;
}

std::vector<std::complex<double>> forward_real(const std::vector<double>& v) {
    std::vector<std::complex<double>> out(v.begin(), v.end());
    forward(out);
    return out;
}

namespace {
template <typename CG, typename RG>
RG inverse_real_impl(const CG& g, double* imag_residue) {
    CG tmp = g;
    inverse(tmp);
    RG out = [&] {
        if constexpr (std::is_same_v<CG, ComplexGrid2>)
            return RG(g.size0(), g.size1());
        else
            return RG(g.size0(), g.size1(), g.size2());
    }();
    const double inv_n = 1.0 / static_cast<double>(g.size());
    double residue2 = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::complex<double> z = tmp.raw()[i] * inv_n;
        out.raw()[i] = z.real();
        residue2 += z.imag() * z.imag();
    }
    if (imag_residue) *imag_residue += std::sqrt(residue2);
    return out;
}
} // namespace

RealGrid2 inverse_real(const ComplexGrid2& g, double* imag_residue) {
    return inverse_real_impl<ComplexGrid2, RealGrid2>(g, imag_residue);
}

RealGrid3 inverse_real(const ComplexGrid3& g, double* imag_residue) {
    return inverse_real_impl<ComplexGrid3, RealGrid3>(g, imag_residue);
}

} // namespace shearlet::fft
