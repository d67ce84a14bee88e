#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "shearlet/system2d.hpp"
#include "shearlet/system3d.hpp"

namespace shearlet {

/// One real-valued coefficient band per system filter, all the size of the
/// analyzed signal. Band order mirrors the system's filter index table.
struct CoefficientStack2D {
    std::size_t rows = 0, cols = 0;
    std::vector<FilterIndex2D> index;
    std::vector<RealGrid2> bands;
};

struct CoefficientStack3D {
    std::array<std::size_t, 3> dims{0, 0, 0};
    std::vector<FilterIndex3D> index;
    std::vector<RealGrid3> bands;
};

/// Undecimated analysis: band_i = IDFT(conj(psi_hat_i) .* DFT(f)), i.e. the
/// periodic cross-correlation of the signal with each filter. The discarded
/// imaginary residue is asserted to stay below 1e-8 * ||f||_2.
CoefficientStack2D forward(const Signal2D& f, const ShearletSystem2D& sys, int threads = 0);
CoefficientStack3D forward(const Signal3D& f, const ShearletSystem3D& sys, int threads = 0);

/// Exact synthesis: f = IDFT(sum_i DFT(band_i) .* gamma_hat_i).
Signal2D inverse(const CoefficientStack2D& coeffs, const ShearletSystem2D& sys,
                 int threads = 0);
Signal3D inverse(const CoefficientStack3D& coeffs, const ShearletSystem3D& sys,
                 int threads = 0);

// Coefficient file format: magic "SHCF", version u16, dimensionality u8,
// dims (u32 little-endian each), band count u32, per-band index records
// (kind u8, scale i32, shears 2 x i32), then band data as little-endian
// f64, row-major.

void serialize(const CoefficientStack2D& coeffs, std::ostream& out);
void serialize(const CoefficientStack3D& coeffs, std::ostream& out);

/// Dimensionality tag of a serialized stack (peeks the header).
int shcf_dimensionality(std::istream& in);

CoefficientStack2D deserialize_2d(std::istream& in);
CoefficientStack3D deserialize_3d(std::istream& in);

} // namespace shearlet
