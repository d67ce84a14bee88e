#pragma once

#include <complex>
#include <vector>

#include "shearlet/grid.hpp"

namespace shearlet::fft {

// Unnormalized DFTs: forward uses e^{-2 pi i n xi / N}, inverse e^{+...}.
// inverse(forward(x)) == N * x. Thread-safe; plans are cached internally.

void forward(std::vector<std::complex<double>>& data);
void inverse(std::vector<std::complex<double>>& data);
void forward(ComplexGrid2& g);
void inverse(ComplexGrid2& g);
void forward(ComplexGrid3& g);
void inverse(ComplexGrid3& g);

ComplexGrid2 forward_real(const RealGrid2& g);
ComplexGrid3 forward_real(const RealGrid3& g);
std::vector<std::complex<double>> forward_real(const std::vector<double>& v);

/// Inverse normalized by 1/N, real part returned. The discarded imaginary
/// L2 mass is added to *imag_residue when provided.
RealGrid2 inverse_real(const ComplexGrid2& g, double* imag_residue = nullptr);
RealGrid3 inverse_real(const ComplexGrid3& g, double* imag_residue = nullptr);

} // namespace shearlet::fft
