#pragma once

#include <string>

#include "shearlet/grid.hpp"

namespace shearlet {

/// Binary PGM (P5), 8-bit or 16-bit (16-bit samples big-endian). Values are
/// promoted to double unchanged on load; on save they are clamped to
/// [0, maxval] and rounded.
struct PgmImage {
    Signal2D pixels; // axis 0 = image rows
    int maxval = 255;
};

PgmImage load_pgm(const std::string& path);
void save_pgm(const Signal2D& pixels, const std::string& path, int maxval = 255);

/// Raw volume format: magic "SVOL", version u16 LE, dims 3 x u32 LE, then
/// f64 samples little-endian, row-major (last axis fastest).
Signal3D load_svol(const std::string& path);
void save_svol(const Signal3D& volume, const std::string& path);

} // namespace shearlet
