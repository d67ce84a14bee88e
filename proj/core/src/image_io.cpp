#include "shearlet/image_io.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

#include "shearlet/errors.hpp"

namespace shearlet {

namespace {

int next_pnm_token(std::istream& in, std::string& tok) {
    tok.clear();
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    while (c != EOF && !std::isspace(c)) {
        tok.push_back(static_cast<char>(c));
        c = in.get();
    }
    return tok.empty() ? EOF : 0;
}

std::size_t parse_size(const std::string& tok, const char* what) {
    std::size_t v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') throw FormatError(std::string("PGM: bad ") + what);
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
}

} // namespace

PgmImage load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open PGM file: " + path);
    std::string tok;
    if (next_pnm_token(in, tok) == EOF || tok != "P5")
        throw FormatError("not a binary PGM (P5) file: " + path);
    if (next_pnm_token(in, tok) == EOF) throw FormatError("PGM truncated: " + path);
    const std::size_t width = parse_size(tok, "width");
    if (next_pnm_token(in, tok) == EOF) throw FormatError("PGM truncated: " + path);
    const std::size_t height = parse_size(tok, "height");
    if (next_pnm_token(in, tok) == EOF) throw FormatError("PGM truncated: " + path);
    const std::size_t maxval = parse_size(tok, "maxval");
    if (width == 0 || height == 0 || maxval == 0 || maxval > 65535)
        throw FormatError("PGM: bad header values: " + path);

    PgmImage img;
    img.maxval = static_cast<int>(maxval);
    img.pixels = Signal2D(height, width);
    const std::size_t bytes_per = maxval > 255 ? 2 : 1;
    std::vector<unsigned char> row(width * bytes_per);
    for (std::size_t i = 0; i < height; ++i) {
        if (!in.read(reinterpret_cast<char*>(row.data()),
                     static_cast<std::streamsize>(row.size())))
            throw FormatError("PGM pixel data truncated: " + path);
        for (std::size_t j = 0; j < width; ++j) {
            if (bytes_per == 1)
                img.pixels(i, j) = static_cast<double>(row[j]);
            else
                img.pixels(i, j) =
                    static_cast<double>((row[2 * j] << 8) | row[2 * j + 1]);
        }
    }
    return img;
}

void save_pgm(const Signal2D& pixels, const std::string& path, int maxval) {
    if (maxval <= 0 || maxval > 65535) throw FormatError("PGM: maxval out of range");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write PGM file: " + path);
    out << "P5\n" << pixels.size1() << ' ' << pixels.size0() << '\n' << maxval << '\n';
    const bool wide = maxval > 255;
    std::vector<unsigned char> row(pixels.size1() * (wide ? 2 : 1));
    for (std::size_t i = 0; i < pixels.size0(); ++i) {
        for (std::size_t j = 0; j < pixels.size1(); ++j) {
            double v = std::round(pixels(i, j));
            v = std::min(static_cast<double>(maxval), std::max(0.0, v));
            const auto u = static_cast<unsigned int>(v);
            if (wide) {
                row[2 * j] = static_cast<unsigned char>(u >> 8);
                row[2 * j + 1] = static_cast<unsigned char>(u & 0xff);
            } else {
                row[j] = static_cast<unsigned char>(u);
            }
        }
        out.write(reinterpret_cast<const char*>(row.data()),
                  static_cast<std::streamsize>(row.size()));
    }
    if (!out) throw FormatError("PGM write failed: " + path);
}

namespace {
constexpr char kSvolMagic[4] = {'S', 'V', 'O', 'L'};

template <typename T>
T get_le(std::istream& in, const std::string& path) {
    unsigned char b[sizeof(T)];
    if (!in.read(reinterpret_cast<char*>(b), sizeof(T)))
        throw FormatError("SVOL truncated: " + path);
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(b[i]) << (8 * i);
    return v;
}

template <typename T>
void put_le(std::ostream& out, T v) {
    unsigned char b[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i)
        b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), sizeof(T));
}
} // namespace

Signal3D load_svol(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open SVOL file: " + path);
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kSvolMagic, 4) != 0)
        throw FormatError("not an SVOL file: " + path);
    const auto version = get_le<std::uint16_t>(in, path);
    if (version != 1) throw FormatError("SVOL: unsupported version: " + path);
    const auto n0 = get_le<std::uint32_t>(in, path);
    const auto n1 = get_le<std::uint32_t>(in, path);
    const auto n2 = get_le<std::uint32_t>(in, path);
    if (n0 == 0 || n1 == 0 || n2 == 0) throw FormatError("SVOL: zero dims: " + path);
    Signal3D vol(n0, n1, n2);
    for (auto& x : vol.raw()) {
        const std::uint64_t u = get_le<std::uint64_t>(in, path);
        std::memcpy(&x, &u, 8);
    }
    return vol;
}

void save_svol(const Signal3D& volume, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write SVOL file: " + path);
    out.write(kSvolMagic, 4);
    put_le<std::uint16_t>(out, 1);
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(volume.size0()));
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(volume.size1()));
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(volume.size2()));
    for (double x : volume.raw()) {
        std::uint64_t u;
        std::memcpy(&u, &x, 8);
        put_le(out, u);
    }
    if (!out) throw FormatError("SVOL write failed: " + path);
}

} // namespace shearlet
