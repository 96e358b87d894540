#include "pgm.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace latif {

namespace {

// Next whitespace-delimited token, skipping '#' comments.
std::string next_token(std::istream& in) {
    std::string tok;
    int ch;
    while ((ch = in.get()) != EOF) {
        if (ch == '#') {
            while ((ch = in.get()) != EOF && ch != '\n') {
            }
            continue;
        }
        if (std::isspace(ch)) {
            if (!tok.empty()) break;
            continue;
        }
        tok.push_back(static_cast<char>(ch));
    }
    return tok;
}

int parse_positive_int(const std::string& tok, const std::string& what) {
    if (tok.empty()) throw IoError("pgm: truncated header, missing " + what);
    int value = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') throw IoError("pgm: malformed " + what + " '" + tok + "'");
        value = value * 10 + (c - '0');
        if (value > 1 << 26) throw IoError("pgm: " + what + " out of range");
    }
    return value;
}

}  // namespace

Image read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("pgm: cannot open '" + path + "' for reading");

    const std::string magic = next_token(in);
    if (magic != "P2" && magic != "P5")
        throw IoError("pgm: unsupported magic '" + magic + "' (expected P2 or P5)");

    const int width = parse_positive_int(next_token(in), "width");
    const int height = parse_positive_int(next_token(in), "height");
    const int maxval = parse_positive_int(next_token(in), "maxval");
    if (width < 1 || height < 1) throw IoError("pgm: dimensions must be positive");
    if (maxval != 255)
        throw IoError("pgm: unsupported maxval " + std::to_string(maxval) + " (only 255)");

    Image img(height, width);
    if (magic == "P5") {
        // The header terminator was consumed by the token reader.
        std::vector<uint8_t> bytes(static_cast<size_t>(width) * height);
        in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        if (static_cast<size_t>(in.gcount()) != bytes.size())
            throw IoError("pgm: truncated P5 payload in '" + path + "'");
        for (size_t i = 0; i < bytes.size(); ++i) img.data[i] = static_cast<double>(bytes[i]);
    } else {
        for (size_t i = 0; i < img.data.size(); ++i) {
            const std::string tok = next_token(in);
            if (tok.empty()) throw IoError("pgm: truncated P2 payload in '" + path + "'");
            const int v = parse_positive_int(tok, "pixel");
            if (v > maxval) throw IoError("pgm: pixel value exceeds maxval");
            img.data[i] = static_cast<double>(v);
        }
    }
    return img;
}

void write_pgm(const Image& img, const std::string& path) {
    if (img.height < 1 || img.width < 1 ||
        img.data.size() != static_cast<size_t>(img.height) * img.width)
        throw std::invalid_argument("write_pgm: invalid image");

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("pgm: cannot open '" + path + "' for writing");
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    std::vector<uint8_t> bytes(img.data.size());
    for (size_t i = 0; i < img.data.size(); ++i) {
        const double rounded = std::round(img.data[i]);  // half away from zero
        const double clamped = rounded < 0.0 ? 0.0 : (rounded > 255.0 ? 255.0 : rounded);
        bytes[i] = static_cast<uint8_t>(clamped);
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("pgm: write failed for '" + path + "'");
}

}  // namespace latif
