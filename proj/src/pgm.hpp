#pragma once

#include <string>

#include "image.hpp"

namespace latif {

/// Reads P2 (ASCII) or P5 (binary) PGM with maxval 255. Header comments
/// (# to end of line) are allowed. Throws IoError on malformed input,
/// unsupported maxval, or a truncated payload.
Image read_pgm(const std::string& path);

/// Writes canonical binary P5 ("P5\n<w> <h>\n255\n" + payload). Values are
/// rounded half away from zero and clamped to [0,255].
void write_pgm(const Image& img, const std::string& path);

}  // namespace latif
