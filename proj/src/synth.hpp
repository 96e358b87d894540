#pragma once

#include <cstdint>

#include "image.hpp"

namespace latif {

// Deterministic piece-wise test images (depth-map / clip-art stand-ins).
//   step:    left half 0, right half 200; the edge sits at column width/2.
//   blocks:  seeded rectangular grid; every pixel takes one of the eight
//            plateau values {0, 32, 64, 96, 128, 160, 192, 224}.
//   clipart: overlapping flat shapes (background 220, rectangle 40,
//            disk 120, bar 0, square 180) with seeded placement jitter.
//   ramp:    horizontal linear ramp from 0 to 255.
enum class SynthKind { step, blocks, clipart, ramp };

/// Dimensions must be at least 8x8. Identical arguments give bit-identical
/// images.
Image synth_piecewise(SynthKind kind, int height, int width, uint64_t seed);

}  // namespace latif
