#pragma once

#include <span>
#include <utility>
#include <vector>

#include "solver.hpp"

namespace latif {

// Grayscale raster of real-valued intensities on a nominal [0,255] scale.
// Values are not clamped between iterations; quantization happens only at
// file output.
struct Image {
    int height = 0;
    int width = 0;
    std::vector<double> data;  // row-major, height*width entries

    Image() = default;
    Image(int h, int w, double fill = 0.0)
        : height(h), width(w), data(static_cast<size_t>(h) * static_cast<size_t>(w), fill) {}

    double& at(int r, int c) { return data[static_cast<size_t>(r) * width + c]; }
    double at(int r, int c) const { return data[static_cast<size_t>(r) * width + c]; }

    int pixels() const { return height * width; }
    bool same_shape(const Image& other) const {
        return height == other.height && width == other.width;
    }
};

/// Throws std::invalid_argument unless both sides are >= 2, the buffer
/// length matches, and every value is finite.
void validate_image(const Image& img);

struct Offset {
    int dr = 0;
    int dc = 0;
};

enum class Neighborhood { four_connected, eight_connected };

/// Offsets in a fixed, documented order: N, S, W, E for four-connected,
/// followed by NW, NE, SW, SE for eight-connected.
std::span<const Offset> neighbor_offsets(Neighborhood n);

/// Value at (r, c) with replicate (nearest-pixel) padding.
double sample_clamped(const Image& img, int r, int c);

/// I_j - I_i where j = (r+dr, c+dc) replicated from the nearest in-bounds
/// pixel. Along the straight out-of-bounds direction the replicated
/// neighbor is the pixel itself, so the boundary flux is exactly zero.
double neighbor_gradient(const Image& img, int r, int c, Offset offset);

/// Forward differences: (dx I)(r,c) = I(r,c+1) - I(r,c), zero in the last
/// column; forward_diff_y runs down rows with a zero last row.
Image forward_diff_x(const Image& img);
Image forward_diff_y(const Image& img);

/// (H*W)x(H*W) forward-difference operators under row-major vectorization.
/// Rows belonging to the last column (resp. last row) are empty.
CsrMatrix gradient_operator_x(int height, int width);
CsrMatrix gradient_operator_y(int height, int width);

}  // namespace latif
