#include "image.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace latif {

namespace {

constexpr std::array<Offset, 8> kOffsets = {{
    {-1, 0}, {1, 0}, {0, -1}, {0, 1},     // four-connected
    {-1, -1}, {-1, 1}, {1, -1}, {1, 1},   // diagonals
}};

}  // namespace

void validate_image(const Image& img) {
    if (img.height < 2 || img.width < 2)
        throw std::invalid_argument("image: height and width must be at least 2");
    if (img.data.size() != static_cast<size_t>(img.height) * static_cast<size_t>(img.width))
        throw std::invalid_argument("image: data length does not match height*width");
    for (double v : img.data)
        if (!std::isfinite(v)) throw std::invalid_argument("image: non-finite value");
}

std::span<const Offset> neighbor_offsets(Neighborhood n) {
    return n == Neighborhood::four_connected ? std::span<const Offset>(kOffsets.data(), 4)
                                             : std::span<const Offset>(kOffsets.data(), 8);
}

double sample_clamped(const Image& img, int r, int c) {
    r = std::clamp(r, 0, img.height - 1);
    c = std::clamp(c, 0, img.width - 1);
    return img.at(r, c);
}

double neighbor_gradient(const Image& img, int r, int c, Offset offset) {
    if (r < 0 || r >= img.height || c < 0 || c >= img.width)
        throw std::invalid_argument("neighbor_gradient: pixel index out of range");
    return sample_clamped(img, r + offset.dr, c + offset.dc) - img.at(r, c);
}

Image forward_diff_x(const Image& img) {
    Image out(img.height, img.width);
    for (int r = 0; r < img.height; ++r)
        for (int c = 0; c + 1 < img.width; ++c)
            out.at(r, c) = img.at(r, c + 1) - img.at(r, c);
    return out;
}

Image forward_diff_y(const Image& img) {
    Image out(img.height, img.width);
    for (int r = 0; r + 1 < img.height; ++r)
        for (int c = 0; c < img.width; ++c)
            out.at(r, c) = img.at(r + 1, c) - img.at(r, c);
    return out;
}

namespace {

CsrMatrix forward_difference_operator(int height, int width, bool along_x) {
    if (height < 2 || width < 2)
        throw std::invalid_argument("gradient operator: dimensions must be at least 2");
    const int n = height * width;
    CsrMatrix m;
    m.n = n;
    m.row_offsets.reserve(n + 1);
    m.row_offsets.push_back(0);
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            const int p = r * width + c;
            const bool interior = along_x ? (c + 1 < width) : (r + 1 < height);
            if (interior) {
                const int q = along_x ? p + 1 : p + width;
                m.col_indices.push_back(p);
                m.values.push_back(-1.0);
                m.col_indices.push_back(q);
                m.values.push_back(1.0);
            }
            m.row_offsets.push_back(static_cast<int>(m.col_indices.size()));
        }
    }
    return m;
}

}  // namespace

CsrMatrix gradient_operator_x(int height, int width) {
    return forward_difference_operator(height, width, true);
}

CsrMatrix gradient_operator_y(int height, int width) {
    return forward_difference_operator(height, width, false);
}

}  // namespace latif
