#include "synth.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "noise.hpp"

namespace latif {

namespace {

constexpr std::array<double, 8> kBlockPalette = {0, 32, 64, 96, 128, 160, 192, 224};

Image make_step(int height, int width) {
    Image img(height, width, 0.0);
    for (int r = 0; r < height; ++r)
        for (int c = width / 2; c < width; ++c) img.at(r, c) = 200.0;
    return img;
}

std::vector<int> sorted_cuts(SplitMix64& rng, int count, int extent) {
    std::vector<int> cuts(count);
    for (int& c : cuts) c = 1 + static_cast<int>(rng.next() % static_cast<uint64_t>(extent - 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(extent);
    return cuts;
}

Image make_blocks(int height, int width, uint64_t seed) {
    SplitMix64 rng(seed);
    const int row_bands = 3 + static_cast<int>(rng.next() % 2);
    const int col_bands = 3 + static_cast<int>(rng.next() % 2);
    const std::vector<int> row_cuts = sorted_cuts(rng, row_bands - 1, height);
    const std::vector<int> col_cuts = sorted_cuts(rng, col_bands - 1, width);

    Image img(height, width);
    int r0 = 0;
    for (int ri = 0; ri < static_cast<int>(row_cuts.size()); ++ri) {
        const int r1 = row_cuts[ri];
        int c0 = 0;
        for (int ci = 0; ci < static_cast<int>(col_cuts.size()); ++ci) {
            const int c1 = col_cuts[ci];
            const double value = kBlockPalette[rng.next() % kBlockPalette.size()];
            for (int r = r0; r < r1; ++r)
                for (int c = c0; c < c1; ++c) img.at(r, c) = value;
            c0 = c1;
        }
        r0 = r1;
    }
    return img;
}

Image make_clipart(int height, int width, uint64_t seed) {
    SplitMix64 rng(seed);
    // Placement jitter up to ~3% of each dimension.
    auto jitter = [&](int extent) {
        const int span = std::max(1, extent * 3 / 100);
        return static_cast<int>(rng.next() % static_cast<uint64_t>(2 * span + 1)) - span;
    };

    Image img(height, width, 220.0);

    const int rect_r0 = height / 10 + jitter(height);
    const int rect_r1 = rect_r0 + height / 2;
    const int rect_c0 = width * 8 / 100 + jitter(width);
    const int rect_c1 = rect_c0 + width * 37 / 100;
    for (int r = std::max(0, rect_r0); r < std::min(height, rect_r1); ++r)
        for (int c = std::max(0, rect_c0); c < std::min(width, rect_c1); ++c)
            img.at(r, c) = 40.0;

    const int disk_r = height * 55 / 100 + jitter(height);
    const int disk_c = width * 65 / 100 + jitter(width);
    const int radius = std::min(height, width) * 22 / 100;
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c) {
            const int dr = r - disk_r, dc = c - disk_c;
            if (dr * dr + dc * dc <= radius * radius) img.at(r, c) = 120.0;
        }

    const int bar_r0 = height * 75 / 100 + jitter(height);
    for (int r = std::max(0, bar_r0); r < std::min(height, bar_r0 + height / 10); ++r)
        for (int c = 0; c < width; ++c) img.at(r, c) = 0.0;

    const int sq = std::max(2, std::min(height, width) / 8);
    const int sq_r0 = height / 16 + jitter(height);
    const int sq_c0 = width - width / 16 - sq + jitter(width);
    for (int r = std::max(0, sq_r0); r < std::min(height, sq_r0 + sq); ++r)
        for (int c = std::max(0, sq_c0); c < std::min(width, sq_c0 + sq); ++c)
            img.at(r, c) = 180.0;

    return img;
}

Image make_ramp(int height, int width) {
    Image img(height, width);
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c)
            img.at(r, c) = 255.0 * static_cast<double>(c) / static_cast<double>(width - 1);
    return img;
}

}  // namespace

Image synth_piecewise(SynthKind kind, int height, int width, uint64_t seed) {
    if (height < 8 || width < 8)
        throw std::invalid_argument("synth_piecewise: dimensions must be at least 8x8");
    switch (kind) {
        case SynthKind::step:
            return make_step(height, width);
        case SynthKind::blocks:
            return make_blocks(height, width, seed);
        case SynthKind::clipart:
            return make_clipart(height, width, seed);
        case SynthKind::ramp:
            return make_ramp(height, width);
    }
    throw std::invalid_argument("synth_piecewise: unknown kind");
}

}  // namespace latif
