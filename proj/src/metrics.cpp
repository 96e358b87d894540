#include "metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace latif {

double psnr(const Image& a, const Image& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("psnr: dimension mismatch");
    if (a.pixels() == 0) throw std::invalid_argument("psnr: empty image");
    double sq = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) {
        const double d = a.data[i] - b.data[i];
        sq += d * d;
    }
    const double mse = sq / static_cast<double>(a.pixels());
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double discrete_tv(const Image& img) {
    const Image gx = forward_diff_x(img);
    const Image gy = forward_diff_y(img);
    double total = 0.0;
    for (size_t i = 0; i < gx.data.size(); ++i)
        total += std::sqrt(gx.data[i] * gx.data[i] + gy.data[i] * gy.data[i]);
    return total;
}

}  // namespace latif
