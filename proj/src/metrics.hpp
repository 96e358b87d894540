#pragma once

#include "image.hpp"

namespace latif {

/// 10*log10(255^2 / MSE) in decibels. Identical images return +infinity,
/// which is the documented sentinel for a zero-error comparison.
double psnr(const Image& a, const Image& b);

/// Discrete total variation: sum over pixels of sqrt((dx I)^2 + (dy I)^2)
/// with forward differences.
double discrete_tv(const Image& img);

}  // namespace latif
