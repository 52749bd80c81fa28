#pragma once

#include "planepx/image.hpp"

#include <cmath>

namespace ppx {

// Bilinear sampling with the "invalid outside" border policy: a sample is
// accepted only when (x, y) lies in [0, w-1] x [0, h-1]; there is no clamping
// or extrapolation. Returns false (and leaves out untouched) otherwise.
inline bool sample_bilinear(const ImageBuffer& img, double x, double y, float* out) {
  if (!(x >= 0.0 && y >= 0.0 && x <= img.width - 1 && y <= img.height - 1)) return false;
  int x0 = img.width > 1 ? std::min(static_cast<int>(x), img.width - 2) : 0;
  int y0 = img.height > 1 ? std::min(static_cast<int>(y), img.height - 2) : 0;
  int x1 = img.width > 1 ? x0 + 1 : 0;
  int y1 = img.height > 1 ? y0 + 1 : 0;
  const double dx = x - x0;
  const double dy = y - y0;
  const double w00 = (1.0 - dx) * (1.0 - dy);
  const double w10 = dx * (1.0 - dy);
  const double w01 = (1.0 - dx) * dy;
  const double w11 = dx * dy;
  for (int c = 0; c < img.channels; ++c) {
    out[c] = static_cast<float>(w00 * img.at(x0, y0, c) + w10 * img.at(x1, y0, c) +
                                w01 * img.at(x0, y1, c) + w11 * img.at(x1, y1, c));
  }
  return true;
}

// Masked variant: additionally requires all four footprint taps to be valid.
inline bool sample_bilinear_masked(const ImageBuffer& img, const Mask& valid, double x, double y,
                                   float* out) {
  if (!(x >= 0.0 && y >= 0.0 && x <= img.width - 1 && y <= img.height - 1)) return false;
  int x0 = img.width > 1 ? std::min(static_cast<int>(x), img.width - 2) : 0;
  int y0 = img.height > 1 ? std::min(static_cast<int>(y), img.height - 2) : 0;
  int x1 = img.width > 1 ? x0 + 1 : 0;
  int y1 = img.height > 1 ? y0 + 1 : 0;
  if (!valid.at(x0, y0) || !valid.at(x1, y0) || !valid.at(x0, y1) || !valid.at(x1, y1))
    return false;
  const double dx = x - x0;
  const double dy = y - y0;
  const double w00 = (1.0 - dx) * (1.0 - dy);
  const double w10 = dx * (1.0 - dy);
  const double w01 = (1.0 - dx) * dy;
  const double w11 = dx * dy;
  for (int c = 0; c < img.channels; ++c) {
    out[c] = static_cast<float>(w00 * img.at(x0, y0, c) + w10 * img.at(x1, y0, c) +
                                w01 * img.at(x0, y1, c) + w11 * img.at(x1, y1, c));
  }
  return true;
}

}  // namespace ppx
