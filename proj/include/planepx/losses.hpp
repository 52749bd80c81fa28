#pragma once

#include "planepx/image.hpp"

#include <stdexcept>

namespace ppx {

struct LossConfig {
  double alpha = 0.85;     // SSIM/L1 mixing weight
  double lambda = 1e-3;    // smoothness weight
  double ssim_c1 = 1e-4;   // 0.01^2
  double ssim_c2 = 9e-4;   // 0.03^2
  int ssim_window = 3;     // odd box-filter side

  void validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0))
      throw std::invalid_argument("LossConfig: alpha must be in [0, 1]");
    if (!(lambda >= 0.0)) throw std::invalid_argument("LossConfig: lambda must be >= 0");
    if (ssim_window < 3 || ssim_window % 2 == 0)
      throw std::invalid_argument("LossConfig: ssim_window must be odd and >= 3");
    if (!(ssim_c1 > 0.0) || !(ssim_c2 > 0.0))
      throw std::invalid_argument("LossConfig: SSIM constants must be positive");
  }
};

// Per-pixel SSIM from local box-filtered means/variances/covariance over
// ssim_window, replicate padding at the borders. Multi-channel inputs are
// averaged over channels. Values lie in [-1, 1]; identical inputs give
// exactly 1.
LossMap ssim_map(const ImageBuffer& a, const ImageBuffer& b, const LossConfig& config);

// (1 - alpha) * |target - synthesized| (channel-averaged) +
// (alpha / 2) * (1 - SSIM). The mask marks pixels that should enter
// downstream reductions.
LossMap photometric_loss(const ImageBuffer& target, const ImageBuffer& synthesized,
                         const Mask& valid, const LossConfig& config);

// Per-pixel minimum over the two aligned-source losses. Where only one input
// is valid that value is taken; ties keep the previous-frame value.
LossMap min_reprojection(const LossMap& loss_prev, const LossMap& loss_next);

// Edge-aware first-order smoothness on the mean-normalized inverse depth:
// |dx d*| exp(-|dx Ibar|) + |dy d*| exp(-|dy Ibar|), forward differences,
// Ibar the channel-mean image. Invariant to positive rescaling of the depth.
// Throws when no pixel is valid (the normalizing mean is undefined).
LossMap smoothness_loss(const DepthMap& depth, const ImageBuffer& image);

// Mean over valid pixels of lambda * smooth + photo, deterministic row-major
// pairwise reduction. A pixel contributes when valid in both maps; throws if
// none is.
double total_loss(const LossMap& photo, const LossMap& smooth, const LossConfig& config);

}  // namespace ppx
