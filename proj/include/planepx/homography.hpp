#pragma once

#include "planepx/image.hpp"
#include "planepx/types.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace ppx {

// 3x3 projective map, defined up to scale. Stored normalized: divided by
// H(2,2) when |H(2,2)| > 1e-12, otherwise scaled to unit Frobenius norm.
// Construction rejects singular matrices (|det| <= 1e-12 after
// normalization), so every Homography instance is invertible.
class Homography {
 public:
  explicit Homography(const Eigen::Matrix3d& m);

  static Homography identity() { return Homography(Eigen::Matrix3d::Identity()); }

  const Eigen::Matrix3d& matrix() const { return h_; }
  Homography inverse() const;

 private:
  Eigen::Matrix3d h_;
};

// One source->target pixel match.
struct Correspondence {
  PixelPoint source;
  PixelPoint target;
};
using CorrespondenceSet = std::vector<Correspondence>;

struct RansacConfig {
  double threshold_px = 1.0;    // symmetric transfer error cutoff, inclusive
  int max_iterations = 2000;
  double confidence = 0.999;    // adaptive early-exit confidence
  std::uint64_t seed = 0;
};

struct RansacResult {
  Homography h;
  std::vector<std::uint8_t> inliers;  // per input match, from the winning hypothesis
  int inlier_count = 0;
};

// Plane-induced homography H = K (R + t N^T / d_c) K'^-1 mapping source
// pixels to target pixels for points on the plane. The plane is expressed in
// the source camera frame. Throws on a degenerate (singular) configuration.
Homography compose_plane_homography(const RigidMotion& motion, const PlaneModel& plane,
                                    const CameraIntrinsics& k_target,
                                    const CameraIntrinsics& k_source);

// Perspective division of H [u, v, 1]^T. Throws when the third homogeneous
// component vanishes (|w| < 1e-12), i.e. the point maps to infinity.
PixelPoint apply_homography(const Homography& h, const PixelPoint& p);

// Normalized DLT (Hartley isotropic normalization: centroids to the origin,
// RMS distance sqrt(2)) minimizing the algebraic error. Requires >= 4 matches
// with no 3 collinear source points; throws on a rank-deficient system.
Homography estimate_homography_dlt(const CorrespondenceSet& matches);

// RANSAC over minimal 4-point DLT hypotheses. Inliers are matches with
// symmetric transfer error <= threshold; ties in inlier count are broken by
// lower summed inlier error, then by earlier iteration. The winner is refit
// by DLT on all of its inliers. Deterministic for a fixed seed.
RansacResult estimate_homography_ransac(const CorrespondenceSet& matches,
                                        const RansacConfig& config);

// Inverse warping: output(p) = bilinear sample of image at H^-1 p. Pixels
// whose sample footprint leaves the source image become invalid with value 0.
MaskedImage warp_image_homography(const ImageBuffer& image, const Homography& h);

// sqrt(d(t, H s)^2 + d(s, H^-1 t)^2) in pixels; +inf when either transfer
// lands at infinity. h_inv must be h.inverse().
double symmetric_transfer_error(const Homography& h, const Homography& h_inv,
                                const Correspondence& m);

}  // namespace ppx
