#pragma once

#include "planepx/image.hpp"
#include "planepx/types.hpp"

#include <cstdint>

namespace ppx {

// Guard on the residual-parallax denominator d_c - gamma * t_z. Points closer
// than this to the singular surface are rejected (or marked invalid in the
// dense mapper) instead of producing unbounded warps.
inline constexpr double kParallaxDenominatorEpsilon = 1e-6;

// Residual parallax displacement after plane alignment:
//
//   p_w - p = gamma / (d_c - gamma * t_z) * (t_z [u, v, 1]^T - K t)
//
// Parameterization: gamma and the depth behind it refer to the target camera,
// d_c is the source camera's distance to the plane, and t maps source-frame
// points to target-frame points (x = R x' + t). The third component of
// t_z p - K t is zero by construction and asserted in debug builds. Returns
// the first two components. Throws when |d_c - gamma t_z| <= 1e-6 m.
Eigen::Vector2d residual_parallax(const PixelPoint& p, double gamma,
                                  const Eigen::Vector3d& translation, double plane_distance,
                                  const CameraIntrinsics& k_target);

// Dense warp coordinates p_w = p + residual for every valid target pixel.
// Pixels with invalid depth or a near-singular denominator become invalid.
WarpField planar_parallax_map(const DepthMap& depth, const Eigen::Vector3d& translation,
                              const PlaneModel& plane, const CameraIntrinsics& k_target);

// Inverse-warp reconstruction of the target: output(p) = bilinear sample of
// the aligned image at p_w(p). Out-of-bounds or invalid warps yield invalid
// pixels with value 0. Throws on dimension mismatch.
MaskedImage synthesize_target(const MaskedImage& aligned, const WarpField& pw_field);

// Ground-truth warp computed without the residual-parallax formula, as the
// independent chain: backproject in the target camera, move to the source
// camera, project, then transfer through the plane homography. Serves as the
// reference the closed-form displacement is checked against. Throws when the
// point falls behind the source camera.
PixelPoint full_reprojection_oracle(const PixelPoint& p, double depth, const RigidMotion& motion,
                                    const PlaneModel& plane, const CameraIntrinsics& k_target,
                                    const CameraIntrinsics& k_source);

struct DerivationCheck {
  int trials = 0;
  int valid = 0;            // samples passing the visibility/singularity guards
  double max_error_px = 0.0;
};

// Randomized equivalence check between the closed-form residual parallax and
// full_reprojection_oracle over KITTI-like configurations. Deterministic for
// a fixed seed.
DerivationCheck check_derivation_equivalence(int trials, std::uint64_t seed);

}  // namespace ppx
