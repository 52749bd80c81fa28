#pragma once

#include "planepx/image.hpp"
#include "planepx/types.hpp"

namespace ppx {

// Pinhole projection p = (1/Z) K x. Throws if the point is behind the camera.
PixelPoint project(const Point3& point, const CameraIntrinsics& intrinsics);

// Inverse of project: x = depth * K^-1 [u, v, 1]^T. Throws on depth <= 0.
Point3 backproject(const PixelPoint& pixel, double depth, const CameraIntrinsics& intrinsics);

// Perpendicular height above the plane, h = d_c - N^T x. Negative for points
// on the far side of the plane; no clamping is applied.
double point_plane_height(const Point3& point, const PlaneModel& plane);

// Per-pixel gamma = h / Z with h from backprojection against the plane.
// Validity is propagated from the depth map.
GammaMap gamma_from_depth(const DepthMap& depth_map, const CameraIntrinsics& intrinsics,
                          const PlaneModel& plane);

// Inverts gamma_from_depth: Z = d_c / (gamma + N^T K^-1 [u, v, 1]^T).
// Rays with a vanishing denominator or Z outside [0.1, 250] become invalid.
DepthMap depth_from_gamma(const GammaMap& gamma_map, const CameraIntrinsics& intrinsics,
                          const PlaneModel& plane);

}  // namespace ppx
