#include "planepx/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace ppx {

PixelPoint project(const Point3& point, const CameraIntrinsics& intrinsics) {
  if (!point.allFinite()) throw std::invalid_argument("project: non-finite point");
  if (!(point.z() > 0.0)) throw std::invalid_argument("project: point behind camera (Z <= 0)");
  return {intrinsics.fx * point.x() / point.z() + intrinsics.cx,
          intrinsics.fy * point.y() / point.z() + intrinsics.cy};
}

Point3 backproject(const PixelPoint& pixel, double depth, const CameraIntrinsics& intrinsics) {
  if (!pixel.allFinite()) throw std::invalid_argument("backproject: non-finite pixel");
  if (!(depth > 0.0)) throw std::invalid_argument("backproject: depth must be positive");
  return depth * intrinsics.ray(pixel);
}

double point_plane_height(const Point3& point, const PlaneModel& plane) {
  return plane.distance - plane.normal.dot(point);
}

GammaMap gamma_from_depth(const DepthMap& depth_map, const CameraIntrinsics& intrinsics,
                          const PlaneModel& plane) {
  depth_map.validate();
  GammaMap gamma(depth_map.width, depth_map.height);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < depth_map.height; ++y) {
    for (int x = 0; x < depth_map.width; ++x) {
      if (!depth_map.valid_at(x, y)) continue;
      const double z = depth_map.at(x, y);
      const Point3 point = z * intrinsics.ray({static_cast<double>(x), static_cast<double>(y)});
      const double h = plane.distance - plane.normal.dot(point);
      gamma.set(x, y, h / z);
    }
  }
  return gamma;
}

DepthMap depth_from_gamma(const GammaMap& gamma_map, const CameraIntrinsics& intrinsics,
                          const PlaneModel& plane) {
  DepthMap depth(gamma_map.width, gamma_map.height);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < gamma_map.height; ++y) {
    for (int x = 0; x < gamma_map.width; ++x) {
      if (!gamma_map.valid_at(x, y)) continue;
      const Eigen::Vector3d ray =
          intrinsics.ray({static_cast<double>(x), static_cast<double>(y)});
      const double denom = gamma_map.at(x, y) + plane.normal.dot(ray);
      const double z = plane.distance / denom;
      if (std::isfinite(z) && z >= kDepthMin && z <= kDepthMax) depth.set(x, y, z);
    }
  }
  return depth;
}

}  // namespace ppx
