#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <stdexcept>

namespace ppx {

using Point3 = Eigen::Vector3d;      // camera-frame coordinates, meters
using PixelPoint = Eigen::Vector2d;  // continuous pixel coordinates (u, v)

// Pinhole calibration with zero skew. Pixel centers sit at integer
// coordinates; u runs along columns, v along rows.
struct CameraIntrinsics {
  double fx = 1.0;
  double fy = 1.0;
  double cx = 0.0;
  double cy = 0.0;
  int width = 1;
  int height = 1;

  CameraIntrinsics() = default;
  CameraIntrinsics(double fx_, double fy_, double cx_, double cy_, int width_, int height_)
      : fx(fx_), fy(fy_), cx(cx_), cy(cy_), width(width_), height(height_) {
    if (!(fx > 0.0) || !(fy > 0.0))
      throw std::invalid_argument("CameraIntrinsics: focal lengths must be positive");
    if (width < 1 || height < 1)
      throw std::invalid_argument("CameraIntrinsics: image size must be at least 1x1");
  }

  Eigen::Matrix3d matrix() const {
    Eigen::Matrix3d k;
    k << fx, 0.0, cx, 0.0, fy, cy, 0.0, 0.0, 1.0;
    return k;
  }

  // Closed-form inverse of the calibration matrix.
  Eigen::Matrix3d inverse_matrix() const {
    Eigen::Matrix3d ki;
    ki << 1.0 / fx, 0.0, -cx / fx, 0.0, 1.0 / fy, -cy / fy, 0.0, 0.0, 1.0;
    return ki;
  }

  // Unit-depth ray direction K^-1 [u, v, 1]^T.
  Eigen::Vector3d ray(const PixelPoint& p) const {
    return {(p.x() - cx) / fx, (p.y() - cy) / fy, 1.0};
  }

  bool contains(const PixelPoint& p) const {
    return p.x() >= 0.0 && p.x() <= width - 1 && p.y() >= 0.0 && p.y() <= height - 1;
  }
};

// Rigid transform taking source-camera coordinates to target-camera
// coordinates: x_target = R x_source + t. Orthonormality is checked on
// construction.
struct RigidMotion {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  RigidMotion() = default;
  RigidMotion(const Eigen::Matrix3d& r, const Eigen::Vector3d& t)
      : rotation(r), translation(t) {
    const double ortho = (r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    if (ortho > 1e-9)
      throw std::invalid_argument("RigidMotion: rotation is not orthonormal");
    if (std::abs(r.determinant() - 1.0) > 1e-9)
      throw std::invalid_argument("RigidMotion: rotation determinant is not +1");
  }

  static RigidMotion identity() { return {}; }

  Point3 to_target(const Point3& x_source) const { return rotation * x_source + translation; }
  Point3 to_source(const Point3& x_target) const {
    return rotation.transpose() * (x_target - translation);
  }

  RigidMotion inverse() const {
    return {rotation.transpose(), -(rotation.transpose() * translation)};
  }
};

// A 3D plane N^T x = d_c in the source camera frame; d_c is the
// perpendicular distance from the source camera center, in meters.
struct PlaneModel {
  Eigen::Vector3d normal = Eigen::Vector3d(0.0, 1.0, 0.0);
  double distance = 1.65;

  PlaneModel() = default;
  PlaneModel(const Eigen::Vector3d& n, double d_c) : normal(n), distance(d_c) {
    if (std::abs(n.norm() - 1.0) > 1e-12)
      throw std::invalid_argument("PlaneModel: normal must be a unit vector");
    if (!(d_c > 0.0))
      throw std::invalid_argument("PlaneModel: camera-to-plane distance must be positive");
  }
};

}  // namespace ppx
