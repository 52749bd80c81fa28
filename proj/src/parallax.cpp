#include "planepx/parallax.hpp"

#include "planepx/geometry.hpp"
#include "planepx/homography.hpp"
#include "planepx/rng.hpp"
#include "planepx/sampling.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace ppx {

Eigen::Vector2d residual_parallax(const PixelPoint& p, double gamma,
                                  const Eigen::Vector3d& translation, double plane_distance,
                                  const CameraIntrinsics& k_target) {
  if (!p.allFinite() || !std::isfinite(gamma) || !translation.allFinite())
    throw std::invalid_argument("residual_parallax: non-finite input");
  const double tz = translation.z();
  const double denom = plane_distance - gamma * tz;
  if (std::abs(denom) <= kParallaxDenominatorEpsilon)
    throw std::invalid_argument("residual_parallax: parallax singularity (d_c - gamma*t_z ~ 0)");
  const Eigen::Vector3d kt = k_target.matrix() * translation;
  assert(std::abs(tz * 1.0 - kt.z()) == 0.0);  // third component of t_z*p - K*t
  const double scale = gamma / denom;
  return {scale * (tz * p.x() - kt.x()), scale * (tz * p.y() - kt.y())};
}

WarpField planar_parallax_map(const DepthMap& depth, const Eigen::Vector3d& translation,
                              const PlaneModel& plane, const CameraIntrinsics& k_target) {
  const GammaMap gamma = gamma_from_depth(depth, k_target, plane);
  WarpField field(depth.width, depth.height);
  const Eigen::Vector3d kt = k_target.matrix() * translation;
  const double tz = translation.z();
#pragma omp parallel for schedule(static)
  for (int y = 0; y < depth.height; ++y) {
    for (int x = 0; x < depth.width; ++x) {
      if (!gamma.valid_at(x, y)) continue;
      const double g = gamma.at(x, y);
      const double denom = plane.distance - g * tz;
      if (std::abs(denom) <= kParallaxDenominatorEpsilon) continue;
      const double scale = g / denom;
      const size_t i = field.index(x, y);
      field.u[i] = x + scale * (tz * x - kt.x());
      field.v[i] = y + scale * (tz * y - kt.y());
      field.valid[i] = 1;
    }
  }
  return field;
}

MaskedImage synthesize_target(const MaskedImage& aligned, const WarpField& pw_field) {
  if (aligned.image.width != pw_field.width || aligned.image.height != pw_field.height)
    throw std::invalid_argument("synthesize_target: warp field dimensions do not match image");
  MaskedImage out{ImageBuffer(aligned.image.width, aligned.image.height, aligned.image.channels, 0.0f),
                  Mask(aligned.image.width, aligned.image.height, 0)};
#pragma omp parallel for schedule(static)
  for (int y = 0; y < pw_field.height; ++y) {
    std::vector<float> px(static_cast<size_t>(aligned.image.channels));
    for (int x = 0; x < pw_field.width; ++x) {
      const size_t i = pw_field.index(x, y);
      if (!pw_field.valid[i]) continue;
      if (!sample_bilinear_masked(aligned.image, aligned.valid, pw_field.u[i], pw_field.v[i],
                                  px.data()))
        continue;
      for (int c = 0; c < aligned.image.channels; ++c) out.image.at(x, y, c) = px[c];
      out.valid.at(x, y) = 1;
    }
  }
  return out;
}

PixelPoint full_reprojection_oracle(const PixelPoint& p, double depth, const RigidMotion& motion,
                                    const PlaneModel& plane, const CameraIntrinsics& k_target,
                                    const CameraIntrinsics& k_source) {
  const Point3 x_target = backproject(p, depth, k_target);
  const Point3 x_source = motion.to_source(x_target);
  if (!(x_source.z() > 0.0))
    throw std::invalid_argument("full_reprojection_oracle: point behind source camera");
  const PixelPoint p_source = project(x_source, k_source);
  const Homography h = compose_plane_homography(motion, plane, k_target, k_source);
  return apply_homography(h, p_source);
}

DerivationCheck check_derivation_equivalence(int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("check_derivation_equivalence: trials must be >= 1");
  // KITTI-like calibrations; the source camera deliberately differs from the
  // target so both intrinsics paths are exercised.
  const CameraIntrinsics k_target(721.5377, 721.5377, 609.5593, 172.854, 1242, 375);
  const CameraIntrinsics k_source(700.0, 705.0, 600.0, 180.0, 1242, 375);
  const Rng root(seed);

  DerivationCheck result;
  result.trials = trials;

  double max_err = 0.0;
  int valid = 0;
#pragma omp parallel for schedule(static) reduction(max : max_err) reduction(+ : valid)
  for (int i = 0; i < trials; ++i) {
    Rng rng = root.fork(static_cast<std::uint64_t>(i));

    const Eigen::Vector3d axis = rng.unit_vector();
    const double angle = rng.uniform(-0.25, 0.25);
    const Eigen::Matrix3d r = Eigen::AngleAxisd(angle, axis).toRotationMatrix();
    const Eigen::Vector3d t = rng.unit_vector() * rng.uniform(0.0, 2.0);

    const Eigen::Vector3d n_axis = rng.unit_vector();
    const double n_angle = rng.uniform(-0.3, 0.3);
    const Eigen::Vector3d n =
        Eigen::AngleAxisd(n_angle, n_axis) * Eigen::Vector3d(0.0, 1.0, 0.0);
    const double d_c = rng.uniform(1.0, 3.0);

    const PixelPoint p(rng.uniform(0.0, k_target.width - 1), rng.uniform(0.0, k_target.height - 1));
    const double z = rng.uniform(2.0, 80.0);

    const RigidMotion motion(r, t);
    const PlaneModel plane(n / n.norm(), d_c);

    const Point3 x_target = z * k_target.ray(p);
    const Point3 x_source = motion.to_source(x_target);
    if (!(x_source.z() > 1e-6)) continue;

    // Exact structure variable: h is the camera-invariant distance to the
    // plane, evaluated in the source frame where the plane lives.
    const double h = plane.distance - plane.normal.dot(x_source);
    const double gamma = h / z;
    if (std::abs(plane.distance - gamma * t.z()) <= kParallaxDenominatorEpsilon) continue;

    PixelPoint oracle;
    try {
      oracle = full_reprojection_oracle(p, z, motion, plane, k_target, k_source);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const Eigen::Vector2d predicted = p + residual_parallax(p, gamma, t, plane.distance, k_target);

    max_err = std::max(max_err, (predicted - oracle).norm());
    ++valid;
  }

  result.max_error_px = max_err;
  result.valid = valid;
  return result;
}

}  // namespace ppx
