#include "planepx/homography.hpp"

#include "planepx/rng.hpp"
#include "planepx/sampling.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace ppx {

namespace {

constexpr double kInfinityGuard = 1e-12;

// Non-throwing perspective transfer used in scoring loops.
std::optional<PixelPoint> transfer(const Eigen::Matrix3d& h, const PixelPoint& p) {
  const Eigen::Vector3d q = h * Eigen::Vector3d(p.x(), p.y(), 1.0);
  if (std::abs(q.z()) < kInfinityGuard) return std::nullopt;
  return PixelPoint(q.x() / q.z(), q.y() / q.z());
}

struct Similarity {
  Eigen::Matrix3d t;
  Eigen::Matrix3d t_inv;
};

// Hartley isotropic normalization: centroid to origin, RMS radius sqrt(2).
Similarity hartley_normalization(const CorrespondenceSet& matches, bool use_source) {
  Eigen::Vector2d centroid = Eigen::Vector2d::Zero();
  for (const auto& m : matches) centroid += use_source ? m.source : m.target;
  centroid /= static_cast<double>(matches.size());
  double sum_sq = 0.0;
  for (const auto& m : matches) sum_sq += ((use_source ? m.source : m.target) - centroid).squaredNorm();
  const double rms = std::sqrt(sum_sq / static_cast<double>(matches.size()));
  if (rms < 1e-12)
    throw std::invalid_argument("estimate_homography_dlt: degenerate configuration (coincident points)");
  const double s = std::sqrt(2.0) / rms;
  Similarity sim;
  sim.t << s, 0.0, -s * centroid.x(), 0.0, s, -s * centroid.y(), 0.0, 0.0, 1.0;
  sim.t_inv << 1.0 / s, 0.0, centroid.x(), 0.0, 1.0 / s, centroid.y(), 0.0, 0.0, 1.0;
  return sim;
}

}  // namespace

Homography::Homography(const Eigen::Matrix3d& m) {
  if (!m.allFinite()) throw std::invalid_argument("Homography: non-finite matrix");
  if (std::abs(m(2, 2)) > 1e-12) {
    h_ = m / m(2, 2);
  } else {
    const double fro = m.norm();
    if (fro < 1e-300) throw std::invalid_argument("Homography: zero matrix");
    h_ = m / fro;
  }
  if (std::abs(h_.determinant()) <= 1e-12)
    throw std::invalid_argument("Homography: singular matrix (degenerate configuration)");
}

Homography Homography::inverse() const { return Homography(h_.inverse()); }

Homography compose_plane_homography(const RigidMotion& motion, const PlaneModel& plane,
                                    const CameraIntrinsics& k_target,
                                    const CameraIntrinsics& k_source) {
  const Eigen::Matrix3d m =
      k_target.matrix() *
      (motion.rotation + motion.translation * plane.normal.transpose() / plane.distance) *
      k_source.inverse_matrix();
  return Homography(m);
}

PixelPoint apply_homography(const Homography& h, const PixelPoint& p) {
  if (!p.allFinite()) throw std::invalid_argument("apply_homography: non-finite point");
  const auto q = transfer(h.matrix(), p);
  if (!q) throw std::invalid_argument("apply_homography: point maps to infinity");
  return *q;
}

Homography estimate_homography_dlt(const CorrespondenceSet& matches) {
  const int n = static_cast<int>(matches.size());
  if (n < 4)
    throw std::invalid_argument("estimate_homography_dlt: at least 4 correspondences required");
  for (const auto& m : matches)
    if (!m.source.allFinite() || !m.target.allFinite())
      throw std::invalid_argument("estimate_homography_dlt: non-finite correspondence");

  const Similarity ts = hartley_normalization(matches, true);
  const Similarity tt = hartley_normalization(matches, false);

  Eigen::MatrixXd a(2 * n, 9);
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector3d p = ts.t * Eigen::Vector3d(matches[i].source.x(), matches[i].source.y(), 1.0);
    const Eigen::Vector3d q = tt.t * Eigen::Vector3d(matches[i].target.x(), matches[i].target.y(), 1.0);
    const double x = p.x(), y = p.y();
    const double xp = q.x(), yp = q.y();
    a.row(2 * i) << 0.0, 0.0, 0.0, -x, -y, -1.0, yp * x, yp * y, yp;
    a.row(2 * i + 1) << x, y, 1.0, 0.0, 0.0, 0.0, -xp * x, -xp * y, -xp;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  // A proper 8-rank system has exactly a one-dimensional null space; a small
  // 8th singular value means the solution is not unique (collinear or
  // repeated points).
  if (sv(7) < 1e-10 * sv(0))
    throw std::invalid_argument("estimate_homography_dlt: rank-deficient system (degenerate configuration)");

  const Eigen::VectorXd hvec = svd.matrixV().col(8);
  Eigen::Matrix3d hn;
  hn << hvec(0), hvec(1), hvec(2), hvec(3), hvec(4), hvec(5), hvec(6), hvec(7), hvec(8);
  return Homography(tt.t_inv * hn * ts.t);
}

double symmetric_transfer_error(const Homography& h, const Homography& h_inv,
                                const Correspondence& m) {
  const auto fwd = transfer(h.matrix(), m.source);
  const auto bwd = transfer(h_inv.matrix(), m.target);
  if (!fwd || !bwd) return std::numeric_limits<double>::infinity();
  return std::sqrt((*fwd - m.target).squaredNorm() + (*bwd - m.source).squaredNorm());
}

RansacResult estimate_homography_ransac(const CorrespondenceSet& matches,
                                        const RansacConfig& config) {
  const int n = static_cast<int>(matches.size());
  if (n < 4)
    throw std::invalid_argument("estimate_homography_ransac: at least 4 correspondences required");

  const Rng root(config.seed);

  std::optional<Homography> best_h;
  std::vector<std::uint8_t> best_inliers;
  int best_count = 0;
  double best_error = std::numeric_limits<double>::infinity();
  int required_iterations = config.max_iterations;

  std::vector<std::uint8_t> inliers(static_cast<size_t>(n));
  for (int iter = 0; iter < required_iterations; ++iter) {
    Rng rng = root.fork(static_cast<std::uint64_t>(iter));

    int sample[4];
    for (int k = 0; k < 4; ++k) {
      for (;;) {
        const int idx = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        bool seen = false;
        for (int j = 0; j < k; ++j) seen |= (sample[j] == idx);
        if (!seen) {
          sample[k] = idx;
          break;
        }
      }
    }

    CorrespondenceSet minimal = {matches[sample[0]], matches[sample[1]], matches[sample[2]],
                                 matches[sample[3]]};
    Homography h = Homography::identity();
    try {
      h = estimate_homography_dlt(minimal);
    } catch (const std::invalid_argument&) {
      continue;  // degenerate sample
    }
    const Homography h_inv = h.inverse();

    int count = 0;
    double error_sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double e = symmetric_transfer_error(h, h_inv, matches[i]);
      const bool in = e <= config.threshold_px;
      inliers[static_cast<size_t>(i)] = in ? 1 : 0;
      if (in) {
        ++count;
        error_sum += e;
      }
    }

    if (count > best_count || (count == best_count && error_sum < best_error)) {
      best_count = count;
      best_error = error_sum;
      best_h = h;
      best_inliers = inliers;

      // Adaptive termination at the configured confidence.
      const double w = static_cast<double>(count) / n;
      const double p_good = std::pow(w, 4);
      if (p_good >= 1.0) {
        required_iterations = iter + 1;
      } else if (p_good > 0.0) {
        const double need = std::log(1.0 - config.confidence) / std::log(1.0 - p_good);
        required_iterations =
            std::min(config.max_iterations, std::max(iter + 1, static_cast<int>(std::ceil(need))));
      }
    }
  }

  if (!best_h || best_count < 4)
    throw std::runtime_error("estimate_homography_ransac: no hypothesis with at least 4 inliers");

  // Final least-squares polish on the winning consensus set.
  CorrespondenceSet consensus;
  consensus.reserve(static_cast<size_t>(best_count));
  for (int i = 0; i < n; ++i)
    if (best_inliers[static_cast<size_t>(i)]) consensus.push_back(matches[i]);
  Homography refined = *best_h;
  try {
    refined = estimate_homography_dlt(consensus);
  } catch (const std::invalid_argument&) {
    // keep the raw hypothesis if the consensus set is degenerate
  }

  return {refined, std::move(best_inliers), best_count};
}

MaskedImage warp_image_homography(const ImageBuffer& image, const Homography& h) {
  const Eigen::Matrix3d h_inv = h.inverse().matrix();
  MaskedImage out{ImageBuffer(image.width, image.height, image.channels, 0.0f),
                  Mask(image.width, image.height, 0)};
#pragma omp parallel for schedule(static)
  for (int y = 0; y < image.height; ++y) {
    std::vector<float> px(static_cast<size_t>(image.channels));
    for (int x = 0; x < image.width; ++x) {
      const auto src = transfer(h_inv, {static_cast<double>(x), static_cast<double>(y)});
      if (!src) continue;
      if (!sample_bilinear(image, src->x(), src->y(), px.data())) continue;
      for (int c = 0; c < image.channels; ++c) out.image.at(x, y, c) = px[c];
      out.valid.at(x, y) = 1;
    }
  }
  return out;
}

}  // namespace ppx
