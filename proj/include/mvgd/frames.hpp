#pragma once

#include "mvgd/point_cloud.hpp"

#include <Eigen/Core>

#include <span>
#include <vector>

namespace mvgd {

/// Orthonormal coordinate system at one point, from PCA over its neighbors.
/// Axis columns are sorted by descending covariance eigenvalue, so the last
/// column approximates the surface normal. The frame origin is the point
/// itself, not the neighbor barycenter.
struct LocalFrame {
  std::size_t center = 0;
  Eigen::VectorXd origin;              // ambient coordinates of the center
  Eigen::MatrixXd axes;                // d x d, columns = axes, normal last
  std::vector<std::size_t> neighbor_ids;
  Eigen::MatrixXd local_coords;        // (K+1) x d, row 0 = center = 0
};

/// Builds the PCA frame at point i from the given neighbors.
/// Throws on an (almost) degenerate neighborhood where the tangent/normal
/// split is ambiguous.
LocalFrame pca_frame(const PointCloud& cloud, std::size_t i,
                     std::span<const std::size_t> neighbor_ids);

// same construction over a raw coordinate matrix (used for ghost-extended sets)
LocalFrame pca_frame_points(const Eigen::MatrixXd& points, std::size_t i,
                            std::span<const std::size_t> neighbor_ids);

Eigen::VectorXd to_local(const LocalFrame& frame, const Eigen::VectorXd& ambient);
Eigen::VectorXd from_local(const LocalFrame& frame, const Eigen::VectorXd& local);

}  // namespace mvgd
