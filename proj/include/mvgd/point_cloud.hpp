#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvgd {

/// Error type thrown by every module for contract violations
/// (bad input data, degenerate geometry, parse failures).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An unordered sample of a manifold embedded in 2- or 3-space.
/// Points are stored row-wise; each point may carry a boundary tag.
/// Immutable after construction.
class PointCloud {
public:
  /// `points` is n x d with d in {2,3}; `manifold_dim` in {1,2}, below d.
  /// `boundary` is empty (all interior) or one 0/1 tag per point.
  /// Exact duplicate coordinates are rejected.
  PointCloud(Eigen::MatrixXd points, int manifold_dim,
             std::vector<std::uint8_t> boundary = {});

  int dim() const { return static_cast<int>(pts_.cols()); }
  int manifold_dim() const { return m_; }
  std::size_t size() const { return static_cast<std::size_t>(pts_.rows()); }

  const Eigen::MatrixXd& points() const { return pts_; }
  Eigen::RowVectorXd point(std::size_t i) const { return pts_.row(static_cast<Eigen::Index>(i)); }

  bool is_boundary(std::size_t i) const { return boundary_[i] != 0; }
  const std::vector<std::uint8_t>& boundary_tags() const { return boundary_; }
  std::size_t boundary_count() const { return n_boundary_; }
  bool has_boundary() const { return n_boundary_ > 0; }

  std::vector<std::size_t> interior_ids() const;
  std::vector<std::size_t> boundary_ids() const;

private:
  Eigen::MatrixXd pts_;
  int m_ = 0;
  std::vector<std::uint8_t> boundary_;
  std::size_t n_boundary_ = 0;
};

}  // namespace mvgd
