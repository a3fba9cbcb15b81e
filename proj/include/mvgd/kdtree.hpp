#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <vector>

namespace mvgd {

/// Exact k-nearest-neighbor search over a fixed point set (d = 2 or 3).
/// Results are ordered by (distance, index), so exact distance ties are
/// broken toward the lower point id, matching the brute-force scan.
/// The tree holds a reference to the coordinate matrix; the caller keeps
/// it alive.
class KdTree {
public:
  explicit KdTree(const Eigen::MatrixXd& points);

  /// k nearest neighbors of point i, excluding i itself.
  std::vector<std::size_t> knn(std::size_t i, int k) const;

  /// k nearest stored points to an arbitrary query location.
  /// `exclude` skips one stored index (-1: none).
  std::vector<std::size_t> knn_point(const Eigen::RowVectorXd& query, int k,
                                     std::ptrdiff_t exclude = -1) const;

  std::size_t nearest(const Eigen::RowVectorXd& query, std::ptrdiff_t exclude = -1) const;

  std::size_t size() const { return ids_.size(); }

private:
  struct Node {
    int axis = -1;         // -1 marks a leaf
    double split = 0.0;
    std::size_t begin = 0, end = 0;  // leaf range into ids_
    int left = -1, right = -1;
  };

  int build(std::size_t begin, std::size_t end);
  void search(int node, const double* q, int k,
              std::vector<std::pair<double, std::size_t>>& heap,
              std::ptrdiff_t exclude) const;

  const Eigen::MatrixXd& pts_;
  int dim_;
  std::vector<std::size_t> ids_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

/// All-pairs reference scan with the same (distance, id) ordering.
std::vector<std::size_t> brute_force_knn(const Eigen::MatrixXd& points,
                                         const Eigen::RowVectorXd& query, int k,
                                         std::ptrdiff_t exclude = -1);

}  // namespace mvgd
