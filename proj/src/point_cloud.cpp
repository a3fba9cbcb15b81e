#include "mvgd/point_cloud.hpp"

#include <algorithm>
#include <numeric>

namespace mvgd {

PointCloud::PointCloud(Eigen::MatrixXd points, int manifold_dim,
                       std::vector<std::uint8_t> boundary)
    : pts_(std::move(points)), m_(manifold_dim), boundary_(std::move(boundary)) {
  const auto n = static_cast<std::size_t>(pts_.rows());
  const int d = static_cast<int>(pts_.cols());
  if (d != 2 && d != 3) throw Error("point cloud: ambient dimension must be 2 or 3");
  if (m_ != 1 && m_ != 2) throw Error("point cloud: manifold dimension must be 1 or 2");
  if (m_ >= d) throw Error("point cloud: manifold dimension must be below ambient dimension");
  if (n == 0) throw Error("point cloud: empty");
  if (!pts_.allFinite()) throw Error("point cloud: non-finite coordinate");

  if (boundary_.empty()) {
    boundary_.assign(n, 0);
  } else if (boundary_.size() != n) {
    throw Error("point cloud: boundary tag count does not match point count");
  }
  n_boundary_ = static_cast<std::size_t>(
      std::count_if(boundary_.begin(), boundary_.end(), [](std::uint8_t b) { return b != 0; }));

  // duplicate rejection via lexicographic sort of row indices
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    for (int c = 0; c < d; ++c) {
      const double va = pts_(static_cast<Eigen::Index>(a), c);
      const double vb = pts_(static_cast<Eigen::Index>(b), c);
      if (va != vb) return va < vb;
    }
    return false;
  });
  for (std::size_t s = 1; s < n; ++s) {
    if (pts_.row(static_cast<Eigen::Index>(order[s])) ==
        pts_.row(static_cast<Eigen::Index>(order[s - 1]))) {
      throw Error("point cloud: duplicate point at indices " + std::to_string(order[s - 1]) +
                  " and " + std::to_string(order[s]));
    }
  }
}

std::vector<std::size_t> PointCloud::interior_ids() const {
  std::vector<std::size_t> out;
  out.reserve(size() - n_boundary_);
  for (std::size_t i = 0; i < size(); ++i)
    if (boundary_[i] == 0) out.push_back(i);
  return out;
}

std::vector<std::size_t> PointCloud::boundary_ids() const {
  std::vector<std::size_t> out;
  out.reserve(n_boundary_);
  for (std::size_t i = 0; i < size(); ++i)
    if (boundary_[i] != 0) out.push_back(i);
  return out;
}

}  // namespace mvgd
