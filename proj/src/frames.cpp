#include "mvgd/frames.hpp"

#include <Eigen/Eigenvalues>

namespace mvgd {

namespace {

// deterministic orientation: first component above noise level is positive
void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
  for (Eigen::Index c = 0; c < v.size(); ++c) {
    if (std::abs(v[c]) > 1e-12) {
      if (v[c] < 0) v = -v;
      return;
    }
  }
}

}  // namespace

LocalFrame pca_frame_points(const Eigen::MatrixXd& points, std::size_t i,
                            std::span<const std::size_t> neighbor_ids) {
  const int d = static_cast<int>(points.cols());
  const auto K = static_cast<Eigen::Index>(neighbor_ids.size());
  if (K < d) throw Error("pca_frame: need at least d neighbors");

  Eigen::MatrixXd nb(K, d);
  for (Eigen::Index r = 0; r < K; ++r)
    nb.row(r) = points.row(static_cast<Eigen::Index>(neighbor_ids[static_cast<std::size_t>(r)]));

  const Eigen::RowVectorXd barycenter = nb.colwise().mean();
  const Eigen::MatrixXd centered = nb.rowwise() - barycenter;
  const Eigen::MatrixXd cov = centered.transpose() * centered;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
  if (es.info() != Eigen::Success) throw Error("pca_frame: eigendecomposition failed");
  const Eigen::VectorXd evals = es.eigenvalues();  // ascending
  // tangent/normal split is ambiguous when the smallest two eigenvalues agree
  const double scale = std::max(evals[d - 1], 1e-300);
  if (evals[1] - evals[0] <= 1e-10 * scale)
    throw Error("pca_frame: degenerate neighborhood at point " + std::to_string(i));

  LocalFrame frame;
  frame.center = i;
  frame.origin = points.row(static_cast<Eigen::Index>(i)).transpose();
  frame.axes.resize(d, d);
  for (int c = 0; c < d; ++c) frame.axes.col(c) = es.eigenvectors().col(d - 1 - c);
  for (int c = 0; c < d; ++c) fix_sign(frame.axes.col(c));
  frame.neighbor_ids.assign(neighbor_ids.begin(), neighbor_ids.end());

  frame.local_coords.setZero(K + 1, d);
  for (Eigen::Index r = 0; r < K; ++r)
    frame.local_coords.row(r + 1) =
        (nb.row(r) - frame.origin.transpose()) * frame.axes;
  return frame;
}

LocalFrame pca_frame(const PointCloud& cloud, std::size_t i,
                     std::span<const std::size_t> neighbor_ids) {
  return pca_frame_points(cloud.points(), i, neighbor_ids);
}

Eigen::VectorXd to_local(const LocalFrame& frame, const Eigen::VectorXd& ambient) {
  if (ambient.size() != frame.origin.size())
    throw Error("to_local: ambient dimension mismatch");
  return frame.axes.transpose() * (ambient - frame.origin);
}

Eigen::VectorXd from_local(const LocalFrame& frame, const Eigen::VectorXd& local) {
  return frame.origin + frame.axes * local;
}

}  // namespace mvgd
