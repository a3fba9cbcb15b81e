#include "mvgd/kdtree.hpp"

#include "mvgd/point_cloud.hpp"

#include <algorithm>
#include <numeric>

namespace mvgd {

namespace {

constexpr std::size_t kLeafSize = 16;

inline double dist2(const double* a, const double* b, int d) {
  double s = 0.0;
  for (int c = 0; c < d; ++c) {
    const double t = a[c] - b[c];
    s += t * t;
  }
  return s;
}

// ordering used everywhere: (distance^2, id) lexicographic
inline bool closer(const std::pair<double, std::size_t>& a,
                   const std::pair<double, std::size_t>& b) {
  return a.first != b.first ? a.first < b.first : a.second < b.second;
}

}  // namespace

KdTree::KdTree(const Eigen::MatrixXd& points) : pts_(points), dim_(static_cast<int>(points.cols())) {
  ids_.resize(static_cast<std::size_t>(points.rows()));
  std::iota(ids_.begin(), ids_.end(), std::size_t{0});
  if (!ids_.empty()) root_ = build(0, ids_.size());
}

int KdTree::build(std::size_t begin, std::size_t end) {
  Node node;
  node.begin = begin;
  node.end = end;
  if (end - begin <= kLeafSize) {
    nodes_.push_back(node);
    return static_cast<int>(nodes_.size() - 1);
  }
  // split along the widest axis at the median
  Eigen::VectorXd lo = Eigen::VectorXd::Constant(dim_, std::numeric_limits<double>::infinity());
  Eigen::VectorXd hi = -lo;
  for (std::size_t s = begin; s < end; ++s) {
    for (int c = 0; c < dim_; ++c) {
      const double v = pts_(static_cast<Eigen::Index>(ids_[s]), c);
      lo[c] = std::min(lo[c], v);
      hi[c] = std::max(hi[c], v);
    }
  }
  int axis = 0;
  (hi - lo).maxCoeff(&axis);
  const std::size_t mid = begin + (end - begin) / 2;
  std::nth_element(ids_.begin() + static_cast<std::ptrdiff_t>(begin),
                   ids_.begin() + static_cast<std::ptrdiff_t>(mid),
                   ids_.begin() + static_cast<std::ptrdiff_t>(end),
                   [&](std::size_t a, std::size_t b) {
                     return pts_(static_cast<Eigen::Index>(a), axis) <
                            pts_(static_cast<Eigen::Index>(b), axis);
                   });
  node.axis = axis;
  node.split = pts_(static_cast<Eigen::Index>(ids_[mid]), axis);
  const int self = static_cast<int>(nodes_.size());
  nodes_.push_back(node);
  const int left = build(begin, mid);
  const int right = build(mid, end);
  nodes_[static_cast<std::size_t>(self)].left = left;
  nodes_[static_cast<std::size_t>(self)].right = right;
  return self;
}

void KdTree::search(int ni, const double* q, int k,
                    std::vector<std::pair<double, std::size_t>>& heap,
                    std::ptrdiff_t exclude) const {
  const Node& node = nodes_[static_cast<std::size_t>(ni)];
  if (node.axis < 0) {
    for (std::size_t s = node.begin; s < node.end; ++s) {
      const std::size_t id = ids_[s];
      if (static_cast<std::ptrdiff_t>(id) == exclude) continue;
      const std::pair<double, std::size_t> cand{
          dist2(pts_.row(static_cast<Eigen::Index>(id)).data(), q, dim_), id};
      if (heap.size() < static_cast<std::size_t>(k)) {
        heap.push_back(cand);
        std::push_heap(heap.begin(), heap.end(), closer);
      } else if (closer(cand, heap.front())) {
        std::pop_heap(heap.begin(), heap.end(), closer);
        heap.back() = cand;
        std::push_heap(heap.begin(), heap.end(), closer);
      }
    }
    return;
  }
  const double delta = q[node.axis] - node.split;
  const int first = delta < 0 ? node.left : node.right;
  const int second = delta < 0 ? node.right : node.left;
  search(first, q, k, heap, exclude);
  // the far side can still hold an equal-distance lower id, so prune only on
  // strict excess
  if (heap.size() < static_cast<std::size_t>(k) || delta * delta <= heap.front().first)
    search(second, q, k, heap, exclude);
}

std::vector<std::size_t> KdTree::knn_point(const Eigen::RowVectorXd& query, int k,
                                           std::ptrdiff_t exclude) const {
  const std::size_t available = ids_.size() - (exclude >= 0 ? 1 : 0);
  if (k < 1 || static_cast<std::size_t>(k) > available)
    throw Error("knn: k must be between 1 and the number of available points");
  std::vector<std::pair<double, std::size_t>> heap;
  heap.reserve(static_cast<std::size_t>(k));
  search(root_, query.data(), k, heap, exclude);
  std::sort(heap.begin(), heap.end(), closer);
  std::vector<std::size_t> out(heap.size());
  for (std::size_t s = 0; s < heap.size(); ++s) out[s] = heap[s].second;
  return out;
}

std::vector<std::size_t> KdTree::knn(std::size_t i, int k) const {
  return knn_point(pts_.row(static_cast<Eigen::Index>(i)), k, static_cast<std::ptrdiff_t>(i));
}

std::size_t KdTree::nearest(const Eigen::RowVectorXd& query, std::ptrdiff_t exclude) const {
  return knn_point(query, 1, exclude)[0];
}

std::vector<std::size_t> brute_force_knn(const Eigen::MatrixXd& points,
                                         const Eigen::RowVectorXd& query, int k,
                                         std::ptrdiff_t exclude) {
  const int d = static_cast<int>(points.cols());
  std::vector<std::pair<double, std::size_t>> all;
  all.reserve(static_cast<std::size_t>(points.rows()));
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    if (static_cast<std::ptrdiff_t>(i) == exclude) continue;
    all.emplace_back(dist2(points.row(i).data(), query.data(), d), static_cast<std::size_t>(i));
  }
  if (k < 1 || static_cast<std::size_t>(k) > all.size())
    throw Error("knn: k must be between 1 and the number of available points");
  std::partial_sort(all.begin(), all.begin() + k, all.end(), closer);
  std::vector<std::size_t> out(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) out[static_cast<std::size_t>(s)] = all[static_cast<std::size_t>(s)].second;
  return out;
}

}  // namespace mvgd
