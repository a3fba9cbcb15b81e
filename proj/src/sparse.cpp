#include "mvgd/sparse.hpp"

#include <algorithm>
#include <unordered_set>

namespace mvgd {

SparseOperator SparseOperator::from_triplets(std::size_t rows, std::size_t cols,
                                             std::vector<Eigen::Triplet<double>> triplets) {
  std::sort(triplets.begin(), triplets.end(), [](const auto& a, const auto& b) {
    return a.row() != b.row() ? a.row() < b.row() : a.col() < b.col();
  });
  SparseOperator op;
  op.n_rows_ = rows;
  op.n_cols_ = cols;
  op.indptr_.assign(rows + 1, 0);
  op.indices_.reserve(triplets.size());
  op.values_.reserve(triplets.size());
  std::size_t t = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    while (t < triplets.size() && static_cast<std::size_t>(triplets[t].row()) == r) {
      const auto col = static_cast<std::size_t>(triplets[t].col());
      if (col >= cols) throw Error("sparse: column index out of range");
      if (!op.indices_.empty() && op.indptr_[r] < op.indices_.size() &&
          op.indices_.back() == col && op.indices_.size() > op.indptr_[r]) {
        op.values_.back() += triplets[t].value();
      } else {
        op.indices_.push_back(col);
        op.values_.push_back(triplets[t].value());
      }
      ++t;
    }
    op.indptr_[r + 1] = op.indices_.size();
  }
  if (t != triplets.size()) throw Error("sparse: row index out of range");
  return op;
}

double SparseOperator::diagonal(std::size_t r) const {
  const auto ids = row_indices(r);
  const auto it = std::lower_bound(ids.begin(), ids.end(), r);
  if (it == ids.end() || *it != r) return 0.0;
  return values_[indptr_[r] + static_cast<std::size_t>(it - ids.begin())];
}

Eigen::VectorXd SparseOperator::apply(const Eigen::VectorXd& x) const {
  if (static_cast<std::size_t>(x.size()) != n_cols_) throw Error("sparse: size mismatch in apply");
  Eigen::VectorXd y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n_rows_));
  for (std::size_t r = 0; r < n_rows_; ++r) {
    double s = 0.0;
    for (std::size_t k = indptr_[r]; k < indptr_[r + 1]; ++k)
      s += values_[k] * x[static_cast<Eigen::Index>(indices_[k])];
    y[static_cast<Eigen::Index>(r)] = s;
  }
  return y;
}

Eigen::SparseMatrix<double> SparseOperator::to_eigen() const {
  Eigen::SparseMatrix<double> A(static_cast<Eigen::Index>(n_rows_),
                                static_cast<Eigen::Index>(n_cols_));
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(nnz());
  for (std::size_t r = 0; r < n_rows_; ++r)
    for (std::size_t k = indptr_[r]; k < indptr_[r + 1]; ++k)
      trip.emplace_back(static_cast<int>(r), static_cast<int>(indices_[k]), values_[k]);
  A.setFromTriplets(trip.begin(), trip.end());
  return A;
}

Eigen::MatrixXd SparseOperator::to_dense() const {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n_rows_),
                                            static_cast<Eigen::Index>(n_cols_));
  for (std::size_t r = 0; r < n_rows_; ++r)
    for (std::size_t k = indptr_[r]; k < indptr_[r + 1]; ++k)
      A(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(indices_[k])) = values_[k];
  return A;
}

namespace {

void check_row(const StencilRow& row) {
  if (row.ids.empty() || static_cast<Eigen::Index>(row.ids.size()) != row.coeffs.size())
    throw Error("assemble: malformed stencil row");
  if (row.ids.front() != row.center) throw Error("assemble: row must start with its center");
  std::unordered_set<std::size_t> seen(row.ids.begin(), row.ids.end());
  if (seen.size() != row.ids.size())
    throw Error("assemble: duplicate ids in stencil row of point " + std::to_string(row.center));
}

}  // namespace

SparseOperator assemble(const PointCloud& cloud, const std::vector<StencilRow>& rows) {
  const std::size_t n = cloud.size();
  std::vector<char> has_row(n, 0);
  std::vector<Eigen::Triplet<double>> trip;
  for (const StencilRow& row : rows) {
    check_row(row);
    if (row.center >= n) throw Error("assemble: row center out of range");
    if (cloud.is_boundary(row.center))
      throw Error("assemble: stencil row given for boundary point " + std::to_string(row.center));
    if (has_row[row.center])
      throw Error("assemble: duplicate rows for point " + std::to_string(row.center));
    has_row[row.center] = 1;
    for (std::size_t k = 0; k < row.ids.size(); ++k)
      trip.emplace_back(static_cast<int>(row.center), static_cast<int>(row.ids[k]),
                        -row.coeffs[static_cast<Eigen::Index>(k)]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cloud.is_boundary(i)) {
      trip.emplace_back(static_cast<int>(i), static_cast<int>(i), 1.0);
    } else if (!has_row[i]) {
      throw Error("assemble: missing row for interior point " + std::to_string(i));
    }
  }
  return SparseOperator::from_triplets(n, n, std::move(trip));
}

SparseOperator assemble_rect(std::size_t n_rows, std::size_t n_cols,
                             const std::vector<StencilRow>& rows,
                             const std::vector<std::size_t>& row_of_center) {
  std::vector<Eigen::Triplet<double>> trip;
  std::vector<char> has_row(n_rows, 0);
  for (const StencilRow& row : rows) {
    check_row(row);
    const std::size_t r = row_of_center[row.center];
    if (has_row[r]) throw Error("assemble: duplicate rows for unknown " + std::to_string(r));
    has_row[r] = 1;
    for (std::size_t k = 0; k < row.ids.size(); ++k)
      trip.emplace_back(static_cast<int>(r), static_cast<int>(row.ids[k]),
                        -row.coeffs[static_cast<Eigen::Index>(k)]);
  }
  return SparseOperator::from_triplets(n_rows, n_cols, std::move(trip));
}

RowDiagnostics diagnose_row(std::span<const std::size_t> ids, std::span<const double> values,
                            std::size_t diag_id) {
  RowDiagnostics d;
  double diag = 0.0, off_abs = 0.0, max_abs = 0.0, max_positive_off = 0.0;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    max_abs = std::max(max_abs, std::abs(values[k]));
    d.row_sum += values[k];
    if (ids[k] == diag_id) {
      diag = values[k];
    } else {
      off_abs += std::abs(values[k]);
      max_positive_off = std::max(max_positive_off, values[k]);
    }
  }
  d.diag_sign = diag > 0 ? 1 : (diag < 0 ? -1 : 0);
  d.dominance = diag != 0.0 ? off_abs / std::abs(diag)
                            : (off_abs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  const double sign_tol = 1e-12 * max_abs;
  d.m_row = diag > 0.0 && max_positive_off <= sign_tol && off_abs <= std::abs(diag) * (1.0 + 1e-9);
  return d;
}

DiagnosticsReport row_diagnostics(const SparseOperator& op) {
  DiagnosticsReport rep;
  rep.rows.reserve(op.rows());
  std::size_t m_count = 0;
  for (std::size_t r = 0; r < op.rows(); ++r) {
    rep.rows.push_back(diagnose_row(op.row_indices(r), op.row_values(r), r));
    if (rep.rows.back().m_row) ++m_count;
  }
  rep.m_fraction = op.rows() ? static_cast<double>(m_count) / static_cast<double>(op.rows()) : 0.0;
  return rep;
}

}  // namespace mvgd
