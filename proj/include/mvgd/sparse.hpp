#pragma once

#include "mvgd/point_cloud.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <cstddef>
#include <span>
#include <vector>

namespace mvgd {

/// One sparse row of a discrete operator: the center id followed by neighbor
/// ids, with one weight per id. Ids must be unique; a consistent row sums to
/// zero.
struct StencilRow {
  std::size_t center = 0;
  std::vector<std::size_t> ids;  // center first
  Eigen::VectorXd coeffs;        // same order
  double h = 0.0;                // virtual grid spacing used
};

/// Compressed sparse row matrix (possibly rectangular while ghost columns are
/// still present). Columns are sorted and unique within each row.
class SparseOperator {
public:
  SparseOperator() = default;

  /// Builds from triplets; duplicate (row, col) entries are summed.
  static SparseOperator from_triplets(std::size_t rows, std::size_t cols,
                                      std::vector<Eigen::Triplet<double>> triplets);

  std::size_t rows() const { return n_rows_; }
  std::size_t cols() const { return n_cols_; }
  std::size_t nnz() const { return values_.size(); }

  const std::vector<std::size_t>& indptr() const { return indptr_; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  const std::vector<double>& values() const { return values_; }

  std::span<const std::size_t> row_indices(std::size_t r) const {
    return {indices_.data() + indptr_[r], indptr_[r + 1] - indptr_[r]};
  }
  std::span<const double> row_values(std::size_t r) const {
    return {values_.data() + indptr_[r], indptr_[r + 1] - indptr_[r]};
  }

  double diagonal(std::size_t r) const;  // 0 if absent

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  Eigen::SparseMatrix<double> to_eigen() const;
  Eigen::MatrixXd to_dense() const;

private:
  std::size_t n_rows_ = 0, n_cols_ = 0;
  std::vector<std::size_t> indptr_{0};
  std::vector<std::size_t> indices_;
  std::vector<double> values_;
};

/// Assembles the negative Laplace-Beltrami operator from one stencil row per
/// interior point (rows carry the +lap sign and are negated here, so closed
/// manifolds yield positive-semidefinite-like spectra). Boundary points
/// receive identity rows.
SparseOperator assemble(const PointCloud& cloud, const std::vector<StencilRow>& rows);

/// Rectangular variant used before ghost elimination: `n_rows` equations over
/// `n_cols` value slots; `row_of_center` maps a stencil center id to its row.
SparseOperator assemble_rect(std::size_t n_rows, std::size_t n_cols,
                             const std::vector<StencilRow>& rows,
                             const std::vector<std::size_t>& row_of_center);

struct RowDiagnostics {
  double row_sum = 0.0;
  int diag_sign = 0;
  double dominance = 0.0;  // sum|off-diagonal| / |diagonal|
  bool m_row = false;      // positive diagonal, non-positive off-diagonals, weak dominance
};

struct DiagnosticsReport {
  std::vector<RowDiagnostics> rows;
  double m_fraction = 0.0;
};

RowDiagnostics diagnose_row(std::span<const std::size_t> ids, std::span<const double> values,
                            std::size_t diag_id);
DiagnosticsReport row_diagnostics(const SparseOperator& op);

}  // namespace mvgd
