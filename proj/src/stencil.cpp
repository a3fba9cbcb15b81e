#include "mvgd/stencil.hpp"

#include "mvgd/point_cloud.hpp"

#include <cmath>

namespace mvgd {

double virtual_h(const Eigen::MatrixXd& tangent_coords, int m) {
  if (tangent_coords.rows() < 2) throw Error("virtual_h: need at least two samples");
  double h = std::numeric_limits<double>::infinity();
  for (int c = 0; c < m; ++c) {
    const double range = tangent_coords.col(c).maxCoeff() - tangent_coords.col(c).minCoeff();
    h = std::min(h, range / 4.0);
  }
  if (!(h > 0.0)) throw Error("virtual_h: degenerate neighborhood (zero extent)");
  return h;
}

namespace {

Eigen::VectorXd center_indicator(Eigen::Index n) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
  e[0] = 1.0;
  return e;
}

// row weights of the fitted polynomial evaluated at a 1D grid node
Eigen::VectorXd eval_row_1d(const FunctionFitOperator& op, double x) {
  return op.W.row(0) + x * op.W.row(1) + x * x * op.W.row(2);
}

Eigen::VectorXd eval_row_2d(const FunctionFitOperator& op, double x, double y) {
  return op.W.row(0) + x * op.W.row(1) + y * op.W.row(2) + x * x * op.W.row(3) +
         x * y * op.W.row(4) + y * y * op.W.row(5);
}

}  // namespace

Derivatives1D mvgd_derivatives_1d(const FunctionFitOperator& op, double h) {
  if (op.m != 1) throw Error("mvgd_derivatives_1d: operator is not one dimensional");
  if (!(h > 0.0)) throw Error("mvgd_derivatives_1d: h must be positive");
  Derivatives1D d;
  const Eigen::VectorXd e = center_indicator(op.W.cols());
  // (u(h) - u(-h)) / 2h collapses to the linear coefficient for quadratics
  d.dx = op.W.row(1);
  d.dxx = 2.0 * op.W.row(2).transpose() + (2.0 / (h * h)) * (op.W.row(0).transpose() - e);
  return d;
}

Eigen::VectorXd one_sided_1d(const FunctionFitOperator& op, double h, Direction dir) {
  if (op.m != 1) throw Error("one_sided_1d: operator is not one dimensional");
  if (!(h > 0.0)) throw Error("one_sided_1d: h must be positive");
  const Eigen::VectorXd e = center_indicator(op.W.cols());
  if (dir == Direction::Forward) return (eval_row_1d(op, h) - e) / h;
  return (e - eval_row_1d(op, -h)) / h;
}

Eigen::VectorXd mvgd_row_1d(const SurfaceFit& fit, const FunctionFitOperator& op, double h,
                            StencilForm form) {
  if (fit.m != 1 || op.m != 1) throw Error("mvgd_row_1d: inputs are not one dimensional");
  if (form == StencilForm::NonDivergence) {
    const LBCoefficients lb = lb_coefficients(fit);
    const Derivatives1D d = mvgd_derivatives_1d(op, h);
    return lb.c[0] * d.dx + lb.c[1] * d.dxx;
  }
  // flux form with graph slopes at the half grid nodes
  const double sp = std::sqrt(1.0 + std::pow(eval_surface_slope(fit, h / 2).x(), 2));
  const double sm = std::sqrt(1.0 + std::pow(eval_surface_slope(fit, -h / 2).x(), 2));
  const double s0 = std::sqrt(1.0 + std::pow(eval_surface_slope(fit, 0.0).x(), 2));
  const Eigen::VectorXd e = center_indicator(op.W.cols());
  Eigen::VectorXd row = eval_row_1d(op, h) / sp + eval_row_1d(op, -h) / sm;
  row -= (1.0 / sp + 1.0 / sm) * e;
  return row / (h * h * s0);
}

Eigen::VectorXd mvgd_row_2d(const SurfaceFit& fit, const FunctionFitOperator& op, double h) {
  if (fit.m != 2 || op.m != 2) throw Error("mvgd_row_2d: inputs are not two dimensional");
  if (!(h > 0.0)) throw Error("mvgd_row_2d: h must be positive");
  const LBCoefficients lb = lb_coefficients(fit);
  const Eigen::VectorXd e = center_indicator(op.W.cols());
  const Eigen::VectorXd second_corr = (2.0 / (h * h)) * (op.W.row(0).transpose() - e);
  const Eigen::VectorXd dxx = 2.0 * op.W.row(3).transpose() + second_corr;
  const Eigen::VectorXd dyy = 2.0 * op.W.row(5).transpose() + second_corr;
  // centered first differences and the four-corner cross difference collapse
  // to fit coefficients for quadratics
  const Eigen::VectorXd dx = op.W.row(1);
  const Eigen::VectorXd dy = op.W.row(2);
  const Eigen::VectorXd dxy = op.W.row(4);
  return lb.c[0] * dx + lb.c[1] * dy + lb.c[2] * dxx + lb.c[3] * dxy + lb.c[4] * dyy;
}

Eigen::VectorXd mls_row(const SurfaceFit& fit, const FunctionFitOperator& op) {
  const LBCoefficients lb = lb_coefficients(fit);
  if (fit.m == 1) return lb.c[0] * op.W.row(1).transpose() + 2.0 * lb.c[1] * op.W.row(2).transpose();
  return lb.c[0] * op.W.row(1).transpose() + lb.c[1] * op.W.row(2).transpose() +
         2.0 * lb.c[2] * op.W.row(3).transpose() + lb.c[3] * op.W.row(4).transpose() +
         2.0 * lb.c[4] * op.W.row(5).transpose();
}

int extrapolation_nodes(const Eigen::MatrixXd& tangent_coords, int m, double h) {
  Eigen::Vector2d lo{0, 0}, hi{0, 0};
  for (int c = 0; c < m; ++c) {
    lo[c] = tangent_coords.col(c).minCoeff();
    hi[c] = tangent_coords.col(c).maxCoeff();
  }
  const auto outside = [&](double x, double y) {
    if (x < lo[0] || x > hi[0]) return true;
    return m == 2 && (y < lo[1] || y > hi[1]);
  };
  int count = 0;
  if (m == 1) {
    count += outside(h, 0) ? 1 : 0;
    count += outside(-h, 0) ? 1 : 0;
    return count;
  }
  const double nodes[8][2] = {{h, 0},  {-h, 0}, {0, h},  {0, -h},
                              {h, h},  {h, -h}, {-h, h}, {-h, -h}};
  for (const auto& node : nodes) count += outside(node[0], node[1]) ? 1 : 0;
  return count;
}

}  // namespace mvgd
