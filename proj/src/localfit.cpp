#include "mvgd/localfit.hpp"

#include "mvgd/point_cloud.hpp"

#include <Eigen/QR>

namespace mvgd {

namespace {

constexpr double kConditionLimit = 1e12;

int quad_terms(int m) { return m == 1 ? 3 : 6; }
int lin_terms(int m) { return m == 1 ? 2 : 3; }

Eigen::MatrixXd design_degree(const Eigen::MatrixXd& t, int m, bool quadratic) {
  const Eigen::Index n = t.rows();
  if (m == 1) {
    Eigen::MatrixXd A(n, quadratic ? 3 : 2);
    A.col(0).setOnes();
    A.col(1) = t.col(0);
    if (quadratic) A.col(2) = t.col(0).cwiseProduct(t.col(0));
    return A;
  }
  Eigen::MatrixXd A(n, quadratic ? 6 : 3);
  A.col(0).setOnes();
  A.col(1) = t.col(0);
  A.col(2) = t.col(1);
  if (quadratic) {
    A.col(3) = t.col(0).cwiseProduct(t.col(0));
    A.col(4) = t.col(0).cwiseProduct(t.col(1));
    A.col(5) = t.col(1).cwiseProduct(t.col(1));
  }
  return A;
}

// W = pseudoinverse(sqrt(L) A) sqrt(L) via rank-revealing QR; returns false
// when the quadratic system is too ill-conditioned and a retry at lower
// degree is needed.
bool solve_operator(const Eigen::MatrixXd& t, int m, const Eigen::VectorXd& w, bool quadratic,
                    Eigen::MatrixXd& W_out) {
  const Eigen::VectorXd sw = w.cwiseSqrt();
  const Eigen::MatrixXd A = sw.asDiagonal() * design_degree(t, m, quadratic);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  const Eigen::Index p = A.cols();
  if (qr.rank() < p) return false;
  const auto& R = qr.matrixR();
  const double rmax = std::abs(R(0, 0));
  const double rmin = std::abs(R(p - 1, p - 1));
  if (!(rmin > 0.0) || rmax / rmin > kConditionLimit) return false;
  W_out = qr.solve(Eigen::MatrixXd(sw.asDiagonal()));
  return true;
}

}  // namespace

Eigen::VectorXd fit_weights(int count, WeightScheme scheme) {
  if (count < 1) throw Error("fit_weights: empty sample");
  Eigen::VectorXd w = Eigen::VectorXd::Ones(count);
  if (scheme == WeightScheme::CenterHeavy && count > 1)
    w.tail(count - 1).setConstant(1.0 / static_cast<double>(count - 1));
  return w;
}

Eigen::MatrixXd quadratic_design(const Eigen::MatrixXd& tangent_coords, int m) {
  return design_degree(tangent_coords, m, true);
}

FunctionFitOperator function_fit_operator(const Eigen::MatrixXd& tangent_coords, int m,
                                          const Eigen::VectorXd& weights) {
  if (m != 1 && m != 2) throw Error("function_fit_operator: manifold dimension must be 1 or 2");
  if (tangent_coords.cols() < m) throw Error("function_fit_operator: tangent coordinate mismatch");
  const Eigen::Index n = tangent_coords.rows();
  if (weights.size() != n) throw Error("function_fit_operator: weight count mismatch");
  if (n < quad_terms(m)) throw Error("function_fit_operator: too few samples for a quadratic fit");
  const Eigen::MatrixXd t = tangent_coords.leftCols(m);

  FunctionFitOperator op;
  op.m = m;
  if (solve_operator(t, m, weights, true, op.W)) return op;

  // conditioning fallback: linear fit, quadratic rows zero
  Eigen::MatrixXd Wlin;
  if (!solve_operator(t, m, weights, false, Wlin))
    throw Error("function_fit_operator: rank-deficient neighborhood");
  op.W.setZero(quad_terms(m), n);
  op.W.topRows(lin_terms(m)) = Wlin;
  op.linear_fallback = true;
  return op;
}

SurfaceFit fit_surface(const Eigen::MatrixXd& local_coords, int m, const Eigen::VectorXd& weights) {
  if (local_coords.cols() != m + 1)
    throw Error("fit_surface: expected m tangent columns plus the normal column");
  const FunctionFitOperator op = function_fit_operator(local_coords.leftCols(m), m, weights);
  SurfaceFit fit;
  fit.m = m;
  fit.linear_fallback = op.linear_fallback;
  fit.a.head(quad_terms(m)) = op.W * local_coords.col(m);
  return fit;
}

LBCoefficients lb_coefficients(const SurfaceFit& fit) {
  LBCoefficients lb;
  lb.m = fit.m;
  if (fit.m == 1) {
    // graph metric on a curve: lap u = u_xx/(1+zx^2) - zx zxx u_x/(1+zx^2)^2
    const double zx = fit.a[1];
    const double zxx = 2.0 * fit.a[2];
    const double g = 1.0 + zx * zx;
    lb.c[0] = -zx * zxx / (g * g);
    lb.c[1] = 1.0 / g;
    return lb;
  }
  // Surface graph z(x,y): with p=z_x, q=z_y, r=z_xx, s=z_xy, t=z_yy and
  // g = 1+p^2+q^2, the metric is [1+p^2, pq; pq, 1+q^2], its inverse is
  // [1+q^2, -pq; -pq, 1+p^2]/g, and expanding
  //   lap u = g^{ab} u_ab + (1/sqrt g) d_a(sqrt g g^{ab}) u_b
  // at the origin gives
  //   A_xx = (1+q^2)/g, A_xy = -2pq/g, A_yy = (1+p^2)/g
  //   A_x  = (qs-pt)/g - [(1+q^2)(pr+qs) - pq(ps+qt)]/g^2
  //   A_y  = (ps-qr)/g - [(1+p^2)(qt+ps) - pq(qs+pr)]/g^2
  // (cross-checked against centered differences of the divergence form).
  const double p = fit.a[1];
  const double q = fit.a[2];
  const double r = 2.0 * fit.a[3];
  const double s = fit.a[4];
  const double t = 2.0 * fit.a[5];
  const double g = 1.0 + p * p + q * q;
  const double g2 = g * g;
  lb.c[0] = (q * s - p * t) / g -
            ((1.0 + q * q) * (p * r + q * s) - p * q * (p * s + q * t)) / g2;
  lb.c[1] = (p * s - q * r) / g -
            ((1.0 + p * p) * (q * t + p * s) - p * q * (q * s + p * r)) / g2;
  lb.c[2] = (1.0 + q * q) / g;
  lb.c[3] = -2.0 * p * q / g;
  lb.c[4] = (1.0 + p * p) / g;
  return lb;
}

double eval_surface(const SurfaceFit& fit, double x, double y) {
  if (fit.m == 1) return fit.a[0] + fit.a[1] * x + fit.a[2] * x * x;
  return fit.a[0] + fit.a[1] * x + fit.a[2] * y + fit.a[3] * x * x + fit.a[4] * x * y +
         fit.a[5] * y * y;
}

Eigen::Vector2d eval_surface_slope(const SurfaceFit& fit, double x, double y) {
  if (fit.m == 1) return {fit.a[1] + 2.0 * fit.a[2] * x, 0.0};
  return {fit.a[1] + 2.0 * fit.a[3] * x + fit.a[4] * y,
          fit.a[2] + 2.0 * fit.a[5] * y + fit.a[4] * x};
}

}  // namespace mvgd
