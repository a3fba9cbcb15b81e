#pragma once

#include <Eigen/Core>

namespace mvgd {

/// Weighting of the local least-squares fits. Unit weights everywhere, or
/// weight 1 on the center sample and 1/K on each neighbor.
enum class WeightScheme { Unit, CenterHeavy };

/// Center-first weight vector for `count` samples (center + K neighbors).
Eigen::VectorXd fit_weights(int count, WeightScheme scheme);

/// Quadratic graph fit of the manifold in a local frame.
/// m = 1: z(x)   = a[0] + a[1] x + a[2] x^2
/// m = 2: z(x,y) = a[0] + a[1] x + a[2] y + a[3] x^2 + a[4] xy + a[5] y^2
struct SurfaceFit {
  int m = 1;
  Eigen::Matrix<double, 6, 1> a = Eigen::Matrix<double, 6, 1>::Zero();
  bool linear_fallback = false;  // quadratic terms dropped for conditioning
};

/// Linear operator W mapping stacked sample values (center first) to the
/// coefficients of the local weighted least-squares polynomial, so that
/// b = W u is exactly linear in the data. Rows follow the monomial order of
/// SurfaceFit.
struct FunctionFitOperator {
  int m = 1;
  Eigen::MatrixXd W;  // 3 x (K+1) for m=1, 6 x (K+1) for m=2
  bool linear_fallback = false;
};

/// Coefficients of the Laplace-Beltrami operator expanded in the local frame.
/// m = 1: lap u = c[0] u_x + c[1] u_xx
/// m = 2: lap u = c[0] u_x + c[1] u_y + c[2] u_xx + c[3] u_xy + c[4] u_yy
struct LBCoefficients {
  int m = 1;
  Eigen::Matrix<double, 5, 1> c = Eigen::Matrix<double, 5, 1>::Zero();
};

/// Weighted quadratic fit of the graph z(tangent) from local coordinates
/// (rows: center first; columns: m tangent coordinates then the normal one).
/// Falls back to a linear fit when the normal equations are close to rank
/// deficient (condition above 1e12).
SurfaceFit fit_surface(const Eigen::MatrixXd& local_coords, int m, const Eigen::VectorXd& weights);

/// The W operator for the same sample layout; `tangent_coords` is (K+1) x m,
/// center (zero) first.
FunctionFitOperator function_fit_operator(const Eigen::MatrixXd& tangent_coords, int m,
                                          const Eigen::VectorXd& weights);

/// Evaluates the expansion coefficients of the LB operator at the frame
/// origin from the graph derivatives of `fit`.
LBCoefficients lb_coefficients(const SurfaceFit& fit);

double eval_surface(const SurfaceFit& fit, double x, double y = 0.0);

/// Graph gradient (dz/dx, dz/dy) at a local position; the y slot is zero for
/// m = 1.
Eigen::Vector2d eval_surface_slope(const SurfaceFit& fit, double x, double y = 0.0);

/// Design matrix of monomials up to degree two at the given tangent
/// coordinates (shared by the fits and by tests).
Eigen::MatrixXd quadratic_design(const Eigen::MatrixXd& tangent_coords, int m);

}  // namespace mvgd
