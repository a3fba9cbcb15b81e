#pragma once

#include "mvgd/localfit.hpp"
#include "mvgd/sparse.hpp"

#include <Eigen/Core>

namespace mvgd {

/// Virtual grid spacing: one fourth of the coordinate range of the local
/// samples, per tangent direction; the minimum over directions for m = 2.
/// Throws when a direction has zero extent.
double virtual_h(const Eigen::MatrixXd& tangent_coords, int m);

struct Derivatives1D {
  Eigen::VectorXd dx;   // weights of the centered first difference
  Eigen::VectorXd dxx;  // weights of the modified second difference
};

/// Centered differences of the local fit on the virtual grid, with the
/// fitted center value replaced by the data value in the second difference.
Derivatives1D mvgd_derivatives_1d(const FunctionFitOperator& op, double h);

enum class Direction { Forward, Backward };

/// Modified one-sided first difference (advection building block).
Eigen::VectorXd one_sided_1d(const FunctionFitOperator& op, double h, Direction dir);

enum class StencilForm { NonDivergence, Divergence };

/// Curve Laplace-Beltrami row: either c2*Dxx + c1*Dx, or the flux form built
/// from graph slopes at +-h/2.
Eigen::VectorXd mvgd_row_1d(const SurfaceFit& fit, const FunctionFitOperator& op, double h,
                            StencilForm form);

/// Surface Laplace-Beltrami row on the 3x3 virtual grid. The center value
/// replaces the fitted value only inside the pure second differences; the
/// first derivatives and the four-corner cross term never touch the center
/// grid node.
Eigen::VectorXd mvgd_row_2d(const SurfaceFit& fit, const FunctionFitOperator& op, double h);

/// Plain least-squares row (derivatives of the fit at the origin), kept as
/// the comparison method.
Eigen::VectorXd mls_row(const SurfaceFit& fit, const FunctionFitOperator& op);

/// Number of virtual grid nodes falling outside the bounding box of the
/// local samples (extrapolation of the fit).
int extrapolation_nodes(const Eigen::MatrixXd& tangent_coords, int m, double h);

}  // namespace mvgd
