#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace idec::linear {

struct CgResult {
    int iterations = 0;
    double relative_residual = 0.0;
    bool converged = false;
    bool breakdown = false;
};

/// Conjugate gradients on a symmetric matrix, starting from the contents of x.
///
/// Stops once ||b - A x|| <= tolerance * ||b||. With `jacobi` the diagonal is
/// used as preconditioner, which requires it to be positive. A step with
/// p^T A p <= 0 (or vanishingly small when `jacobi` is off) is reported as a
/// breakdown and leaves x at the last iterate.
CgResult conjugate_gradient(const Eigen::SparseMatrix<double>& A, const Eigen::VectorXd& b,
                            Eigen::VectorXd& x, double tolerance, int max_iterations, bool jacobi = true);

} // namespace idec::linear
