#pragma once

#include <Eigen/Dense>

namespace qelm::linalg {

/// Singular values of a real matrix, non-increasing. Backed by LAPACK dgesdd.
Eigen::VectorXd singular_values(const Eigen::MatrixXd& x);

/// Solves A X = B for symmetric positive-definite A (Cholesky, dposv).
Eigen::MatrixXd solve_spd(Eigen::MatrixXd a, Eigen::MatrixXd b);

}  // namespace qelm::linalg
