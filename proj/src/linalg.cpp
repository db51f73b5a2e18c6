#include "qelm/linalg.hpp"

#include <lapacke.h>

#include <algorithm>
#include <stdexcept>

namespace qelm::linalg {

Eigen::VectorXd singular_values(const Eigen::MatrixXd& x) {
    const lapack_int m = static_cast<lapack_int>(x.rows());
    const lapack_int n = static_cast<lapack_int>(x.cols());
    if (m == 0 || n == 0) throw std::invalid_argument("singular_values: empty matrix");

    Eigen::MatrixXd a = x;  // dgesdd destroys its input
    Eigen::VectorXd s(std::min(m, n));
    const lapack_int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', m, n, a.data(), m,
                                           s.data(), nullptr, 1, nullptr, 1);
    if (info != 0) throw std::runtime_error("singular_values: dgesdd failed, info=" +
                                            std::to_string(info));
    return s;
}

Eigen::MatrixXd solve_spd(Eigen::MatrixXd a, Eigen::MatrixXd b) {
    const lapack_int n = static_cast<lapack_int>(a.rows());
    if (a.cols() != n || b.rows() != n)
        throw std::invalid_argument("solve_spd: dimension mismatch");
    const lapack_int nrhs = static_cast<lapack_int>(b.cols());
    const lapack_int info = LAPACKE_dposv(LAPACK_COL_MAJOR, 'L', n, nrhs, a.data(), n,
                                          b.data(), n);
    if (info != 0)
        throw std::runtime_error("solve_spd: dposv failed (matrix not positive definite?), info=" +
                                 std::to_string(info));
    return b;
}

}  // namespace qelm::linalg
