#include "pqga/random.hpp"

#include <cmath>

#include <Eigen/Core>
#include <Eigen/QR>

namespace pqga {

ComplexMatrix random_unitary(int dim, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd z(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            z(r, c) = cxd{gauss(rng), gauss(rng)};
        }
    }
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < dim; ++c) {
        const cxd d = r(c, c);
        const double mag = std::abs(d);
        const cxd phase = mag > 0.0 ? d / mag : cxd{1.0, 0.0};
        q.col(c) *= phase;
    }
    ComplexMatrix out(dim);
    for (int row = 0; row < dim; ++row) {
        for (int col = 0; col < dim; ++col) {
            out.at(row, col) = q(row, col);
        }
    }
    return out;
}

std::vector<cxd> random_unit_vector(int dim, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cxd> v(dim);
    double sq = 0.0;
    do {
        sq = 0.0;
        for (cxd& z : v) {
            z = cxd{gauss(rng), gauss(rng)};
            sq += std::norm(z);
        }
    } while (sq == 0.0);
    const double inv = 1.0 / std::sqrt(sq);
    for (cxd& z : v) {
        z *= inv;
    }
    return v;
}

} // namespace pqga
