#include "pqga/matrix.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

namespace pqga {

namespace {

constexpr double kUnitaryCheckEps = 1e-10;

Eigen::MatrixXcd to_eigen(const ComplexMatrix& a) {
    const int n = a.dim();
    Eigen::MatrixXcd m(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            m(r, c) = a.at(r, c);
        }
    }
    return m;
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
    const int n = static_cast<int>(m.rows());
    ComplexMatrix a(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            a.at(r, c) = m(r, c);
        }
    }
    return a;
}

} // namespace

ComplexMatrix::ComplexMatrix(int dim)
    : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim, cxd{0.0, 0.0}) {
    if (dim < 1) {
        throw Error("ComplexMatrix: dimension must be >= 1");
    }
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<cxd> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim < 1) {
        throw Error("ComplexMatrix: dimension must be >= 1");
    }
    if (entries_.size() != static_cast<std::size_t>(dim) * dim) {
        throw DimensionMismatch("ComplexMatrix: entry count does not match dim*dim");
    }
    if (!all_finite()) {
        throw Error("ComplexMatrix: entries must be finite");
    }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        m.at(i, i) = cxd{1.0, 0.0};
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<cxd>> rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<cxd> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) {
            throw DimensionMismatch("ComplexMatrix::from_rows: matrix must be square");
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return ComplexMatrix(n, std::move(flat));
}

bool ComplexMatrix::all_finite() const {
    for (const cxd& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("mat_mul: dimensions differ");
    }
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
            const cxd ark = a.at(r, k);
            if (ark == cxd{0.0, 0.0}) {
                continue;
            }
            for (int c = 0; c < n; ++c) {
                out.at(r, c) += ark * b.at(k, c);
            }
        }
    }
    return out;
}

std::vector<cxd> mat_vec(const ComplexMatrix& a, const std::vector<cxd>& x) {
    const int n = a.dim();
    if (x.size() != static_cast<std::size_t>(n)) {
        throw DimensionMismatch("mat_vec: vector length does not match matrix dim");
    }
    std::vector<cxd> out(n, cxd{0.0, 0.0});
    for (int r = 0; r < n; ++r) {
        cxd acc{0.0, 0.0};
        for (int c = 0; c < n; ++c) {
            acc += a.at(r, c) * x[c];
        }
        out[r] = acc;
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int na = a.dim();
    const int nb = b.dim();
    ComplexMatrix out(na * nb);
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < na; ++j) {
            const cxd aij = a.at(i, j);
            if (aij == cxd{0.0, 0.0}) {
                continue;
            }
            for (int k = 0; k < nb; ++k) {
                for (int l = 0; l < nb; ++l) {
                    out.at(i * nb + k, j * nb + l) = aij * b.at(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            out.at(c, r) = std::conj(a.at(r, c));
        }
    }
    return out;
}

cxd adjoint_trace(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("adjoint_trace: dimensions differ");
    }
    cxd acc{0.0, 0.0};
    const std::vector<cxd>& ea = a.entries();
    const std::vector<cxd>& eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        acc += std::conj(ea[i]) * eb[i];
    }
    return acc;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("max_abs_diff: dimensions differ");
    }
    double worst = 0.0;
    const std::vector<cxd>& ea = a.entries();
    const std::vector<cxd>& eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        worst = std::max(worst, std::abs(ea[i] - eb[i]));
    }
    return worst;
}

ComplexMatrix scaled(const ComplexMatrix& a, cxd factor) {
    ComplexMatrix out(a.dim());
    const std::vector<cxd>& ea = a.entries();
    for (int r = 0; r < a.dim(); ++r) {
        for (int c = 0; c < a.dim(); ++c) {
            out.at(r, c) = ea[static_cast<std::size_t>(r) * a.dim() + c] * factor;
        }
    }
    return out;
}

bool is_unitary(const ComplexMatrix& a, Tolerance tol) {
    const ComplexMatrix gram = mat_mul(dagger(a), a);
    return max_abs_diff(gram, ComplexMatrix::identity(a.dim())) <= tol.eps;
}

double phase_minimized_frobenius(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("phase_minimized_frobenius: dimensions differ");
    }
    const cxd t = adjoint_trace(a, b);
    // ||u - phi*v||_F^2 = 2N - 2 Re(phi * tr(u^dagger v)); minimized at
    // phi = conj(t)/|t|. Any phi is optimal when tr vanishes.
    cxd phi{1.0, 0.0};
    const double mag = std::abs(t);
    if (mag > 0.0) {
        phi = std::conj(t) / mag;
    }
    double sq = 0.0;
    const std::vector<cxd>& ea = a.entries();
    const std::vector<cxd>& eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        sq += std::norm(ea[i] - phi * eb[i]);
    }
    return std::sqrt(sq);
}

double phase_invariant_distance(const ComplexMatrix& u, const ComplexMatrix& v) {
    if (u.dim() != v.dim()) {
        throw DimensionMismatch("phase_invariant_distance: dimensions differ");
    }
    if (!is_unitary(u, Tolerance(kUnitaryCheckEps)) ||
        !is_unitary(v, Tolerance(kUnitaryCheckEps))) {
        throw NotUnitary("phase_invariant_distance: operands must be unitary");
    }
    return phase_minimized_frobenius(u, v);
}

ComplexMatrix unitary_root(const ComplexMatrix& u, int j) {
    if (j < 1) {
        throw Error("unitary_root: j must be >= 1");
    }
    if (!is_unitary(u, Tolerance(kUnitaryCheckEps))) {
        throw NotUnitary("unitary_root: input must be unitary");
    }
    if (j == 1) {
        return u;
    }
    // A unitary matrix is normal, so its Schur form is diagonal up to
    // roundoff and Q holds an orthonormal eigenbasis.
    const Eigen::ComplexSchur<Eigen::MatrixXcd> schur(to_eigen(u), true);
    const Eigen::MatrixXcd& q = schur.matrixU();
    const Eigen::MatrixXcd& t = schur.matrixT();
    const int n = u.dim();
    Eigen::VectorXcd roots(n);
    for (int i = 0; i < n; ++i) {
        const double theta = std::arg(t(i, i)); // in (-pi, pi]
        roots(i) = std::polar(1.0, theta / j);
    }
    const Eigen::MatrixXcd r = q * roots.asDiagonal() * q.adjoint();
    return from_eigen(r);
}

ComplexMatrix mat_pow(const ComplexMatrix& u, int power) {
    if (power < 0) {
        throw Error("mat_pow: power must be >= 0");
    }
    ComplexMatrix out = ComplexMatrix::identity(u.dim());
    for (int i = 0; i < power; ++i) {
        out = mat_mul(out, u);
    }
    return out;
}

} // namespace pqga
