#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "pqga/errors.hpp"

namespace pqga {

using cxd = std::complex<double>;

// Positive comparison threshold for approximate checks.
struct Tolerance {
    double eps;

    explicit Tolerance(double e) : eps(e) {
        if (!(e > 0.0)) {
            throw Error("Tolerance: eps must be > 0");
        }
    }
};

// Dense square complex matrix, row-major storage.
class ComplexMatrix {
public:
    // Zero matrix of the given dimension.
    explicit ComplexMatrix(int dim);

    // Takes ownership of row-major entries; rejects non-finite values.
    ComplexMatrix(int dim, std::vector<cxd> entries);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cxd>> rows);

    int dim() const { return dim_; }

    cxd& at(int row, int col) {
        return entries_[static_cast<std::size_t>(row) * dim_ + col];
    }
    const cxd& at(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * dim_ + col];
    }

    const std::vector<cxd>& entries() const { return entries_; }

    bool all_finite() const;

private:
    int dim_;
    std::vector<cxd> entries_;
};

// Standard matrix product. Throws DimensionMismatch.
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);

// Matrix-vector product. Throws DimensionMismatch.
std::vector<cxd> mat_vec(const ComplexMatrix& a, const std::vector<cxd>& x);

// Kronecker product: entry[(i*b.dim+k), (j*b.dim+l)] = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

// tr(a^dagger * b), computed without forming the product.
cxd adjoint_trace(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest entrywise magnitude of a - b. Throws DimensionMismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Entrywise scalar multiple.
ComplexMatrix scaled(const ComplexMatrix& a, cxd factor);

// True iff max-entry magnitude of (a^dagger a - I) <= tol.eps.
bool is_unitary(const ComplexMatrix& a, Tolerance tol);

// min over unit-modulus phi of ||a - phi*b||_F for arbitrary matrices.
//
// For unitary operands this equals sqrt(2N - 2|tr(a^dagger b)|), but it is
// evaluated as an explicit residual norm at the minimizing
// phi = conj(tr)/|tr|; the closed form loses half the significant digits
// near zero through cancellation. Throws DimensionMismatch.
double phase_minimized_frobenius(const ComplexMatrix& a, const ComplexMatrix& b);

// phase_minimized_frobenius restricted to unitary operands.
// Throws DimensionMismatch, NotUnitary.
double phase_invariant_distance(const ComplexMatrix& u, const ComplexMatrix& v);

// Unitary j-th root via spectral decomposition: principal j-th roots of the
// eigenvalues in the Schur basis. Any orthonormal eigenbasis is acceptable;
// the contract is phase_invariant_distance(root^j, u) small, nothing more.
// Throws NotUnitary, Error (j < 1).
ComplexMatrix unitary_root(const ComplexMatrix& u, int j);

// Repeated product u^power, power >= 0.
ComplexMatrix mat_pow(const ComplexMatrix& u, int power);

} // namespace pqga
