#pragma once

#include <memory>
#include <vector>

#include "doiforge/complex_matrix.hpp"
#include "doiforge/scalar_function.hpp"

namespace doiforge {

struct SpectralDecomposition {
    std::vector<double> eigenvalues;  // ascending
    Matrix eigenvectors;              // unitary, columns are eigenvectors
    int sweeps = 0;
    double offdiag_final = 0.0;
};

// Cyclic Jacobi for complex Hermitian input.  Sweeps the strict upper
// triangle in row order; stops when the off-diagonal Frobenius norm falls
// below 1e-13 relative to the input norm, caps at 100 sweeps.
SpectralDecomposition jacobi_eigendecomposition(const Matrix& hermitian);

// Hermitian matrix with a cached spectral decomposition.  Construction
// symmetrizes (A + A*)/2 after checking the defect against
// 1e-12 * (1 + max |entry|); the measured defect stays readable.
// Copies share the lazily computed decomposition.
class HermitianOperator {
public:
    explicit HermitianOperator(const Matrix& a);
    // prescribed eigenbasis: A = U diag(eigenvalues) U*
    HermitianOperator(const Matrix& unitary, const std::vector<double>& eigenvalues);

    std::size_t dim() const { return matrix_.rows(); }
    const Matrix& matrix() const { return matrix_; }
    double hermiticity_defect() const { return defect_; }

    const SpectralDecomposition& decomposition() const;
    const std::vector<double>& eigenvalues() const { return decomposition().eigenvalues; }
    const Matrix& eigenvectors() const { return decomposition().eigenvectors; }

private:
    struct CacheBlock;
    Matrix matrix_;
    double defect_ = 0.0;
    std::shared_ptr<CacheBlock> cache_;
};

// U diag(f(lambda)) U*; complex-valued f yields a non-Hermitian (for
// ImagPower, unitary) result
Matrix apply_function(const ScalarFunction& f, const HermitianOperator& a);

// real-valued f; result shares the eigenbasis of a, no second eigensolve
HermitianOperator apply_function_sym(const ScalarFunction& f, const HermitianOperator& a);

// (alpha^2 + D^2)^{1/2}
HermitianOperator delta(const HermitianOperator& d, double alpha);

}  // namespace doiforge
