#pragma once

#include <cstdint>

#include "doiforge/kernels.hpp"
#include "doiforge/report.hpp"
#include "doiforge/spectral.hpp"

namespace doiforge {

// T_phi(D0, D1) realized as a Schur multiplier: with D0 = U L U* and
// D1 = V M V*, x maps to U ( [phi(l_i, m_j)] .* (U* x V) ) V*.
// Immutable after construction; apply is reentrant.  Divided-difference
// kernels switch to the derivative rule on near-diagonal eigenvalue pairs,
// so degenerate spectra are safe.
class DoiOperator {
public:
    DoiOperator(const Kernel& kernel, const HermitianOperator& left,
                const HermitianOperator& right);

    Matrix apply(const Matrix& x) const;

    const Kernel& kernel() const { return kernel_; }
    const HermitianOperator& left() const { return left_; }
    const HermitianOperator& right() const { return right_; }
    const Matrix& schur_matrix() const { return schur_; }

private:
    Kernel kernel_;
    HermitianOperator left_;
    HermitianOperator right_;
    Matrix schur_;
};

Matrix schur_apply(const DoiOperator& t, const Matrix& x);

// Brute-force trace identity over rank-one spectral projectors:
// tr(x T(y)) == sum_{ij} phi(l_i, m_j) tr(x P_i y Q_j) for random x, y.
// Quadratic cost in the projector pairs caps the dimension at 8.
EstimateReport defining_identity_check(const DoiOperator& t, long trials, std::uint64_t seed);

// Product, sum and adjoint laws of phi -> T_phi on a shared operator pair;
// the adjoint law pairs conj(phi(mu, lambda)) with the swapped operators.
EstimateReport homomorphism_check(const Kernel& phi1, const Kernel& phi2,
                                  const HermitianOperator& d0, const HermitianOperator& d1,
                                  const Matrix& x);

// T with kernel phi(f0(lambda), f1(mu)) on (D0, D1) equals T with kernel
// phi on (f0(D0), f1(D1))
EstimateReport change_of_variables_check(const Kernel& phi, const ScalarFunction& f0,
                                         const ScalarFunction& f1, const HermitianOperator& d0,
                                         const HermitianOperator& d1, const Matrix& x);

// f(D0) a - a f(D1) == T_{psi_f}(D0 a - a D1); exact in finite dimensions,
// the engine's master self-test
EstimateReport commutator_transfer_check(const ScalarFunction& f, const HermitianOperator& d0,
                                         const HermitianOperator& d1, const Matrix& a);

}  // namespace doiforge
