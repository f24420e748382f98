#include "doiforge/doi.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "doiforge/errors.hpp"
#include "doiforge/norms.hpp"
#include "doiforge/rng.hpp"

namespace doiforge {

namespace {

// rank-one spectral projector from the k-th eigenvector column
Matrix projector(const Matrix& basis, std::size_t k) {
    const std::size_t n = basis.rows();
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = basis(i, k) * std::conj(basis(j, k));
    return p;
}

Matrix random_complex(Rng& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
    return m;
}

}  // namespace

DoiOperator::DoiOperator(const Kernel& kernel, const HermitianOperator& left,
                         const HermitianOperator& right)
    : kernel_(kernel), left_(left), right_(right) {
    const auto& lam = left_.eigenvalues();
    const auto& mu = right_.eigenvalues();
    schur_ = Matrix(lam.size(), mu.size());
    for (std::size_t i = 0; i < lam.size(); ++i) {
        for (std::size_t j = 0; j < mu.size(); ++j) {
            const cplx value = kernel_.evaluate(lam[i], mu[j]);
            if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
                throw DomainError("DoiOperator: kernel value not finite at (" +
                                  std::to_string(lam[i]) + ", " + std::to_string(mu[j]) + ")");
            schur_(i, j) = value;
        }
    }
}

Matrix DoiOperator::apply(const Matrix& x) const {
    if (x.rows() != left_.dim() || x.cols() != right_.dim())
        throw DimensionMismatch("DoiOperator::apply: argument shape");
    Matrix hat = left_.eigenvectors().adjoint() * x * right_.eigenvectors();
    for (std::size_t i = 0; i < hat.rows(); ++i)
        for (std::size_t j = 0; j < hat.cols(); ++j) hat(i, j) *= schur_(i, j);
    return left_.eigenvectors() * hat * right_.eigenvectors().adjoint();
}

Matrix schur_apply(const DoiOperator& t, const Matrix& x) { return t.apply(x); }

EstimateReport defining_identity_check(const DoiOperator& t, long trials, std::uint64_t seed) {
    if (trials < 1) throw InvalidParameter("defining_identity_check: trials must be >= 1");
    const std::size_t n0 = t.left().dim(), n1 = t.right().dim();
    if (n0 > 8 || n1 > 8)
        throw PreconditionError("defining_identity_check: brute force capped at n = 8");

    std::vector<Matrix> p(n0), q(n1);
    for (std::size_t i = 0; i < n0; ++i) p[i] = projector(t.left().eigenvectors(), i);
    for (std::size_t j = 0; j < n1; ++j) q[j] = projector(t.right().eigenvectors(), j);

    Rng rng(seed, 0);
    double worst = 0.0, worst_abs = 0.0;
    for (long k = 0; k < trials; ++k) {
        // draw order: x entries row-major, then y entries row-major
        const Matrix x = random_complex(rng, n1, n0);
        const Matrix y = random_complex(rng, n0, n1);
        const cplx lhs = (x * t.apply(y)).trace();
        cplx rhs = 0.0;
        for (std::size_t i = 0; i < n0; ++i)
            for (std::size_t j = 0; j < n1; ++j)
                rhs += t.schur_matrix()(i, j) * (x * p[i] * y * q[j]).trace();
        const double dev = std::abs(lhs - rhs);
        const double scale = 1.0 + std::max(std::abs(lhs), std::abs(rhs));
        worst = std::max(worst, dev / scale);
        worst_abs = std::max(worst_abs, dev);
    }

    EstimateReport report;
    report.id = "defining_identity";
    report.trial = trials;
    report.seed = seed;
    report.n = static_cast<int>(std::max(n0, n1));
    report.norm = "trace";
    report.params["max_abs_dev"] = worst_abs;
    report.notes = "kernel " + t.kernel().name() + "; lhs is the worst scale-relative deviation";
    report.finalize(worst, 0.0, 1.0);
    return report;
}

EstimateReport homomorphism_check(const Kernel& phi1, const Kernel& phi2,
                                  const HermitianOperator& d0, const HermitianOperator& d1,
                                  const Matrix& x) {
    const DoiOperator t1(phi1, d0, d1);
    const DoiOperator t2(phi2, d0, d1);
    const DoiOperator t12(phi1 * phi2, d0, d1);
    const DoiOperator tsum(phi1 + phi2, d0, d1);

    double worst = 0.0;
    std::string worst_law = "product";
    auto score = [&worst, &worst_law](const Matrix& got, const Matrix& want, const char* law) {
        const double resid = (got - want).max_abs_entry() / (1.0 + want.max_abs_entry());
        if (resid > worst) {
            worst = resid;
            worst_law = law;
        }
    };

    score(t12.apply(x), t1.apply(t2.apply(x)), "product");
    score(tsum.apply(x), t1.apply(x) + t2.apply(x), "sum");
    const DoiOperator flip1(phi1.adjoint_flip(), d1, d0);
    const DoiOperator flip2(phi2.adjoint_flip(), d1, d0);
    score(flip1.apply(x.adjoint()), t1.apply(x).adjoint(), "adjoint");
    score(flip2.apply(x.adjoint()), t2.apply(x).adjoint(), "adjoint");

    EstimateReport report;
    report.id = "homomorphism";
    report.n = static_cast<int>(d0.dim());
    report.norm = "entrywise";
    report.notes = "kernels " + phi1.name() + ", " + phi2.name() + "; worst law: " + worst_law;
    report.finalize(worst, 0.0, 1.0);
    return report;
}

EstimateReport change_of_variables_check(const Kernel& phi, const ScalarFunction& f0,
                                         const ScalarFunction& f1, const HermitianOperator& d0,
                                         const HermitianOperator& d1, const Matrix& x) {
    const Kernel pushed = Kernel::composed(phi, f0, f1);
    const Matrix lhs = DoiOperator(pushed, d0, d1).apply(x);
    const Matrix rhs =
        DoiOperator(phi, apply_function_sym(f0, d0), apply_function_sym(f1, d1)).apply(x);

    EstimateReport report;
    report.id = "change_of_variables";
    report.n = static_cast<int>(d0.dim());
    report.norm = "entrywise";
    report.notes = "kernel " + phi.name() + " under (" + f0.name() + ", " + f1.name() + ")";
    report.finalize((lhs - rhs).max_abs_entry() / (1.0 + rhs.max_abs_entry()), 0.0, 1.0);
    return report;
}

EstimateReport commutator_transfer_check(const ScalarFunction& f, const HermitianOperator& d0,
                                         const HermitianOperator& d1, const Matrix& a) {
    const DoiOperator t(Kernel::divided_difference_of(f), d0, d1);
    const Matrix lhs = apply_function(f, d0) * a - a * apply_function(f, d1);
    const Matrix rhs = t.apply(d0.matrix() * a - a * d1.matrix());
    const double scale = 1.0 + operator_norm(a) * t.schur_matrix().max_abs_entry();

    EstimateReport report;
    report.id = "commutator_transfer";
    report.n = static_cast<int>(std::max(d0.dim(), d1.dim()));
    report.norm = "entrywise";
    report.params["kernel_sup"] = t.schur_matrix().max_abs_entry();
    report.notes = "function " + f.name() + "; residual relative to 1 + |a| sup|kernel|";
    report.finalize((lhs - rhs).max_abs_entry() / scale, 0.0, 1.0);
    return report;
}

}  // namespace doiforge
