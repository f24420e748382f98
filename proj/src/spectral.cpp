#include "doiforge/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

#include "doiforge/errors.hpp"

namespace doiforge {

namespace {

double offdiag_sq(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) s += 2.0 * std::norm(a(i, j));
    return s;
}

}  // namespace

SpectralDecomposition jacobi_eigendecomposition(const Matrix& hermitian) {
    require_square(hermitian, "jacobi_eigendecomposition");
    if (hermitian.hermitian_defect() > 1e-12 * (1.0 + hermitian.max_abs_entry()))
        throw NonHermitianInput("jacobi_eigendecomposition: input is not hermitian");
    const std::size_t n = hermitian.rows();
    Matrix a = hermitian;
    Matrix v = Matrix::identity(n);

    const double fro = a.frobenius_norm();
    const double target_sq = (1e-13 * fro) * (1e-13 * fro);

    constexpr int kMaxSweeps = 100;
    int sweeps = 0;
    bool converged = offdiag_sq(a) <= target_sq;
    while (!converged && sweeps < kMaxSweeps) {
        ++sweeps;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double babs = std::sqrt(std::norm(apq));
                if (babs == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * babs);
                // smaller-magnitude root of t^2 - 2 tau t - 1 = 0
                const double t = tau >= 0.0 ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                            : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx phase = apq / babs;
                const cplx sph = s * phase;
                const cplx sphc = s * std::conj(phase);

                a(p, p) = app * c * c + 2.0 * babs * c * s + aqq * s * s;
                a(q, q) = app * s * s - 2.0 * babs * c * s + aqq * c * c;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == p || j == q) continue;
                    const cplx ajp = a(j, p);
                    const cplx ajq = a(j, q);
                    a(j, p) = ajp * c + ajq * sphc;
                    a(j, q) = -ajp * sph + ajq * c;
                    a(p, j) = std::conj(a(j, p));
                    a(q, j) = std::conj(a(j, q));
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx vip = v(i, p);
                    const cplx viq = v(i, q);
                    v(i, p) = vip * c + viq * sphc;
                    v(i, q) = -vip * sph + viq * c;
                }
            }
        }
        converged = offdiag_sq(a) <= target_sq;
    }
    if (!converged)
        throw ConvergenceFailure("jacobi_eigendecomposition: sweep cap reached");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    SpectralDecomposition dec;
    dec.eigenvalues.resize(n);
    dec.eigenvectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        dec.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) dec.eigenvectors(i, k) = v(i, order[k]);
    }
    dec.sweeps = sweeps;
    dec.offdiag_final = std::sqrt(offdiag_sq(a));
    return dec;
}

struct HermitianOperator::CacheBlock {
    std::mutex m;
    std::shared_ptr<const SpectralDecomposition> dec;
};

HermitianOperator::HermitianOperator(const Matrix& a) : cache_(std::make_shared<CacheBlock>()) {
    require_square(a, "HermitianOperator");
    for (const auto& z : a.data())
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw DomainError("HermitianOperator: non-finite entry");
    defect_ = a.hermitian_defect();
    if (defect_ > 1e-12 * (1.0 + a.max_abs_entry()))
        throw NonHermitianInput("HermitianOperator: hermiticity defect above tolerance");
    matrix_ = a.hermitian_part();
}

HermitianOperator::HermitianOperator(const Matrix& unitary, const std::vector<double>& eigenvalues)
    : cache_(std::make_shared<CacheBlock>()) {
    require_square(unitary, "HermitianOperator(prescribed)");
    const std::size_t n = unitary.rows();
    if (eigenvalues.size() != n)
        throw DimensionMismatch("HermitianOperator(prescribed): eigenvalue count");
    Matrix gram = unitary.adjoint() * unitary;
    gram -= Matrix::identity(n);
    if (gram.max_abs_entry() > 1e-8)
        throw DomainError("HermitianOperator(prescribed): basis not unitary");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&eigenvalues](std::size_t i, std::size_t j) {
        return eigenvalues[i] < eigenvalues[j];
    });
    auto dec = std::make_shared<SpectralDecomposition>();
    dec->eigenvalues.resize(n);
    dec->eigenvectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        dec->eigenvalues[k] = eigenvalues[order[k]];
        for (std::size_t i = 0; i < n; ++i) dec->eigenvectors(i, k) = unitary(i, order[k]);
    }
    cache_->dec = std::move(dec);

    Matrix scaled = cache_->dec->eigenvectors;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= cache_->dec->eigenvalues[j];
    matrix_ = (scaled * cache_->dec->eigenvectors.adjoint()).hermitian_part();
}

const SpectralDecomposition& HermitianOperator::decomposition() const {
    std::lock_guard<std::mutex> lock(cache_->m);
    if (!cache_->dec)
        cache_->dec = std::make_shared<const SpectralDecomposition>(jacobi_eigendecomposition(matrix_));
    return *cache_->dec;
}

Matrix apply_function(const ScalarFunction& f, const HermitianOperator& a) {
    const auto& dec = a.decomposition();
    const std::size_t n = a.dim();
    Matrix scaled = dec.eigenvectors;
    for (std::size_t j = 0; j < n; ++j) {
        const cplx fj = f.value(dec.eigenvalues[j]);
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= fj;
    }
    return scaled * dec.eigenvectors.adjoint();
}

HermitianOperator apply_function_sym(const ScalarFunction& f, const HermitianOperator& a) {
    if (!f.real_valued())
        throw DomainError("apply_function_sym: family is complex-valued");
    const auto& dec = a.decomposition();
    std::vector<double> mapped(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) mapped[k] = f.value_real(dec.eigenvalues[k]);
    return {dec.eigenvectors, mapped};
}

HermitianOperator delta(const HermitianOperator& d, double alpha) {
    if (!(alpha > 0.0)) throw NonPositiveAlpha("delta: alpha must be positive");
    const auto& dec = d.decomposition();
    std::vector<double> mapped(d.dim());
    for (std::size_t k = 0; k < d.dim(); ++k) mapped[k] = std::hypot(alpha, dec.eigenvalues[k]);
    return {dec.eigenvectors, mapped};
}

}  // namespace doiforge
