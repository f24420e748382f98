#include "doiforge/ensembles.hpp"

#include <cmath>
#include <string>

#include "doiforge/errors.hpp"
#include "doiforge/norms.hpp"

namespace doiforge {

Matrix random_complex_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
    return m;
}

Matrix gaussian_hermitian_matrix(Rng& rng, std::size_t n) {
    return random_complex_matrix(rng, n, n).hermitian_part();
}

Matrix haar_like_unitary(Rng& rng, std::size_t n) {
    Matrix u = random_complex_matrix(rng, n, n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t prev = 0; prev < k; ++prev) {
            cplx dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += std::conj(u(i, prev)) * u(i, k);
            for (std::size_t i = 0; i < n; ++i) u(i, k) -= dot * u(i, prev);
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += std::norm(u(i, k));
        norm = std::sqrt(norm);
        if (norm == 0.0) throw DomainError("haar_like_unitary: degenerate draw");
        for (std::size_t i = 0; i < n; ++i) u(i, k) /= norm;
    }
    return u;
}

HermitianOperator gaussian_hermitian(Rng& rng, std::size_t n) {
    return HermitianOperator(gaussian_hermitian_matrix(rng, n));
}

HermitianOperator prescribed_spectrum(Rng& rng, const std::vector<double>& eigenvalues) {
    return {haar_like_unitary(rng, eigenvalues.size()), eigenvalues};
}

HermitianOperator clustered_spectrum(Rng& rng, std::size_t n, double gap) {
    if (!(gap > 0.0)) throw InvalidParameter("clustered_spectrum: gap must be positive");
    if (n < 1) throw InvalidParameter("clustered_spectrum: need n >= 1");
    // magnitudes m_k = 1 + gap (1.5 k + 0.5 u_k) stay below 2
    if (1.5 * gap * static_cast<double>(n) > 1.0)
        throw InvalidParameter("clustered_spectrum: n * gap too large for the [1, 2] band");

    // draw order: magnitudes first, then signs
    std::vector<double> eigs(n);
    for (std::size_t k = 0; k < n; ++k)
        eigs[k] = 1.0 + gap * (1.5 * static_cast<double>(k) + 0.5 * rng.uniform01());
    for (auto& e : eigs)
        if (rng.uniform01() < 0.5) e = -e;
    return prescribed_spectrum(rng, eigs);
}

HermitianOperator periodic_derivative_model(int big_n) {
    if (big_n < 0) throw InvalidParameter("periodic_derivative_model: N must be >= 0");
    std::vector<double> eigs;
    eigs.reserve(2 * static_cast<std::size_t>(big_n) + 1);
    for (int k = -big_n; k <= big_n; ++k) eigs.push_back(static_cast<double>(k));
    return {Matrix::identity(eigs.size()), eigs};
}

Matrix bounded_perturbation(Rng& rng, std::size_t n, double cap) {
    if (!(cap >= 0.0)) throw InvalidParameter("bounded_perturbation: cap must be >= 0");
    Matrix h = gaussian_hermitian_matrix(rng, n);
    const double norm = operator_norm(h);
    if (norm == 0.0) return h;
    h *= cplx(cap / norm);
    return h;
}

double min_abs_eigenvalue(const HermitianOperator& d) {
    double best = std::numeric_limits<double>::infinity();
    for (double lam : d.eigenvalues()) best = std::min(best, std::abs(lam));
    return best;
}

void require_invertible(const HermitianOperator& d, const char* where) {
    if (min_abs_eigenvalue(d) < 1e-6)
        throw SpectrumContainsZero(std::string(where) + ": spectrum touches zero");
}

}  // namespace doiforge
