#pragma once

#include <cstddef>
#include <vector>

#include "doiforge/complex_matrix.hpp"
#include "doiforge/rng.hpp"
#include "doiforge/spectral.hpp"

namespace doiforge {

// Deterministic matrix ensembles.  Each function consumes the Rng it is
// handed in a fixed, documented draw order (see README), so a trial is a
// pure function of (seed, stream).

// entries row-major, standard complex normal
Matrix random_complex_matrix(Rng& rng, std::size_t rows, std::size_t cols);

// (B + B*)/2 of a square complex Gaussian draw
Matrix gaussian_hermitian_matrix(Rng& rng, std::size_t n);

// Gram-Schmidt of a complex Gaussian draw, columns in order; the positive
// normalization makes the factor unique given the draw
Matrix haar_like_unitary(Rng& rng, std::size_t n);

HermitianOperator gaussian_hermitian(Rng& rng, std::size_t n);

// random eigenbasis around the given spectrum
HermitianOperator prescribed_spectrum(Rng& rng, const std::vector<double>& eigenvalues);

// magnitudes packed just above 1 with consecutive spacing in [gap, 2 gap],
// random signs; spectrum stays inside [-2, -1] u [1, 2]
HermitianOperator clustered_spectrum(Rng& rng, std::size_t n, double gap);

// diag(-N..N), the integer-spectrum truncation model; dimension 2N + 1
HermitianOperator periodic_derivative_model(int big_n);

// random Hermitian rescaled to operator norm exactly `cap`
Matrix bounded_perturbation(Rng& rng, std::size_t n, double cap);

double min_abs_eigenvalue(const HermitianOperator& d);

// sign/inverse users call this first; threshold 1e-6
void require_invertible(const HermitianOperator& d, const char* where);

}  // namespace doiforge
