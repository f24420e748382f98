#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace doiforge {

using cplx = std::complex<double>;

// Dense complex matrix, row-major.  Sized for the desk scale of this
// workbench (n up to a few hundred); no attempt at BLAS-level tuning.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix diag(const std::vector<double>& d);
    static Matrix diag_cplx(const std::vector<cplx>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix& operator+=(const Matrix& b);
    Matrix& operator-=(const Matrix& b);
    Matrix& operator*=(cplx s);

    Matrix adjoint() const;
    cplx trace() const;
    double frobenius_norm() const;
    double max_abs_entry() const;

    // max |A_ij - conj(A_ji)|; zero for exactly Hermitian input
    double hermitian_defect() const;
    Matrix hermitian_part() const;  // (A + A*)/2

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(cplx s, Matrix a);

// XY - YX
Matrix commutator(const Matrix& x, const Matrix& y);

void require_same_shape(const Matrix& a, const Matrix& b, const char* where);
void require_square(const Matrix& a, const char* where);

}  // namespace doiforge
