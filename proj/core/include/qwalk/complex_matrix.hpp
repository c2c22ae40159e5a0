#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace qwalk {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Immutable by convention once built:
// operations return new values. Construction rejects non-finite entries.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);  // zero-filled
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const cplx& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    cplx& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }
    const std::vector<cplx>& entries() const { return entries_; }

    ComplexMatrix dagger() const;
    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    ComplexMatrix operator+(const ComplexMatrix& other) const;
    ComplexMatrix operator-(const ComplexMatrix& other) const;
    ComplexMatrix operator*(const ComplexMatrix& other) const;  // matmul
    ComplexMatrix operator*(cplx scalar) const;

    bool is_hermitian(double tol) const;
    double hermiticity_defect() const;  // max |m(i,j) - conj(m(j,i))|

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;

    void check_finite() const;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product; the left factor indexes the slow (outer) blocks.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi with complex
// rotations; the contract is the residual bound kTol.eigen_residual, checked
// by the tests rather than assumed from the algorithm.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

struct HermitianEigensystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k pairs with values[k]
};

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m);

}  // namespace qwalk
