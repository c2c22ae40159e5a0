#pragma once

#include "qwalk/complex_matrix.hpp"

namespace qwalk {

// Hermitian, unit-trace, positive-semidefinite matrix. Validation happens at
// construction: Hermiticity and trace are direct scans; positivity is an
// attempted Cholesky factorization of rho + psd_tol*I, which succeeds exactly
// when the lowest eigenvalue is >= -psd_tol (up to roundoff) without paying
// for a full eigendecomposition on every construction.
class DensityOperator {
  public:
    explicit DensityOperator(ComplexMatrix matrix);

    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }
    const cplx& operator()(std::size_t i, std::size_t j) const {
        return matrix_(i, j);
    }

    static DensityOperator maximally_mixed(std::size_t dim);
    static DensityOperator pure(const std::vector<cplx>& amplitudes);

    double purity() const;  // tr(rho^2), real by Hermiticity

  private:
    ComplexMatrix matrix_;
};

// 1/2 sum |eig(rho - sigma)|; symmetric, in [0,1] for valid states.
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);

// Trace out the position factor of a state on C^2 (x) C^N laid out
// coin-major (index = c*N + v); returns the 2x2 coin marginal.
DensityOperator partial_trace_position(const DensityOperator& rho);

// True when min eig(m) >= -tol, decided by shifted Cholesky.
bool is_psd_within(const ComplexMatrix& m, double tol);

}  // namespace qwalk
