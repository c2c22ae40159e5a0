#include "qwalk/density_operator.hpp"

#include <cmath>

#include "qwalk/errors.hpp"
#include "qwalk/tolerances.hpp"

namespace qwalk {

namespace {

// In-place complex Cholesky attempt on a working copy of m + shift*I.
// Returns false on a nonpositive pivot, i.e. the shifted matrix is not
// positive definite. A relative slack on the pivot keeps exact-boundary
// states (an eigenvalue at -shift) from flapping on roundoff.
bool cholesky_succeeds(const ComplexMatrix& m, double shift) {
    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    const double slack = 16.0 * 1e-16 * (std::abs(a.trace()) + shift * n + 1.0);
    for (std::size_t i = 0; i < n; ++i) a(i, i) += shift;

    for (std::size_t k = 0; k < n; ++k) {
        double pivot = a(k, k).real();
        if (pivot < -slack) return false;
        pivot = std::max(pivot, 0.0);
        const double root = std::sqrt(pivot);
        a(k, k) = root;
        if (root == 0.0) {
            // Zero pivot: the column below must vanish too or the matrix
            // is indefinite.
            for (std::size_t i = k + 1; i < n; ++i)
                if (std::abs(a(i, k)) > slack) return false;
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) a(i, k) /= root;
        for (std::size_t j = k + 1; j < n; ++j)
            for (std::size_t i = j; i < n; ++i)
                a(i, j) -= a(i, k) * std::conj(a(j, k));
    }
    return true;
}

}  // namespace

bool is_psd_within(const ComplexMatrix& m, double tol) {
    if (!m.is_square()) throw ShapeError("is_psd_within: matrix not square");
    return cholesky_succeeds(m, tol);
}

DensityOperator::DensityOperator(ComplexMatrix matrix)
    : matrix_(std::move(matrix)) {
    if (!matrix_.is_square())
        throw ShapeError("DensityOperator: matrix not square");
    if (matrix_.hermiticity_defect() > kTol.hermiticity)
        throw ValidationError("DensityOperator: matrix not Hermitian");
    const cplx tr = matrix_.trace();
    if (std::abs(tr - cplx{1.0, 0.0}) > kTol.trace_unit)
        throw ValidationError("DensityOperator: trace differs from 1");
    if (!is_psd_within(matrix_, kTol.psd))
        throw ValidationError("DensityOperator: not positive semidefinite");
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0 / static_cast<double>(dim);
    return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::pure(const std::vector<cplx>& amplitudes) {
    const std::size_t n = amplitudes.size();
    double norm2 = 0.0;
    for (const cplx& z : amplitudes) norm2 += std::norm(z);
    if (norm2 == 0.0)
        throw ValidationError("DensityOperator::pure: zero vector");
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = amplitudes[i] * std::conj(amplitudes[j]) / norm2;
    return DensityOperator(std::move(m));
}

double DensityOperator::purity() const {
    double s = 0.0;
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s += std::real(matrix_(i, j) * matrix_(j, i));
    return s;
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
    if (rho.dim() != sigma.dim())
        throw ShapeError("trace_distance: dimension mismatch");
    ComplexMatrix delta = rho.matrix() - sigma.matrix();
    // Symmetrize so two states each at the Hermiticity tolerance cannot push
    // the difference past the eigensolver's own check.
    const std::size_t n = delta.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const cplx avg = 0.5 * (delta(i, j) + std::conj(delta(j, i)));
            delta(i, j) = avg;
            delta(j, i) = std::conj(avg);
        }
    double sum = 0.0;
    for (double ev : hermitian_eigenvalues(delta)) sum += std::abs(ev);
    return 0.5 * sum;
}

DensityOperator partial_trace_position(const DensityOperator& rho) {
    const std::size_t dim = rho.dim();
    if (dim % 2 != 0)
        throw ShapeError("partial_trace_position: dimension not even");
    const std::size_t n = dim / 2;
    ComplexMatrix coin(2, 2);
    for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) {
            cplx s{0.0, 0.0};
            for (std::size_t v = 0; v < n; ++v) s += rho(c * n + v, d * n + v);
            coin(c, d) = s;
        }
    return DensityOperator(std::move(coin));
}

}  // namespace qwalk
