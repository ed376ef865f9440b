#pragma once

#include <complex>
#include <vector>

#include "thetaq/errors.hpp"

namespace thetaq {

using Complex = std::complex<double>;

/// Symmetric g x g complex matrix with positive definite imaginary part.
class PeriodMatrix {
public:
    PeriodMatrix(size_t g, std::vector<Complex> entries);

    size_t genus() const { return g_; }
    const Complex& at(size_t r, size_t c) const { return pi_[r * g_ + c]; }
    /// Column j as a complex vector (the j-th lattice vector beyond e_j).
    std::vector<Complex> column(size_t j) const;
    /// Determinant of the imaginary part.
    double imag_determinant() const;
    /// y^T Im(Pi) y.
    double imag_quadratic(const std::vector<double>& y) const;

private:
    size_t g_;
    std::vector<Complex> pi_;
};

/// Partial theta series with indices mu in Z_N^g, truncated to lattice
/// points of max-norm at most M.
struct TruncatedThetaSeries {
    std::vector<long> mu;
    long N = 2;
    PeriodMatrix Pi;
    long M = 10;
};

/// sum over |n|_inf <= M of
/// exp(2 pi i N [ (mu/N+n)^T Pi (mu/N+n) / 2 + (mu/N+n)^T z ]).
Complex theta_eval(const TruncatedThetaSeries& s, const std::vector<Complex>& z);

/// Residual |f(z + lambda_j) - c_j(z) f(z)| of the periodicity condition
/// for the j-th lattice vector, j = 1..2g.
double periodicity_residual(const TruncatedThetaSeries& s,
                            const std::vector<Complex>& z, size_t j);

/// Numerical Gram matrix of the theta basis under the L^2 inner product,
/// via tensor-product midpoint quadrature with Q points per axis on
/// [0,1]^{2g}.  Row major, size N^g x N^g; expected close to the identity.
std::vector<Complex> gram_quadrature(long N, size_t g, const PeriodMatrix& Pi,
                                     long M, long Q);

/// max |G - I| over all entries.
double gram_identity_error(const std::vector<Complex>& gram, size_t dim);

}  // namespace thetaq
