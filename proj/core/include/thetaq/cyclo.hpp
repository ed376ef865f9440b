#pragma once

#include <complex>
#include <string>
#include <vector>

#include "thetaq/errors.hpp"
#include "thetaq/rational.hpp"

namespace thetaq {

/// Exact element of the ring generated by t = e^{i pi / N} (a primitive
/// 2N-th root of unity) together with half-integer powers of N.
///
/// The value represented is (sum_j coeffs[j] t^j) * N^{nexp}, where the
/// coefficient vector has length 2N and nexp is a half-integer stored in
/// units of 1/2.  Powers of t are kept modulo x^{2N} - 1; reduction modulo
/// the cyclotomic polynomial Phi_{2N} happens on demand (equality, zero
/// tests, inversion, canonical output).
///
/// Addition of two scalars whose N-exponents differ by a half-odd integer
/// throws IncommensurableNExp unless one side is zero: such a sum would
/// silently decide whether sqrt(N) lies in the cyclotomic field.
class CycloScalar {
public:
    /// Dimensionless zero, compatible with every ring.
    CycloScalar() : n_(0), nexp2_(0) {}

    static CycloScalar zero(int N);
    static CycloScalar one(int N);
    static CycloScalar from_rational(int N, const Rational& r);
    /// N^{half_units/2}.
    static CycloScalar n_power(int N, long half_units);
    /// Raw constructor; coeffs must have size 2N.
    CycloScalar(int N, std::vector<Rational> coeffs, long nexp2);

    int order() const { return n_; }
    /// N-exponent in units of 1/2 (value carries N^{nexp_half_units()/2}).
    long nexp_half_units() const { return nexp2_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_universal_zero() const { return n_ == 0; }

    CycloScalar operator-() const;
    CycloScalar operator+(const CycloScalar& rhs) const;
    CycloScalar operator-(const CycloScalar& rhs) const;
    CycloScalar operator*(const CycloScalar& rhs) const;
    CycloScalar& operator+=(const CycloScalar& rhs);
    CycloScalar& operator*=(const CycloScalar& rhs);

    /// Multiplicative inverse in the cyclotomic field; throws DivisionByZero.
    CycloScalar inverse() const;
    /// Complex conjugation, t -> t^{-1}.
    CycloScalar conjugate() const;

    bool operator==(const CycloScalar& rhs) const;
    bool operator!=(const CycloScalar& rhs) const { return !(*this == rhs); }

    /// Floating evaluation at t = e^{i pi / N}.  Cross-checks and display
    /// only; never used for exact decisions.
    std::complex<double> to_complex() const;

    /// Canonical form: reduced mod Phi_{2N}, zero normalized to nexp 0,
    /// common N-content moved into the exponent.
    CycloScalar normalized() const;

    /// Canonical text form `N^{e} * (c0 + c1 t + ... )`.
    std::string to_text() const;

private:
    void require_same_ring(const CycloScalar& rhs) const;

    int n_;       // the N of the ring; 0 marks the universal zero
    long nexp2_;  // N-exponent in half units
    std::vector<Rational> c_;
};

/// t^{j mod 2N} as an exact scalar.
CycloScalar t_power(int N, long j);

/// Coefficients of the n-th cyclotomic polynomial, monic, index = degree.
std::vector<Rational> cyclotomic_polynomial(int n);

/// Exact square root of a positive integer d inside the scalar ring,
/// normalized to the positive real branch.  Written as a product of
/// quadratic Gauss sums when the squarefree part of d is not a plain
/// N-power; throws Error when no representation exists.
CycloScalar cyclo_sqrt_of_integer(int N, long d);

}  // namespace thetaq
