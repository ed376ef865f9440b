#pragma once

#include <vector>

#include "thetaq/cyclo.hpp"
#include "thetaq/heisenberg.hpp"
#include "thetaq/intmat.hpp"
#include "thetaq/matrix.hpp"

namespace thetaq {

/// Square matrix acting on the N^g-dimensional theta space.
using ThetaOperator = CycloMatrix;

/// Integral symplectic matrix (h^T J h = J); the action of a mapping
/// class on H_1 in the (a_1..a_g, b_1..b_g) basis, column convention.
using SymplecticMatrix = IntMat;

/// Vector in the theta space, coefficients in the theta_mu basis
/// indexed by Z_N^g.
class ThetaVector {
public:
    ThetaVector(long N, size_t g);
    static ThetaVector basis_vector(long N, size_t g, const std::vector<long>& mu);

    long order() const { return n_; }
    size_t genus() const { return g_; }
    size_t dimension() const { return coeffs_.size(); }
    const std::vector<CycloScalar>& coeffs() const { return coeffs_; }
    CycloScalar& coeff(const std::vector<long>& mu);
    const CycloScalar& coeff(const std::vector<long>& mu) const;

    ThetaVector operator+(const ThetaVector& rhs) const;
    ThetaVector scaled(const CycloScalar& s) const;
    ThetaVector applied(const ThetaOperator& op) const;
    bool operator==(const ThetaVector& rhs) const;

private:
    long n_;
    size_t g_;
    std::vector<CycloScalar> coeffs_;
};

/// Matrix of O_{pq}: theta_mu -> t^{-p.q - 2 mu.q} theta_{mu+p}.
/// Integer vectors are taken as given; only the basis index wraps mod N.
ThetaOperator op_pq(const std::vector<long>& p, const std::vector<long>& q,
                    long N);

/// Bilinear pairing with [theta_mu, theta_nu] = t^{-2 mu.nu}.
CycloScalar heegaard_pairing(const ThetaVector& u, const ThetaVector& w);

/// Gram matrix of the pairing on the theta basis.
ThetaOperator heegaard_gram(long N, size_t g);

/// The exact inverse (1/N^g) t^{2 mu.nu} of the Gram matrix; verified
/// against the Gram matrix before returning.
ThetaOperator pairing_gram_inverse(long N, size_t g);

/// Symplectic transvection of a Dehn twist along a primitive curve class
/// (p, q); sign +1 gives the twist along b_1 mapping a_1 to a_1 + b_1.
SymplecticMatrix dehn_twist_matrix(const std::vector<long>& p,
                                   const std::vector<long>& q, int sign,
                                   size_t g);

}  // namespace thetaq
