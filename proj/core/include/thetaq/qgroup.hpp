#pragma once

#include <string>
#include <vector>

#include "thetaq/cyclo.hpp"

namespace thetaq {

/// Element of the group algebra of Z_{2N}: coefficients of K^j for
/// j = 0..2N-1, with K^{2N} = 1 applied eagerly.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(long N);
    static GroupAlgebraElement unit(long N);        // 1
    static GroupAlgebraElement k_power(long N, long j);

    long order() const { return n_; }
    const std::vector<CycloScalar>& coeffs() const { return c_; }
    CycloScalar& coeff(long j);
    const CycloScalar& coeff(long j) const;

    GroupAlgebraElement operator+(const GroupAlgebraElement& rhs) const;
    GroupAlgebraElement operator*(const GroupAlgebraElement& rhs) const;
    GroupAlgebraElement scaled(const CycloScalar& s) const;
    bool operator==(const GroupAlgebraElement& rhs) const;

    /// Action on the one-dimensional irrep V^k (K acts by t^k).
    CycloScalar act_on_irrep(long k) const;

private:
    long n_;
    std::vector<CycloScalar> c_;
};

/// Element of the twofold tensor power: coefficients of K^j (x) K^k.
class TwoFoldTensor {
public:
    explicit TwoFoldTensor(long N);
    static TwoFoldTensor unit(long N);  // 1 (x) 1
    static TwoFoldTensor tensor(const GroupAlgebraElement& a,
                                const GroupAlgebraElement& b);

    long order() const { return n_; }
    CycloScalar& coeff(long j, long k);
    const CycloScalar& coeff(long j, long k) const;

    TwoFoldTensor operator*(const TwoFoldTensor& rhs) const;
    TwoFoldTensor scaled(const CycloScalar& s) const;
    bool operator==(const TwoFoldTensor& rhs) const;

    /// Factor swap P.
    TwoFoldTensor flipped() const;
    /// (S (x) id).
    TwoFoldTensor antipode_left() const;

private:
    long n_;
    std::vector<CycloScalar> c_;  // (2N)^2 entries, row = first factor
};

/// Element of the threefold tensor power.
class ThreeFoldTensor {
public:
    explicit ThreeFoldTensor(long N);

    long order() const { return n_; }
    CycloScalar& coeff(long i, long j, long k);
    const CycloScalar& coeff(long i, long j, long k) const;

    ThreeFoldTensor operator*(const ThreeFoldTensor& rhs) const;
    bool operator==(const ThreeFoldTensor& rhs) const;

private:
    long n_;
    std::vector<CycloScalar> c_;  // (2N)^3 entries
};

/// Coproduct Delta(K^j) = K^j (x) K^j, extended linearly.
TwoFoldTensor coproduct(const GroupAlgebraElement& x);

/// Antipode S(K^j) = K^{-j}.
GroupAlgebraElement antipode(const GroupAlgebraElement& x);

/// Counit of the group algebra, K^j -> 1.
CycloScalar counit(const GroupAlgebraElement& x);

/// The R-matrix (1/2N) sum t^{-jk} K^j (x) K^k.
TwoFoldTensor r_matrix(long N);

/// The ribbon twist v; acts on V^k as t^{k^2}.
GroupAlgebraElement twist_element(long N);

/// v^{-1}, obtained by swapping t and t^{-1} in the twist formula.
GroupAlgebraElement twist_element_inverse(long N);

/// sum_{k in Z_N} (-1)^k t^{+-k^2}.
CycloScalar gauss_sum(long N, int sign);

/// Embeddings into the threefold tensor.
ThreeFoldTensor embed_12(const TwoFoldTensor& x);
ThreeFoldTensor embed_13(const TwoFoldTensor& x);
ThreeFoldTensor embed_23(const TwoFoldTensor& x);
ThreeFoldTensor coproduct_left(const TwoFoldTensor& x);   // (Delta (x) id)
ThreeFoldTensor coproduct_right(const TwoFoldTensor& x);  // (id (x) Delta)

struct CheckResult {
    std::string name;
    bool pass = false;
};

struct QGroupReport {
    long N = 0;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Exact verification of the quasi-triangular axioms.
QGroupReport verify_quasitriangular(long N);

/// Exact verification of the ribbon axioms, including the closed form
/// of R^2.
QGroupReport verify_ribbon(long N);

/// Hopf algebra axioms (coassociativity, counit, antipode).
QGroupReport verify_hopf_axioms(long N);

/// Representation scalars: R acts on V^m (x) V^n by t^{mn} and v acts on
/// V^k by t^{k^2}, for all labels.
QGroupReport verify_representation_scalars(long N);

}  // namespace thetaq
