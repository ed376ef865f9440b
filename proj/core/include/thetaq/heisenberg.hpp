#pragma once

#include <map>
#include <vector>

#include "thetaq/cyclo.hpp"
#include "thetaq/intmat.hpp"
#include "thetaq/matrix.hpp"

namespace thetaq {

/// Element (p, q, k) of the Heisenberg group H(Z^g).  In the finite
/// quotient H(Z_N^g) the canonical form has 0 <= p_i, q_i < N and
/// 0 <= k < 2N.
struct HeisElement {
    std::vector<long> p;
    std::vector<long> q;
    long k = 0;

    size_t genus() const { return p.size(); }
    std::vector<long> pq() const;  // concatenated (p, q)

    bool operator==(const HeisElement&) const = default;
    auto operator<=>(const HeisElement&) const = default;
};

HeisElement heis_identity(size_t g);

/// Group law: k picks up the sum of 2x2 determinants |p_j q_j; p'_j q'_j|.
HeisElement heis_mul(const HeisElement& x, const HeisElement& y);

HeisElement heis_inverse(const HeisElement& x);

/// Canonical representative in the finite quotient (reduce p, then q,
/// then k, with the group-law corrections).  A congruence for heis_mul.
HeisElement finite_normal_form(const HeisElement& x, long N);

/// Formal linear combination of canonical finite Heisenberg elements.
class HeisAlgebraVector {
public:
    HeisAlgebraVector(long N, size_t g) : n_(N), g_(g) {}

    long order() const { return n_; }
    size_t genus() const { return g_; }
    const std::map<HeisElement, CycloScalar>& terms() const { return terms_; }

    /// Adds coeff * x (x put into normal form first); zero terms pruned.
    void add_term(const HeisElement& x, const CycloScalar& coeff);
    CycloScalar coefficient(const HeisElement& canonical) const;
    bool operator==(const HeisAlgebraVector& rhs) const;

private:
    long n_;
    size_t g_;
    std::map<HeisElement, CycloScalar> terms_;
};

/// Rank-g isotropic direct summand of Z^{2g}, stored by a generator
/// matrix (g rows of length 2g) and compared through its Hermite normal
/// form.
class Lagrangian {
public:
    Lagrangian(size_t g, IntMat generators);
    static Lagrangian standard(size_t g);  // {(0, q)}

    size_t genus() const { return g_; }
    const IntMat& generators() const { return gens_; }
    const IntMat& hermite_form() const { return hnf_; }
    bool operator==(const Lagrangian& rhs) const { return hnf_ == rhs.hnf_; }

    /// Image h_*(L) under a symplectic matrix (column-vector convention).
    Lagrangian transformed(const IntMat& h) const;

    /// The mod-N reduction of L as a sorted list of points of Z_N^{2g}.
    std::vector<std::vector<long>> mod_points(long N) const;

    /// Canonical finite forms of the integer lattice points (s, 0) of the
    /// lift of L, keyed by their mod-N reduction.  These are the elements
    /// on which the character is 1; their canonical k is generally not 0.
    std::map<std::vector<long>, HeisElement> lift_points(long N) const;

private:
    size_t g_;
    IntMat gens_;
    IntMat hnf_;
};

/// Position of a canonical element in the lexicographic basis of the
/// group algebra: ((p-index * N^g) + q-index) * 2N + k.
size_t heis_element_index(const HeisElement& canonical, long N);

/// The induced representation space H_{N,g}(L): quotient of the group
/// algebra of the finite Heisenberg group by the relations
/// chi_L(u1) u = u u1 for u1 in the lift of L.  The basis consists of
/// orbit representatives of the free right action of that lift; the
/// projection sends each canonical group element to a scalar multiple of
/// its representative.
struct InducedSpace {
    long N = 0;
    size_t g = 0;
    Lagrangian lagrangian;
    size_t ambient_dim = 0;                // 2 N^{2g+1}
    std::vector<HeisElement> basis;        // orbit representatives
    CycloMatrix projection;                // N^g x ambient_dim

    /// Index of a canonical element in the ambient group-algebra basis.
    size_t element_index(const HeisElement& canonical) const;
    /// Coordinates of pi_L(x) in the quotient basis (x arbitrary).
    std::vector<CycloScalar> project_element(const HeisElement& x) const;
};

InducedSpace induced_space(const Lagrangian& L, long N);

/// Matrix of the left regular action of x on the induced space basis.
CycloMatrix left_action_matrix(const InducedSpace& space, const HeisElement& x);

/// Matrix of t^k O_{pq} on the theta basis: theta_mu gets sent to
/// t^{k - p.q - 2 mu.q} theta_{mu+p}.  Integer vectors of any size g;
/// no reduction of the inputs, only the target index wraps mod N.
CycloMatrix heis_operator_matrix(const std::vector<long>& p,
                                 const std::vector<long>& q, long k, long N);

/// Schroedinger representation matrix of a canonical element.
CycloMatrix schrodinger_matrix(const HeisElement& x, long N);

/// Result of the discrete Fourier transform construction: the coset-sum
/// map composed with the pullback identification gives rho(h)^{-1}; rho
/// is its inverse.  `index` is the subgroup index entering the
/// normalization.
struct FourierPair {
    CycloMatrix rho;
    CycloMatrix rho_inverse;
    long index = 1;
};

/// Discrete Fourier transform of a mapping class, built from the induced
/// representation attached to the standard Lagrangian.
FourierPair fourier_matrix(const IntMat& h, const Lagrangian& L, long N);

/// Number of failing entries in the exact Egorov identity
/// O_{h_*(p,q)} rho(h) = rho(h) O_{pq} over the standard generators.
long egorov_residual(const IntMat& h, long N);
long egorov_residual_for(const CycloMatrix& rho, const IntMat& h, long N);

}  // namespace thetaq
