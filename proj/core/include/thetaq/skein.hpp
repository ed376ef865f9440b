#pragma once

#include <map>
#include <vector>

#include "thetaq/cyclo.hpp"
#include "thetaq/heisenberg.hpp"
#include "thetaq/matrix.hpp"
#include "thetaq/theta.hpp"

namespace thetaq {

/// Skein of the cylinder over the genus-g surface in Heisenberg
/// coordinates: a linear combination of the basis multicurves a^p b^q,
/// indices mod N.  The central relation folds every k into the scalar,
/// so supports carry k = 0 only.
class SkeinElement {
public:
    SkeinElement(long N, size_t g) : n_(N), g_(g) {}
    static SkeinElement empty_link(long N, size_t g);

    long order() const { return n_; }
    size_t genus() const { return g_; }
    /// Terms keyed by the concatenated canonical (p, q).
    const std::map<std::vector<long>, CycloScalar>& terms() const {
        return terms_;
    }

    void add_term(const std::vector<long>& p, const std::vector<long>& q,
                  const CycloScalar& coeff);
    CycloScalar coefficient(const std::vector<long>& p,
                            const std::vector<long>& q) const;

    SkeinElement operator+(const SkeinElement& rhs) const;
    SkeinElement scaled(const CycloScalar& s) const;
    bool operator==(const SkeinElement& rhs) const;

private:
    long n_;
    size_t g_;
    std::map<std::vector<long>, CycloScalar> terms_;
};

/// Skeins of the handlebody: coefficients on the basis a_1^{mu_1} ...
/// a_g^{mu_g}, which matches the theta basis coordinatewise.
using HandlebodyVector = ThetaVector;

/// Framed simple closed curve on the surface: primitive class and an
/// integer framing.
struct FramedCurve {
    std::vector<long> p;
    std::vector<long> q;
    long framing = 0;
};

/// Image of a group element under the isomorphism
/// (p,q,k) -> t^{k - p.q} a^p b^q (computed on the canonical form).
SkeinElement from_heisenberg(const HeisElement& x, long N);

/// Algebra product transported through the group law.
SkeinElement skein_mul(const SkeinElement& x, const SkeinElement& y);

/// Matrix of the module action of a skein on the handlebody.
ThetaOperator skein_action_matrix(const SkeinElement& x);

HandlebodyVector act_on_handlebody(const SkeinElement& x,
                                   const HandlebodyVector& v);

/// Skein of the embedded parallel-framed simple closed curve of class
/// (p, q): the image of (p, q, 0).
SkeinElement scc(const std::vector<long>& p, const std::vector<long>& q,
                 long N);

/// Omega coloring of a framed curve:
/// N^{-1/2} sum_k t^{framing k^2} scc(k (p,q)).
SkeinElement omega_curve(const FramedCurve& c, long N);

/// Matrix of left multiplication by Omega(T_1 ... T_n) on the
/// handlebody; projectively the discrete Fourier transform of the
/// product of the corresponding Dehn twists.  Framings must be +-1.
ThetaOperator rho_via_omega(const std::vector<FramedCurve>& twist_word,
                            long N, size_t g);

/// Symplectic matrix of a twist word (product in word order).
SymplecticMatrix twist_word_matrix(const std::vector<FramedCurve>& twist_word,
                                   size_t g);

/// Transport of the mapping-class automorphism (p,q,k) -> (h(p,q),k)
/// to skein coordinates.
SkeinElement mcg_transform(const IntMat& h, const SkeinElement& s);

}  // namespace thetaq
