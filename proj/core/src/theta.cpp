#include "thetaq/theta.hpp"

#include "thetaq/zmod.hpp"

namespace thetaq {

ThetaVector::ThetaVector(long N, size_t g)
    : n_(N), g_(g), coeffs_(zng_size(N, g), CycloScalar::zero(static_cast<int>(N))) {}

ThetaVector ThetaVector::basis_vector(long N, size_t g, const std::vector<long>& mu) {
    ThetaVector v(N, g);
    v.coeffs_[zng_index(mu, N)] = CycloScalar::one(static_cast<int>(N));
    return v;
}

CycloScalar& ThetaVector::coeff(const std::vector<long>& mu) {
    return coeffs_[zng_index(mu, n_)];
}

const CycloScalar& ThetaVector::coeff(const std::vector<long>& mu) const {
    return coeffs_[zng_index(mu, n_)];
}

ThetaVector ThetaVector::operator+(const ThetaVector& rhs) const {
    if (n_ != rhs.n_ || g_ != rhs.g_) throw DimensionMismatch("ThetaVector add");
    ThetaVector out = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += rhs.coeffs_[i];
    return out;
}

ThetaVector ThetaVector::scaled(const CycloScalar& s) const {
    ThetaVector out = *this;
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

ThetaVector ThetaVector::applied(const ThetaOperator& op) const {
    if (op.cols() != coeffs_.size()) throw DimensionMismatch("ThetaVector applied");
    ThetaVector out(n_, g_);
    auto v = op.apply(coeffs_);
    for (size_t i = 0; i < v.size(); ++i) {
        out.coeffs_[i] = v[i].is_universal_zero()
                             ? CycloScalar::zero(static_cast<int>(n_))
                             : v[i];
    }
    return out;
}

bool ThetaVector::operator==(const ThetaVector& rhs) const {
    if (n_ != rhs.n_ || g_ != rhs.g_) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != rhs.coeffs_[i]) return false;
    }
    return true;
}

ThetaOperator op_pq(const std::vector<long>& p, const std::vector<long>& q,
                    long N) {
    return heis_operator_matrix(p, q, 0, N);
}

CycloScalar heegaard_pairing(const ThetaVector& u, const ThetaVector& w) {
    if (u.order() != w.order() || u.genus() != w.genus()) {
        throw DimensionMismatch("heegaard_pairing");
    }
    const long N = u.order();
    const int Ni = static_cast<int>(N);
    const size_t g = u.genus();
    CycloScalar acc = CycloScalar::zero(Ni);
    for (size_t i = 0; i < u.dimension(); ++i) {
        if (u.coeffs()[i].is_zero()) continue;
        const auto mu = zng_from_index(i, N, g);
        for (size_t j = 0; j < w.dimension(); ++j) {
            if (w.coeffs()[j].is_zero()) continue;
            const auto nu = zng_from_index(j, N, g);
            acc += u.coeffs()[i] * w.coeffs()[j] * t_power(Ni, -2 * dot(mu, nu));
        }
    }
    return acc;
}

ThetaOperator heegaard_gram(long N, size_t g) {
    const int Ni = static_cast<int>(N);
    const size_t ng = zng_size(N, g);
    ThetaOperator gram(ng, ng, Ni);
    for (size_t i = 0; i < ng; ++i) {
        const auto mu = zng_from_index(i, N, g);
        for (size_t j = 0; j < ng; ++j) {
            const auto nu = zng_from_index(j, N, g);
            gram.at(i, j) = t_power(Ni, -2 * dot(mu, nu));
        }
    }
    return gram;
}

ThetaOperator pairing_gram_inverse(long N, size_t g) {
    const int Ni = static_cast<int>(N);
    const size_t ng = zng_size(N, g);
    const Rational scale(1, static_cast<long>(ng));
    ThetaOperator inv(ng, ng, Ni);
    for (size_t i = 0; i < ng; ++i) {
        const auto mu = zng_from_index(i, N, g);
        for (size_t j = 0; j < ng; ++j) {
            const auto nu = zng_from_index(j, N, g);
            inv.at(i, j) =
                CycloScalar::from_rational(Ni, scale) * t_power(Ni, 2 * dot(mu, nu));
        }
    }
    if (heegaard_gram(N, g) * inv != CycloMatrix::identity(ng, Ni)) {
        throw Error("pairing_gram_inverse: inverse verification failed");
    }
    return inv;
}

SymplecticMatrix dehn_twist_matrix(const std::vector<long>& p,
                                   const std::vector<long>& q, int sign,
                                   size_t g) {
    if (p.size() != g || q.size() != g) {
        throw DimensionMismatch("dehn_twist_matrix: class size");
    }
    std::vector<long> c(p);
    c.insert(c.end(), q.begin(), q.end());
    if (!is_primitive_vector(c)) {
        throw NotPrimitive("dehn_twist_matrix: curve class must be primitive");
    }
    if (sign != 1 && sign != -1) throw Error("dehn_twist_matrix: sign must be +-1");
    // x -> x + sign <x, c> c.
    const IntMat j = intersection_form(g);
    const std::vector<long> jc = j.apply(c);
    SymplecticMatrix m = IntMat::identity(2 * g);
    for (size_t r = 0; r < 2 * g; ++r) {
        for (size_t col = 0; col < 2 * g; ++col) {
            m.at(r, col) += sign * c[r] * jc[col];
        }
    }
    return m;
}

}  // namespace thetaq
