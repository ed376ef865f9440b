#include "thetaq/skein.hpp"

#include "thetaq/zmod.hpp"

namespace thetaq {

namespace {

// Lift of a basis multicurve back to the group: k = p.q makes the
// isomorphism scalar t^{k - p.q} equal to one.
HeisElement basis_lift(const std::vector<long>& p, const std::vector<long>& q) {
    return HeisElement{p, q, dot(p, q)};
}

}  // namespace

SkeinElement SkeinElement::empty_link(long N, size_t g) {
    SkeinElement s(N, g);
    s.add_term(std::vector<long>(g, 0), std::vector<long>(g, 0),
               CycloScalar::one(static_cast<int>(N)));
    return s;
}

void SkeinElement::add_term(const std::vector<long>& p,
                            const std::vector<long>& q,
                            const CycloScalar& coeff) {
    if (p.size() != g_ || q.size() != g_) {
        throw DimensionMismatch("SkeinElement: class size");
    }
    if (coeff.is_universal_zero()) return;
    std::vector<long> key(2 * g_);
    for (size_t i = 0; i < g_; ++i) {
        key[i] = ((p[i] % n_) + n_) % n_;
        key[g_ + i] = ((q[i] % n_) + n_) % n_;
    }
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(std::move(key), coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

CycloScalar SkeinElement::coefficient(const std::vector<long>& p,
                                      const std::vector<long>& q) const {
    std::vector<long> key(2 * g_);
    for (size_t i = 0; i < g_; ++i) {
        key[i] = ((p[i] % n_) + n_) % n_;
        key[g_ + i] = ((q[i] % n_) + n_) % n_;
    }
    auto it = terms_.find(key);
    return it == terms_.end() ? CycloScalar::zero(static_cast<int>(n_))
                              : it->second;
}

SkeinElement SkeinElement::operator+(const SkeinElement& rhs) const {
    if (n_ != rhs.n_ || g_ != rhs.g_) throw DimensionMismatch("SkeinElement add");
    SkeinElement out = *this;
    for (const auto& [key, val] : rhs.terms_) {
        out.add_term({key.begin(), key.begin() + g_}, {key.begin() + g_, key.end()},
                     val);
    }
    return out;
}

SkeinElement SkeinElement::scaled(const CycloScalar& s) const {
    SkeinElement out(n_, g_);
    for (const auto& [key, val] : terms_) {
        out.add_term({key.begin(), key.begin() + g_}, {key.begin() + g_, key.end()},
                     val * s);
    }
    return out;
}

bool SkeinElement::operator==(const SkeinElement& rhs) const {
    if (n_ != rhs.n_ || g_ != rhs.g_) return false;
    if (terms_.size() != rhs.terms_.size()) return false;
    for (const auto& [key, val] : terms_) {
        auto it = rhs.terms_.find(key);
        if (it == rhs.terms_.end() || it->second != val) return false;
    }
    return true;
}

SkeinElement from_heisenberg(const HeisElement& x, long N) {
    const HeisElement nf = finite_normal_form(x, N);
    SkeinElement out(N, nf.genus());
    out.add_term(nf.p, nf.q,
                 t_power(static_cast<int>(N), nf.k - dot(nf.p, nf.q)));
    return out;
}

SkeinElement skein_mul(const SkeinElement& x, const SkeinElement& y) {
    if (x.order() != y.order() || x.genus() != y.genus()) {
        throw DimensionMismatch("skein_mul");
    }
    const long N = x.order();
    const size_t g = x.genus();
    SkeinElement out(N, g);
    for (const auto& [kx, cx] : x.terms()) {
        const HeisElement lx = basis_lift({kx.begin(), kx.begin() + g},
                                          {kx.begin() + g, kx.end()});
        for (const auto& [ky, cy] : y.terms()) {
            const HeisElement ly = basis_lift({ky.begin(), ky.begin() + g},
                                              {ky.begin() + g, ky.end()});
            const SkeinElement prod = from_heisenberg(heis_mul(lx, ly), N);
            for (const auto& [kp, cp] : prod.terms()) {
                out.add_term({kp.begin(), kp.begin() + g},
                             {kp.begin() + g, kp.end()}, cx * cy * cp);
            }
        }
    }
    return out;
}

ThetaOperator skein_action_matrix(const SkeinElement& x) {
    const long N = x.order();
    const int Ni = static_cast<int>(N);
    const size_t g = x.genus();
    const size_t ng = zng_size(N, g);
    ThetaOperator out(ng, ng, Ni);
    for (const auto& [key, coeff] : x.terms()) {
        // The basis multicurve a^p b^q lifts to (p,q,p.q) and so acts as
        // t^{p.q} O_{pq}.
        const std::vector<long> p(key.begin(), key.begin() + g);
        const std::vector<long> q(key.begin() + g, key.end());
        out = out + heis_operator_matrix(p, q, dot(p, q), N).scaled(coeff);
    }
    return out;
}

HandlebodyVector act_on_handlebody(const SkeinElement& x,
                                   const HandlebodyVector& v) {
    if (x.order() != v.order() || x.genus() != v.genus()) {
        throw DimensionMismatch("act_on_handlebody");
    }
    return v.applied(skein_action_matrix(x));
}

SkeinElement scc(const std::vector<long>& p, const std::vector<long>& q,
                 long N) {
    std::vector<long> cls(p);
    cls.insert(cls.end(), q.begin(), q.end());
    if (!is_primitive_vector(cls)) {
        throw NotPrimitive("scc: curve class must be primitive");
    }
    return from_heisenberg(HeisElement{p, q, 0}, N);
}

SkeinElement omega_curve(const FramedCurve& c, long N) {
    std::vector<long> cls(c.p);
    cls.insert(cls.end(), c.q.begin(), c.q.end());
    if (!is_primitive_vector(cls)) {
        throw NotPrimitive("omega_curve: curve class must be primitive");
    }
    const int Ni = static_cast<int>(N);
    const size_t g = c.p.size();
    SkeinElement out(N, g);
    for (long k = 0; k < N; ++k) {
        std::vector<long> kp(g), kq(g);
        for (size_t i = 0; i < g; ++i) {
            kp[i] = k * c.p[i];
            kq[i] = k * c.q[i];
        }
        const SkeinElement cable = from_heisenberg(HeisElement{kp, kq, 0}, N);
        for (const auto& [key, val] : cable.terms()) {
            out.add_term({key.begin(), key.begin() + g},
                         {key.begin() + g, key.end()},
                         val * t_power(Ni, c.framing * k * k));
        }
    }
    return out.scaled(CycloScalar::n_power(Ni, -1));
}

ThetaOperator rho_via_omega(const std::vector<FramedCurve>& twist_word,
                            long N, size_t g) {
    for (const auto& c : twist_word) {
        if (c.framing != 1 && c.framing != -1) {
            throw Error("rho_via_omega: twist framings must be +-1");
        }
    }
    SkeinElement product = SkeinElement::empty_link(N, g);
    for (const auto& c : twist_word) {
        product = skein_mul(product, omega_curve(c, N));
    }
    return skein_action_matrix(product);
}

SymplecticMatrix twist_word_matrix(const std::vector<FramedCurve>& twist_word,
                                   size_t g) {
    SymplecticMatrix h = IntMat::identity(2 * g);
    for (const auto& c : twist_word) {
        h = h * dehn_twist_matrix(c.p, c.q, c.framing > 0 ? 1 : -1, g);
    }
    return h;
}

SkeinElement mcg_transform(const IntMat& h, const SkeinElement& s) {
    const long N = s.order();
    const size_t g = s.genus();
    if (h.rows() != 2 * g || h.cols() != 2 * g) {
        throw DimensionMismatch("mcg_transform");
    }
    SkeinElement out(N, g);
    for (const auto& [key, val] : s.terms()) {
        const HeisElement lift = HeisElement{
            {key.begin(), key.begin() + g}, {key.begin() + g, key.end()},
            dot({key.begin(), key.begin() + g}, {key.begin() + g, key.end()})};
        const std::vector<long> image = h.apply(lift.pq());
        const HeisElement moved{{image.begin(), image.begin() + g},
                                {image.begin() + g, image.end()},
                                lift.k};
        const SkeinElement term = from_heisenberg(moved, N);
        for (const auto& [kp, cp] : term.terms()) {
            out.add_term({kp.begin(), kp.begin() + g}, {kp.begin() + g, kp.end()},
                         val * cp);
        }
    }
    return out;
}

}  // namespace thetaq
