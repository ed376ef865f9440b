#include "thetaq/heisenberg.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "thetaq/zmod.hpp"

namespace thetaq {

namespace {

long floor_mod(long v, long m) {
    long r = v % m;
    return r < 0 ? r + m : r;
}

void require_same_genus(const HeisElement& x, const HeisElement& y) {
    if (x.genus() != y.genus() || x.q.size() != x.p.size() ||
        y.q.size() != y.p.size()) {
        throw DimensionMismatch("Heisenberg elements of different genus");
    }
}

}  // namespace

std::vector<long> HeisElement::pq() const {
    std::vector<long> v(p);
    v.insert(v.end(), q.begin(), q.end());
    return v;
}

HeisElement heis_identity(size_t g) {
    return HeisElement{std::vector<long>(g, 0), std::vector<long>(g, 0), 0};
}

HeisElement heis_mul(const HeisElement& x, const HeisElement& y) {
    require_same_genus(x, y);
    const size_t g = x.genus();
    HeisElement out = heis_identity(g);
    long det = 0;
    for (size_t j = 0; j < g; ++j) {
        out.p[j] = x.p[j] + y.p[j];
        out.q[j] = x.q[j] + y.q[j];
        det += x.p[j] * y.q[j] - x.q[j] * y.p[j];
    }
    out.k = x.k + y.k + det;
    return out;
}

HeisElement heis_inverse(const HeisElement& x) {
    // (p,q,k)(-p,-q,-k) = (0,0,0): the determinant term vanishes on
    // proportional vectors.
    HeisElement out = x;
    for (auto& v : out.p) v = -v;
    for (auto& v : out.q) v = -v;
    out.k = -x.k;
    return out;
}

HeisElement finite_normal_form(const HeisElement& x, long N) {
    const size_t g = x.genus();
    HeisElement out = x;
    // Reduce p first: left multiplication by (-N m_i e_i, 0, 0) shifts k
    // by -N m_i q_i.
    for (size_t i = 0; i < g; ++i) {
        long r = floor_mod(out.p[i], N);
        long m = (out.p[i] - r) / N;
        out.p[i] = r;
        out.k -= N * m * out.q[i];
    }
    // Then q: left multiplication by (0, -N m_i e_i, 0) shifts k by
    // +N m_i p_i (p already canonical).
    for (size_t i = 0; i < g; ++i) {
        long r = floor_mod(out.q[i], N);
        long m = (out.q[i] - r) / N;
        out.q[i] = r;
        out.k += N * m * out.p[i];
    }
    out.k = floor_mod(out.k, 2 * N);
    return out;
}

void HeisAlgebraVector::add_term(const HeisElement& x, const CycloScalar& coeff) {
    if (coeff.is_universal_zero()) return;
    HeisElement key = finite_normal_form(x, n_);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(std::move(key), coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

CycloScalar HeisAlgebraVector::coefficient(const HeisElement& canonical) const {
    auto it = terms_.find(canonical);
    return it == terms_.end() ? CycloScalar::zero(static_cast<int>(n_)) : it->second;
}

bool HeisAlgebraVector::operator==(const HeisAlgebraVector& rhs) const {
    if (n_ != rhs.n_ || g_ != rhs.g_) return false;
    // Supports are pruned, so compare term by term.
    if (terms_.size() != rhs.terms_.size()) return false;
    for (const auto& [key, val] : terms_) {
        auto it = rhs.terms_.find(key);
        if (it == rhs.terms_.end() || it->second != val) return false;
    }
    return true;
}

Lagrangian::Lagrangian(size_t g, IntMat generators)
    : g_(g), gens_(std::move(generators)) {
    if (gens_.rows() != g_ || gens_.cols() != 2 * g_) {
        throw DimensionMismatch("Lagrangian: generator matrix must be g x 2g");
    }
    for (size_t i = 0; i < g_; ++i) {
        std::vector<long> ri(2 * g_), rj(2 * g_);
        for (size_t c = 0; c < 2 * g_; ++c) ri[c] = gens_.at(i, c);
        for (size_t j = i; j < g_; ++j) {
            for (size_t c = 0; c < 2 * g_; ++c) rj[c] = gens_.at(j, c);
            if (symplectic_pairing(ri, rj) != 0) {
                throw NotIsotropic("Lagrangian generators are not isotropic");
            }
        }
    }
    auto divisors = gens_.smith_divisors();
    if (divisors.size() != g_ ||
        std::any_of(divisors.begin(), divisors.end(),
                    [](long d) { return d != 1; })) {
        throw NotPrimitive("Lagrangian is not a rank-g direct summand");
    }
    hnf_ = gens_.hermite_normal_form();
}

Lagrangian Lagrangian::standard(size_t g) {
    IntMat gens(g, 2 * g);
    for (size_t i = 0; i < g; ++i) gens.at(i, g + i) = 1;
    return Lagrangian(g, gens);
}

Lagrangian Lagrangian::transformed(const IntMat& h) const {
    if (h.rows() != 2 * g_ || h.cols() != 2 * g_) {
        throw DimensionMismatch("Lagrangian transform: bad matrix size");
    }
    IntMat gens(g_, 2 * g_);
    for (size_t i = 0; i < g_; ++i) {
        std::vector<long> row(2 * g_);
        for (size_t c = 0; c < 2 * g_; ++c) row[c] = gens_.at(i, c);
        std::vector<long> image = h.apply(row);
        for (size_t c = 0; c < 2 * g_; ++c) gens.at(i, c) = image[c];
    }
    return Lagrangian(g_, gens);
}

std::vector<std::vector<long>> Lagrangian::mod_points(long N) const {
    std::set<std::vector<long>> points;
    for (const auto& coeffs : zng_all(N, g_)) {
        std::vector<long> pt(2 * g_, 0);
        for (size_t i = 0; i < g_; ++i) {
            for (size_t c = 0; c < 2 * g_; ++c) {
                pt[c] += coeffs[i] * gens_.at(i, c);
            }
        }
        for (auto& v : pt) v = floor_mod(v, N);
        points.insert(std::move(pt));
    }
    return {points.begin(), points.end()};
}

std::map<std::vector<long>, HeisElement> Lagrangian::lift_points(long N) const {
    // The lattice element (s, 0) with s an integer combination of the
    // generators lies in the lift of L and carries character value 1.
    // Distinct combinations with the same mod-N reduction give the same
    // canonical element, because their difference lies in N L and the
    // pairing correction vanishes on L.
    std::map<std::vector<long>, HeisElement> out;
    for (const auto& coeffs : zng_all(N, g_)) {
        std::vector<long> s(2 * g_, 0);
        for (size_t i = 0; i < g_; ++i) {
            for (size_t c = 0; c < 2 * g_; ++c) {
                s[c] += coeffs[i] * gens_.at(i, c);
            }
        }
        const HeisElement lift = finite_normal_form(
            HeisElement{{s.begin(), s.begin() + g_}, {s.begin() + g_, s.end()}, 0},
            N);
        std::vector<long> key = lift.pq();
        auto [it, inserted] = out.emplace(std::move(key), lift);
        if (!inserted && !(it->second == lift)) {
            throw Error("lift_points: ambiguous lattice lift");
        }
    }
    return out;
}

size_t heis_element_index(const HeisElement& canonical, long N) {
    const size_t pidx = zng_index(canonical.p, N);
    const size_t qidx = zng_index(canonical.q, N);
    const size_t ng = zng_size(N, canonical.genus());
    return (pidx * ng + qidx) * static_cast<size_t>(2 * N) +
           static_cast<size_t>(canonical.k);
}

size_t InducedSpace::element_index(const HeisElement& canonical) const {
    return heis_element_index(canonical, N);
}

std::vector<CycloScalar> InducedSpace::project_element(const HeisElement& x) const {
    const HeisElement nf = finite_normal_form(x, N);
    const size_t col = element_index(nf);
    std::vector<CycloScalar> out(basis.size());
    for (size_t r = 0; r < basis.size(); ++r) out[r] = projection.at(r, col);
    return out;
}

InducedSpace induced_space(const Lagrangian& L, long N) {
    if (N <= 0 || N % 2 != 0) throw BadN("N must be a positive even integer");
    const size_t g = L.genus();
    const int Ni = static_cast<int>(N);
    const size_t ng = zng_size(N, g);
    const size_t total = ng * ng * static_cast<size_t>(2 * N);

    // Generators of the lift of L paired with their character exponents:
    // the lattice generators (l_i, 0) carry character 1 (exponent 0) no
    // matter what k their canonical form acquires; the center carries t.
    std::vector<std::pair<HeisElement, long>> gens;
    for (size_t i = 0; i < g; ++i) {
        HeisElement e = heis_identity(g);
        for (size_t c = 0; c < g; ++c) {
            e.p[c] = L.generators().at(i, c);
            e.q[c] = L.generators().at(i, g + c);
        }
        gens.emplace_back(finite_normal_form(e, N), 0);
        gens.emplace_back(finite_normal_form(heis_inverse(e), N), 0);
    }
    HeisElement center = heis_identity(g);
    center.k = 1;
    gens.emplace_back(center, 1);
    gens.emplace_back(finite_normal_form(heis_inverse(center), N), -1);

    InducedSpace space{N, g, L, total, {}, CycloMatrix(0, 0, Ni)};

    auto index_of = [&](const HeisElement& e) { return space.element_index(e); };
    auto element_of = [&](size_t idx) {
        HeisElement e = heis_identity(g);
        e.k = static_cast<long>(idx % static_cast<size_t>(2 * N));
        idx /= static_cast<size_t>(2 * N);
        e.q = zng_from_index(idx % ng, N, g);
        e.p = zng_from_index(idx / ng, N, g);
        return e;
    };

    std::vector<size_t> rep_of(total, total);
    std::vector<CycloScalar> scalar_of(total);
    std::vector<size_t> reps;

    for (size_t start = 0; start < total; ++start) {
        if (rep_of[start] != total) continue;
        const size_t rep_index = reps.size();
        reps.push_back(start);
        rep_of[start] = rep_index;
        scalar_of[start] = CycloScalar::one(Ni);
        std::deque<size_t> queue{start};
        size_t orbit = 1;
        while (!queue.empty()) {
            const size_t cur = queue.front();
            queue.pop_front();
            const HeisElement u = element_of(cur);
            for (const auto& [u1, chi_exp] : gens) {
                const HeisElement v = finite_normal_form(heis_mul(u, u1), N);
                const size_t vi = index_of(v);
                // pi(u u1) = chi(u1) pi(u).
                const CycloScalar sv = t_power(Ni, chi_exp) * scalar_of[cur];
                if (rep_of[vi] == total) {
                    rep_of[vi] = rep_index;
                    scalar_of[vi] = sv;
                    queue.push_back(vi);
                    ++orbit;
                } else if (rep_of[vi] != rep_index || scalar_of[vi] != sv) {
                    throw Error("induced_space: inconsistent orbit closure");
                }
            }
        }
        if (orbit != static_cast<size_t>(2 * N) * ng) {
            throw Error("induced_space: orbit is not a full coset");
        }
    }
    if (reps.size() != ng) {
        throw Error("induced_space: quotient dimension differs from N^g");
    }

    space.basis.reserve(reps.size());
    for (size_t r : reps) space.basis.push_back(element_of(r));
    space.projection = CycloMatrix(reps.size(), total, Ni);
    for (size_t idx = 0; idx < total; ++idx) {
        space.projection.at(rep_of[idx], idx) = scalar_of[idx];
    }
    return space;
}

CycloMatrix left_action_matrix(const InducedSpace& space, const HeisElement& x) {
    const size_t n = space.basis.size();
    CycloMatrix out(n, n, static_cast<int>(space.N));
    for (size_t j = 0; j < n; ++j) {
        auto col = space.project_element(heis_mul(x, space.basis[j]));
        for (size_t r = 0; r < n; ++r) out.at(r, j) = col[r];
    }
    return out;
}

CycloMatrix heis_operator_matrix(const std::vector<long>& p,
                                 const std::vector<long>& q, long k, long N) {
    if (p.size() != q.size()) throw DimensionMismatch("heis_operator_matrix");
    const size_t g = p.size();
    const int Ni = static_cast<int>(N);
    const size_t ng = zng_size(N, g);
    CycloMatrix out(ng, ng, Ni);
    const long pq = dot(p, q);
    for (size_t col = 0; col < ng; ++col) {
        const std::vector<long> mu = zng_from_index(col, N, g);
        std::vector<long> target(g);
        for (size_t i = 0; i < g; ++i) target[i] = mu[i] + p[i];
        const size_t row = zng_index(target, N);
        out.at(row, col) = t_power(Ni, k - pq - 2 * dot(mu, q));
    }
    return out;
}

CycloMatrix schrodinger_matrix(const HeisElement& x, long N) {
    return heis_operator_matrix(x.p, x.q, x.k, N);
}

namespace {

// Size of the intersection of the mod-N reductions; the subgroup index
// [lift(L) : lift(L) intersect lift(L')] equals N^g divided by it.
size_t mod_intersection_size(const Lagrangian& l, const Lagrangian& lp,
                             long N) {
    const auto a = l.mod_points(N);
    const auto other = lp.mod_points(N);
    const std::set<std::vector<long>> b(other.begin(), other.end());
    size_t count = 0;
    for (const auto& pt : a) {
        if (b.count(pt)) ++count;
    }
    return count;
}

}  // namespace

FourierPair fourier_matrix(const IntMat& h, const Lagrangian& L, long N) {
    require_symplectic(h);
    const size_t g = L.genus();
    if (h.rows() != 2 * g) throw DimensionMismatch("fourier_matrix: genus");
    if (!(L == Lagrangian::standard(g))) {
        throw Error("fourier_matrix expects the standard Lagrangian {(0,q)}");
    }
    const int Ni = static_cast<int>(N);
    const size_t ng = zng_size(N, g);

    const InducedSpace hl = induced_space(L, N);
    const Lagrangian Lp = L.transformed(h);
    const InducedSpace hlp = induced_space(Lp, N);

    const auto lifts = L.lift_points(N);
    const size_t inter = mod_intersection_size(L, Lp, N);
    const long index = static_cast<long>(ng / inter);

    // Coset sum of the induced spaces, taken over the full set of lattice
    // lifts of L (character value 1 each, so the chi^{-1} factors drop
    // out).  When the two characters agree on the intersection of the
    // lifts, the terms of each coset add up coherently and this is the
    // textbook coset-sum map.  When the mod-N reductions collide but the
    // lattices differ (e.g. the square of a twist), the characters
    // disagree on the excess intersection, the shift-free sum cancels to
    // zero, and the intertwiner is carried by a right-translated coset
    // instead; the first nonzero translate is taken.  Any nonzero
    // equivariant candidate is the transform up to scale.
    CycloMatrix f(ng, ng, Ni);
    bool have_f = false;
    for (size_t widx = 0; widx < ng * ng && !have_f; ++widx) {
        HeisElement w = heis_identity(g);
        w.p = zng_from_index(widx / ng, N, g);
        w.q = zng_from_index(widx % ng, N, g);
        CycloMatrix candidate(ng, ng, Ni);
        for (size_t j = 0; j < ng; ++j) {
            for (const auto& [pt, u1] : lifts) {
                auto col = hlp.project_element(
                    heis_mul(heis_mul(hl.basis[j], u1), w));
                for (size_t r = 0; r < ng; ++r) candidate.at(r, j) += col[r];
            }
        }
        for (size_t r = 0; r < ng * ng && !have_f; ++r) {
            if (!candidate.at(r / ng, r % ng).is_zero()) have_f = true;
        }
        if (have_f) f = std::move(candidate);
    }
    if (!have_f) {
        throw SingularFourier("coset sums vanished for every translate");
    }
    // Each coherent coset repeats its value once per intersection point;
    // dividing restores the per-coset sum, and the subgroup index gives
    // the unitary normalization.
    const CycloScalar norm =
        CycloScalar::from_rational(Ni, Rational(1, static_cast<long>(inter))) *
        cyclo_sqrt_of_integer(Ni, index).inverse();
    f = f.scaled(norm);

    // Identification induced by the automorphism (p,q,k) -> (h(p,q),k).
    CycloMatrix ident(ng, ng, Ni);
    for (size_t j = 0; j < ng; ++j) {
        const HeisElement& b = hl.basis[j];
        std::vector<long> image = h.apply(b.pq());
        HeisElement hb{std::vector<long>(image.begin(), image.begin() + g),
                       std::vector<long>(image.begin() + g, image.end()), b.k};
        auto col = hlp.project_element(hb);
        for (size_t r = 0; r < ng; ++r) ident.at(r, j) = col[r];
    }

    // Change of basis theta_mu -> pi_L[(mu,0,0)].
    CycloMatrix c(ng, ng, Ni);
    for (size_t j = 0; j < ng; ++j) {
        HeisElement e = heis_identity(g);
        e.p = zng_from_index(j, N, g);
        auto col = hl.project_element(e);
        for (size_t r = 0; r < ng; ++r) c.at(r, j) = col[r];
    }

    try {
        CycloMatrix composite = c.inverse() * (ident.inverse() * f) * c;
        FourierPair out;
        out.rho_inverse = composite;
        out.rho = composite.inverse();
        out.index = index;
        return out;
    } catch (const SingularMatrix&) {
        throw SingularFourier("discrete Fourier transform is not invertible");
    }
}

long egorov_residual_for(const CycloMatrix& rho, const IntMat& h, long N) {
    require_symplectic(h);
    const size_t g = h.rows() / 2;
    long failures = 0;
    for (size_t i = 0; i < 2 * g; ++i) {
        std::vector<long> gen(2 * g, 0);
        gen[i] = 1;
        const std::vector<long> image = h.apply(gen);
        const CycloMatrix lhs =
            heis_operator_matrix({image.begin(), image.begin() + g},
                                 {image.begin() + g, image.end()}, 0, N) *
            rho;
        const CycloMatrix rhs =
            rho * heis_operator_matrix({gen.begin(), gen.begin() + g},
                                       {gen.begin() + g, gen.end()}, 0, N);
        failures += static_cast<long>(lhs.count_differences(rhs));
    }
    return failures;
}

long egorov_residual(const IntMat& h, long N) {
    const size_t g = h.rows() / 2;
    const FourierPair fp = fourier_matrix(h, Lagrangian::standard(g), N);
    return egorov_residual_for(fp.rho, h, N);
}

}  // namespace thetaq
