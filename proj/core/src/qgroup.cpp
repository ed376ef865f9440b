#include "thetaq/qgroup.hpp"

#include <array>

#include "thetaq/errors.hpp"

namespace thetaq {

namespace {

long floor_mod(long v, long m) {
    long r = v % m;
    return r < 0 ? r + m : r;
}

void require_even(long N) {
    if (N <= 0 || N % 2 != 0) throw BadN("N must be a positive even integer");
}

}  // namespace

GroupAlgebraElement::GroupAlgebraElement(long N)
    : n_(N), c_(2 * N, CycloScalar::zero(static_cast<int>(N))) {
    require_even(N);
}

GroupAlgebraElement GroupAlgebraElement::unit(long N) {
    return k_power(N, 0);
}

GroupAlgebraElement GroupAlgebraElement::k_power(long N, long j) {
    GroupAlgebraElement x(N);
    x.coeff(j) = CycloScalar::one(static_cast<int>(N));
    return x;
}

CycloScalar& GroupAlgebraElement::coeff(long j) {
    return c_[floor_mod(j, 2 * n_)];
}

const CycloScalar& GroupAlgebraElement::coeff(long j) const {
    return c_[floor_mod(j, 2 * n_)];
}

GroupAlgebraElement GroupAlgebraElement::operator+(
    const GroupAlgebraElement& rhs) const {
    if (n_ != rhs.n_) throw DimensionMismatch("GroupAlgebraElement add");
    GroupAlgebraElement out = *this;
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] += rhs.c_[i];
    return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(
    const GroupAlgebraElement& rhs) const {
    if (n_ != rhs.n_) throw DimensionMismatch("GroupAlgebraElement multiply");
    GroupAlgebraElement out(n_);
    const long m = 2 * n_;
    for (long i = 0; i < m; ++i) {
        if (c_[i].is_universal_zero() || c_[i].is_zero()) continue;
        for (long j = 0; j < m; ++j) {
            if (rhs.c_[j].is_universal_zero() || rhs.c_[j].is_zero()) continue;
            out.c_[(i + j) % m] += c_[i] * rhs.c_[j];
        }
    }
    return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const CycloScalar& s) const {
    GroupAlgebraElement out = *this;
    for (auto& c : out.c_) c *= s;
    return out;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& rhs) const {
    if (n_ != rhs.n_) return false;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != rhs.c_[i]) return false;
    }
    return true;
}

CycloScalar GroupAlgebraElement::act_on_irrep(long k) const {
    const int Ni = static_cast<int>(n_);
    CycloScalar acc = CycloScalar::zero(Ni);
    for (long j = 0; j < 2 * n_; ++j) {
        if (c_[j].is_zero()) continue;
        acc += c_[j] * t_power(Ni, j * k);
    }
    return acc;
}

TwoFoldTensor::TwoFoldTensor(long N)
    : n_(N), c_(static_cast<size_t>(2 * N) * static_cast<size_t>(2 * N),
                CycloScalar::zero(static_cast<int>(N))) {
    require_even(N);
}

TwoFoldTensor TwoFoldTensor::unit(long N) {
    TwoFoldTensor x(N);
    x.coeff(0, 0) = CycloScalar::one(static_cast<int>(N));
    return x;
}

TwoFoldTensor TwoFoldTensor::tensor(const GroupAlgebraElement& a,
                                    const GroupAlgebraElement& b) {
    if (a.order() != b.order()) throw DimensionMismatch("TwoFoldTensor::tensor");
    TwoFoldTensor x(a.order());
    const long m = 2 * a.order();
    for (long i = 0; i < m; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (long j = 0; j < m; ++j) {
            if (b.coeff(j).is_zero()) continue;
            x.coeff(i, j) = a.coeff(i) * b.coeff(j);
        }
    }
    return x;
}

CycloScalar& TwoFoldTensor::coeff(long j, long k) {
    const long m = 2 * n_;
    return c_[static_cast<size_t>(floor_mod(j, m)) * m + floor_mod(k, m)];
}

const CycloScalar& TwoFoldTensor::coeff(long j, long k) const {
    const long m = 2 * n_;
    return c_[static_cast<size_t>(floor_mod(j, m)) * m + floor_mod(k, m)];
}

TwoFoldTensor TwoFoldTensor::operator*(const TwoFoldTensor& rhs) const {
    if (n_ != rhs.n_) throw DimensionMismatch("TwoFoldTensor multiply");
    TwoFoldTensor out(n_);
    const long m = 2 * n_;
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < m; ++j) {
            const CycloScalar& a = coeff(i, j);
            if (a.is_zero()) continue;
            for (long k = 0; k < m; ++k) {
                for (long l = 0; l < m; ++l) {
                    const CycloScalar& b = rhs.coeff(k, l);
                    if (b.is_zero()) continue;
                    out.coeff(i + k, j + l) += a * b;
                }
            }
        }
    }
    return out;
}

TwoFoldTensor TwoFoldTensor::scaled(const CycloScalar& s) const {
    TwoFoldTensor out = *this;
    for (auto& c : out.c_) c *= s;
    return out;
}

bool TwoFoldTensor::operator==(const TwoFoldTensor& rhs) const {
    if (n_ != rhs.n_) return false;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != rhs.c_[i]) return false;
    }
    return true;
}

TwoFoldTensor TwoFoldTensor::flipped() const {
    TwoFoldTensor out(n_);
    const long m = 2 * n_;
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < m; ++j) out.coeff(j, i) = coeff(i, j);
    }
    return out;
}

TwoFoldTensor TwoFoldTensor::antipode_left() const {
    TwoFoldTensor out(n_);
    const long m = 2 * n_;
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < m; ++j) out.coeff(-i, j) = coeff(i, j);
    }
    return out;
}

ThreeFoldTensor::ThreeFoldTensor(long N)
    : n_(N), c_(static_cast<size_t>(2 * N) * (2 * N) * (2 * N),
                CycloScalar::zero(static_cast<int>(N))) {
    require_even(N);
}

CycloScalar& ThreeFoldTensor::coeff(long i, long j, long k) {
    const long m = 2 * n_;
    return c_[(static_cast<size_t>(floor_mod(i, m)) * m + floor_mod(j, m)) * m +
              floor_mod(k, m)];
}

const CycloScalar& ThreeFoldTensor::coeff(long i, long j, long k) const {
    const long m = 2 * n_;
    return c_[(static_cast<size_t>(floor_mod(i, m)) * m + floor_mod(j, m)) * m +
              floor_mod(k, m)];
}

ThreeFoldTensor ThreeFoldTensor::operator*(const ThreeFoldTensor& rhs) const {
    if (n_ != rhs.n_) throw DimensionMismatch("ThreeFoldTensor multiply");
    ThreeFoldTensor out(n_);
    const long m = 2 * n_;
    // Both operands are sparse embeddings; collect supports first.
    std::vector<std::array<long, 3>> sa, sb;
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < m; ++j) {
            for (long k = 0; k < m; ++k) {
                if (!coeff(i, j, k).is_zero()) sa.push_back({i, j, k});
                if (!rhs.coeff(i, j, k).is_zero()) sb.push_back({i, j, k});
            }
        }
    }
    for (const auto& a : sa) {
        const CycloScalar& ca = coeff(a[0], a[1], a[2]);
        for (const auto& b : sb) {
            out.coeff(a[0] + b[0], a[1] + b[1], a[2] + b[2]) +=
                ca * rhs.coeff(b[0], b[1], b[2]);
        }
    }
    return out;
}

bool ThreeFoldTensor::operator==(const ThreeFoldTensor& rhs) const {
    if (n_ != rhs.n_) return false;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != rhs.c_[i]) return false;
    }
    return true;
}

TwoFoldTensor coproduct(const GroupAlgebraElement& x) {
    TwoFoldTensor out(x.order());
    for (long j = 0; j < 2 * x.order(); ++j) {
        if (x.coeff(j).is_zero()) continue;
        out.coeff(j, j) = x.coeff(j);
    }
    return out;
}

GroupAlgebraElement antipode(const GroupAlgebraElement& x) {
    GroupAlgebraElement out(x.order());
    for (long j = 0; j < 2 * x.order(); ++j) {
        out.coeff(-j) += x.coeff(j);
    }
    return out;
}

CycloScalar counit(const GroupAlgebraElement& x) {
    CycloScalar acc = CycloScalar::zero(static_cast<int>(x.order()));
    for (long j = 0; j < 2 * x.order(); ++j) acc += x.coeff(j);
    return acc;
}

TwoFoldTensor r_matrix(long N) {
    require_even(N);
    const int Ni = static_cast<int>(N);
    TwoFoldTensor r(N);
    const CycloScalar norm =
        CycloScalar::from_rational(Ni, Rational(1, 2 * N));
    for (long j = 0; j < 2 * N; ++j) {
        for (long k = 0; k < 2 * N; ++k) {
            r.coeff(j, k) = norm * t_power(Ni, -j * k);
        }
    }
    return r;
}

CycloScalar gauss_sum(long N, int sign) {
    const int Ni = static_cast<int>(N);
    CycloScalar acc = CycloScalar::zero(Ni);
    for (long k = 0; k < N; ++k) {
        CycloScalar term = t_power(Ni, sign * k * k);
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

GroupAlgebraElement twist_element(long N) {
    require_even(N);
    const int Ni = static_cast<int>(N);
    const CycloScalar front =
        gauss_sum(N, +1) * CycloScalar::from_rational(Ni, Rational(1, N));
    GroupAlgebraElement v(N);
    for (long j = 0; j < N; ++j) {
        CycloScalar term = front * t_power(Ni, -j * j);
        v.coeff(2 * j + N) += (j % 2 == 0) ? term : -term;
    }
    return v;
}

GroupAlgebraElement twist_element_inverse(long N) {
    require_even(N);
    const int Ni = static_cast<int>(N);
    const CycloScalar front =
        gauss_sum(N, -1) * CycloScalar::from_rational(Ni, Rational(1, N));
    GroupAlgebraElement v(N);
    for (long j = 0; j < N; ++j) {
        CycloScalar term = front * t_power(Ni, j * j);
        v.coeff(2 * j + N) += (j % 2 == 0) ? term : -term;
    }
    return v;
}

ThreeFoldTensor embed_12(const TwoFoldTensor& x) {
    ThreeFoldTensor out(x.order());
    const long m = 2 * x.order();
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < m; ++j) {
            if (x.coeff(i, j).is_zero()) continue;
            out.coeff(i, j, 0) = x.coeff(i, j);
        }
    }
    return out;
}

ThreeFoldTensor embed_13(const TwoFoldTensor& x) {
    ThreeFoldTensor out(x.order());
    const long m = 2 * x.order();
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < m; ++j) {
            if (x.coeff(i, j).is_zero()) continue;
            out.coeff(i, 0, j) = x.coeff(i, j);
        }
    }
    return out;
}

ThreeFoldTensor embed_23(const TwoFoldTensor& x) {
    ThreeFoldTensor out(x.order());
    const long m = 2 * x.order();
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < m; ++j) {
            if (x.coeff(i, j).is_zero()) continue;
            out.coeff(0, i, j) = x.coeff(i, j);
        }
    }
    return out;
}

ThreeFoldTensor coproduct_left(const TwoFoldTensor& x) {
    ThreeFoldTensor out(x.order());
    const long m = 2 * x.order();
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < m; ++j) {
            if (x.coeff(i, j).is_zero()) continue;
            out.coeff(i, i, j) = x.coeff(i, j);
        }
    }
    return out;
}

ThreeFoldTensor coproduct_right(const TwoFoldTensor& x) {
    ThreeFoldTensor out(x.order());
    const long m = 2 * x.order();
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < m; ++j) {
            if (x.coeff(i, j).is_zero()) continue;
            out.coeff(i, j, j) = x.coeff(i, j);
        }
    }
    return out;
}

bool QGroupReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

QGroupReport verify_quasitriangular(long N) {
    require_even(N);
    QGroupReport report{N, {}};
    const TwoFoldTensor r = r_matrix(N);
    const TwoFoldTensor rinv = r.antipode_left();

    report.checks.push_back(
        {"R R^{-1} = 1 (x) 1", r * rinv == TwoFoldTensor::unit(N)});

    // Delta_op(K^j) = Delta(K^j): enough to check R Delta(a) = Delta(a) R
    // on the algebra basis.
    bool conj = true;
    for (long j = 0; j < 2 * N && conj; ++j) {
        const TwoFoldTensor d = coproduct(GroupAlgebraElement::k_power(N, j));
        conj = (r * d == d * r) && (d.flipped() == d);
    }
    report.checks.push_back({"Delta_op(a) = R Delta(a) R^{-1}", conj});

    report.checks.push_back(
        {"R13 R12 = (id (x) Delta)[R]",
         embed_13(r) * embed_12(r) == coproduct_right(r)});
    report.checks.push_back(
        {"R13 R23 = (Delta (x) id)[R]",
         embed_13(r) * embed_23(r) == coproduct_left(r)});
    return report;
}

QGroupReport verify_ribbon(long N) {
    require_even(N);
    const int Ni = static_cast<int>(N);
    QGroupReport report{N, {}};
    const GroupAlgebraElement v = twist_element(N);
    const GroupAlgebraElement vinv = twist_element_inverse(N);
    const TwoFoldTensor r = r_matrix(N);

    report.checks.push_back({"v v^{-1} = 1", v * vinv == GroupAlgebraElement::unit(N)});
    report.checks.push_back({"S(v) = v", antipode(v) == v});

    const TwoFoldTensor r2 = r.flipped() * r;
    TwoFoldTensor r2_closed(N);
    const CycloScalar norm = CycloScalar::from_rational(Ni, Rational(1, N));
    for (long j = 0; j < N; ++j) {
        for (long k = 0; k < N; ++k) {
            r2_closed.coeff(2 * j, 2 * k) = norm * t_power(Ni, -2 * j * k);
        }
    }
    report.checks.push_back({"R^2 matches its closed form", r2 == r2_closed});
    report.checks.push_back(
        {"Delta(v) = P(R) R (v (x) v)",
         coproduct(v) == r2 * TwoFoldTensor::tensor(v, v)});
    return report;
}

QGroupReport verify_hopf_axioms(long N) {
    require_even(N);
    QGroupReport report{N, {}};
    bool coassoc = true, counit_law = true, antipode_law = true;
    for (long j = 0; j < 2 * N; ++j) {
        const GroupAlgebraElement x = GroupAlgebraElement::k_power(N, j);
        const TwoFoldTensor d = coproduct(x);
        coassoc = coassoc && (coproduct_left(d) == coproduct_right(d));
        // (eps (x) id) Delta = id: the diagonal coproduct makes this the
        // statement eps(K^j) K^j = K^j.
        counit_law =
            counit_law && (x.scaled(counit(GroupAlgebraElement::k_power(N, j))) == x);
        // m (S (x) id) Delta = eps(.) 1.
        antipode_law = antipode_law &&
                       (antipode(x) * x ==
                        GroupAlgebraElement::unit(N).scaled(counit(x)));
    }
    report.checks.push_back({"coassociativity", coassoc});
    report.checks.push_back({"counit law", counit_law});
    report.checks.push_back({"antipode law", antipode_law});
    return report;
}

QGroupReport verify_representation_scalars(long N) {
    require_even(N);
    const int Ni = static_cast<int>(N);
    QGroupReport report{N, {}};
    const TwoFoldTensor r = r_matrix(N);
    bool r_scalar = true;
    for (long m = 0; m < 2 * N && r_scalar; ++m) {
        for (long n = 0; n < 2 * N && r_scalar; ++n) {
            CycloScalar acc = CycloScalar::zero(Ni);
            for (long j = 0; j < 2 * N; ++j) {
                for (long k = 0; k < 2 * N; ++k) {
                    if (r.coeff(j, k).is_zero()) continue;
                    acc += r.coeff(j, k) * t_power(Ni, m * j + n * k);
                }
            }
            r_scalar = acc == t_power(Ni, m * n);
        }
    }
    report.checks.push_back({"R acts on V^m (x) V^n by t^{mn}", r_scalar});

    const GroupAlgebraElement v = twist_element(N);
    bool v_scalar = true;
    for (long k = 0; k < 2 * N && v_scalar; ++k) {
        v_scalar = v.act_on_irrep(k) == t_power(Ni, k * k);
    }
    report.checks.push_back({"v acts on V^k by t^{k^2}", v_scalar});
    return report;
}

}  // namespace thetaq
