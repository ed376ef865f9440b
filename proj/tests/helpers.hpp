#pragma once

#include <random>
#include <vector>

#include "thetaq/heisenberg.hpp"
#include "thetaq/matrix.hpp"
#include "thetaq/theta.hpp"
#include "thetaq/zmod.hpp"

namespace thetaq::testutil {

inline IntMat s_matrix_g1() {
    // a -> b, b -> -a
    IntMat h(2, 2);
    h.at(0, 0) = 0;
    h.at(0, 1) = -1;
    h.at(1, 0) = 1;
    h.at(1, 1) = 0;
    return h;
}

inline IntMat twist_b1(size_t g = 1) { return dehn_twist_matrix({0}, {1}, 1, g); }
inline IntMat twist_a1(size_t g = 1) { return dehn_twist_matrix({1}, {0}, 1, g); }

/// All canonical elements of the finite Heisenberg group, index order.
inline std::vector<HeisElement> all_canonical(long N, size_t g) {
    std::vector<HeisElement> out;
    const size_t ng = zng_size(N, g);
    for (size_t pi = 0; pi < ng; ++pi) {
        for (size_t qi = 0; qi < ng; ++qi) {
            for (long k = 0; k < 2 * N; ++k) {
                out.push_back(HeisElement{zng_from_index(pi, N, g),
                                          zng_from_index(qi, N, g), k});
            }
        }
    }
    return out;
}

/// Dimension of { X : X M(x) = M(x) X for the standard generators }.
inline size_t commutant_dimension(long N, size_t g) {
    const int Ni = static_cast<int>(N);
    const size_t n = zng_size(N, g);
    std::vector<CycloMatrix> gens;
    for (size_t i = 0; i < g; ++i) {
        std::vector<long> p(g, 0), q(g, 0);
        p[i] = 1;
        gens.push_back(heis_operator_matrix(p, q, 0, N));
        p[i] = 0;
        q[i] = 1;
        gens.push_back(heis_operator_matrix(p, q, 0, N));
    }
    CycloMatrix system(gens.size() * n * n, n * n, Ni);
    size_t row = 0;
    for (const auto& m : gens) {
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                for (size_t a = 0; a < n; ++a) {
                    for (size_t b = 0; b < n; ++b) {
                        CycloScalar coeff = CycloScalar::zero(Ni);
                        if (a == i) coeff += m.at(b, j);
                        if (b == j) coeff += -m.at(i, a);
                        system.at(row, a * n + b) = coeff;
                    }
                }
                ++row;
            }
        }
    }
    return n * n - system.rank();
}

/// Brute-force oracle for the induced-space dimension: rank of the full
/// relation system chi(u1) u - u u1 over every group element u and every
/// u1 in the lift of L, by dense row reduction.
inline size_t induced_dimension_by_row_reduction(const Lagrangian& L, long N) {
    const size_t g = L.genus();
    const int Ni = static_cast<int>(N);
    const auto elements = all_canonical(N, g);
    const size_t dim = elements.size();

    // Every element of the lift of L is a lattice lift (character 1)
    // times a central power (character t^k).
    std::vector<std::pair<HeisElement, long>> lift;
    for (const auto& [pt, base] : L.lift_points(N)) {
        for (long k = 0; k < 2 * N; ++k) {
            HeisElement u1 = base;
            u1.k = (u1.k + k) % (2 * N);
            lift.emplace_back(u1, k);
        }
    }
    CycloMatrix relations(dim * lift.size(), dim, Ni);
    size_t row = 0;
    for (const auto& u : elements) {
        for (const auto& [u1, chi_exp] : lift) {
            // chi(u1) u - u u1
            relations.at(row, heis_element_index(u, N)) += t_power(Ni, chi_exp);
            const HeisElement prod = finite_normal_form(heis_mul(u, u1), N);
            relations.at(row, heis_element_index(prod, N)) +=
                -CycloScalar::one(Ni);
            ++row;
        }
    }
    return dim - relations.rank();
}

inline CycloScalar random_small_scalar(int N, std::mt19937_64& rng,
                                       bool with_nexp = false) {
    std::vector<Rational> coeffs(2 * N, Rational(0));
    for (auto& c : coeffs) {
        const long num = static_cast<long>(rng() % 7) - 3;
        const long den = 1 + static_cast<long>(rng() % 3);
        c = Rational(num, den);
    }
    const long nexp2 = with_nexp ? 2 * (static_cast<long>(rng() % 3) - 1) : 0;
    return CycloScalar(N, std::move(coeffs), nexp2);
}

}  // namespace thetaq::testutil
