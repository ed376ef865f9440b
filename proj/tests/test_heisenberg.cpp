#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "thetaq/heisenberg.hpp"
#include "thetaq/theta.hpp"
#include "thetaq/zmod.hpp"

using namespace thetaq;
using namespace thetaq::testutil;

TEST_CASE("group law") {
    HeisElement a{{1}, {0}, 0}, b{{0}, {1}, 0};
    CHECK(heis_mul(a, b) == HeisElement{{1}, {1}, 1});
    CHECK(heis_mul(b, a) == HeisElement{{1}, {1}, -1});
    HeisElement x{{3}, {-2}, 5};
    CHECK(heis_mul(heis_identity(1), x) == x);
    CHECK(heis_mul(x, heis_identity(1)) == x);
    CHECK(heis_mul(x, heis_inverse(x)) == heis_identity(1));
    CHECK_THROWS_AS(heis_mul(a, HeisElement{{1, 0}, {0, 0}, 0}),
                    DimensionMismatch);
}

TEST_CASE("group law is associative (exhaustive at N=2, g=1)") {
    const auto elements = all_canonical(2, 1);
    for (const auto& x : elements) {
        for (const auto& y : elements) {
            for (const auto& z : elements) {
                CHECK(heis_mul(heis_mul(x, y), z) == heis_mul(x, heis_mul(y, z)));
            }
        }
    }
}

TEST_CASE("every canonical element has an inverse") {
    for (const auto& x : all_canonical(2, 1)) {
        CHECK(finite_normal_form(heis_mul(x, heis_inverse(x)), 2) ==
              heis_identity(1));
        CHECK(finite_normal_form(heis_mul(heis_inverse(x), x), 2) ==
              heis_identity(1));
    }
}

TEST_CASE("finite normal form") {
    CHECK(finite_normal_form(HeisElement{{2}, {0}, 0}, 2) ==
          HeisElement{{0}, {0}, 0});
    CHECK(finite_normal_form(HeisElement{{0}, {0}, 4}, 2) ==
          HeisElement{{0}, {0}, 0});
    // Reducing p = 3 by N = 2 against q = 1 shifts k by -2.
    CHECK(finite_normal_form(HeisElement{{3}, {1}, 0}, 2) ==
          HeisElement{{1}, {1}, 2});
}

TEST_CASE("normal form is a congruence and the quotient has order 2N^{2g+1}") {
    const long N = 2;
    std::set<HeisElement> canonical;
    for (long p = -3; p <= 4; ++p) {
        for (long q = -3; q <= 4; ++q) {
            for (long k = -5; k <= 6; ++k) {
                canonical.insert(finite_normal_form(HeisElement{{p}, {q}, k}, N));
            }
        }
    }
    CHECK(canonical.size() == 16);  // 2 N^{2g+1}
    const auto elements = all_canonical(N, 1);
    for (const auto& x : elements) {
        for (const auto& y : elements) {
            const HeisElement lhs = finite_normal_form(heis_mul(x, y), N);
            const HeisElement rhs = finite_normal_form(
                heis_mul(finite_normal_form(x, N), finite_normal_form(y, N)), N);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Schroedinger matrices of the generators at N=2") {
    const CycloMatrix shift = schrodinger_matrix(HeisElement{{1}, {0}, 0}, 2);
    CHECK(shift.at(1, 0) == CycloScalar::one(2));
    CHECK(shift.at(0, 1) == CycloScalar::one(2));
    CHECK(shift.at(0, 0).is_zero());
    CHECK(shift.at(1, 1).is_zero());

    const CycloMatrix mult = schrodinger_matrix(HeisElement{{0}, {1}, 0}, 2);
    CHECK(mult.at(0, 0) == CycloScalar::one(2));
    CHECK(mult.at(1, 1) == -CycloScalar::one(2));  // t^{-2} = -1
    CHECK(mult.at(0, 1).is_zero());

    const CycloMatrix central = schrodinger_matrix(HeisElement{{0}, {0}, 1}, 2);
    CHECK(central == CycloMatrix::identity(2, 2).scaled(t_power(2, 1)));
}

TEST_CASE("Schroedinger representation is multiplicative") {
    // All pairs drawn from the doubled box (p, q, k in [0,4)) at N=2, g=1:
    // 64 x 64 = 4096 pairs, exercising the normal form as well.
    const long N = 2;
    std::vector<HeisElement> box;
    for (long p = 0; p < 4; ++p) {
        for (long q = 0; q < 4; ++q) {
            for (long k = 0; k < 4; ++k) box.push_back(HeisElement{{p}, {q}, k});
        }
    }
    REQUIRE(box.size() == 64);
    for (const auto& x : box) {
        for (const auto& y : box) {
            const CycloMatrix lhs =
                schrodinger_matrix(finite_normal_form(x, N), N) *
                schrodinger_matrix(finite_normal_form(y, N), N);
            const CycloMatrix rhs =
                schrodinger_matrix(finite_normal_form(heis_mul(x, y), N), N);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("irreducibility: the commutant is one dimensional") {
    CHECK(commutant_dimension(2, 1) == 1);
    CHECK(commutant_dimension(4, 1) == 1);
}

TEST_CASE("Lagrangian validation") {
    CHECK_THROWS_AS(Lagrangian(1, [] {
        IntMat m(1, 3);
        return m;
    }()), DimensionMismatch);
    {
        // (1,0) and (0,1) pair to 1: not isotropic.
        IntMat m(2, 4);
        m.at(0, 0) = 1;
        m.at(1, 2) = 1;
        CHECK_THROWS_AS(Lagrangian(2, m), NotIsotropic);
    }
    {
        // (2,0): not a direct summand.
        IntMat m(1, 2);
        m.at(0, 0) = 2;
        CHECK_THROWS_AS(Lagrangian(1, m), NotPrimitive);
    }
    // Hermite forms identify equal submodules.
    IntMat m1(1, 2), m2(1, 2);
    m1.at(0, 1) = 1;
    m2.at(0, 1) = -1;
    CHECK(Lagrangian(1, m1) == Lagrangian(1, m2));
    CHECK(Lagrangian(1, m1) == Lagrangian::standard(1));
}

TEST_CASE("induced space dimensions equal N^g") {
    // Standard and two rotated Lagrangians at g=1.
    const Lagrangian l_std = Lagrangian::standard(1);
    IntMat ga(1, 2);
    ga.at(0, 0) = 1;
    const Lagrangian l_a(1, ga);
    IntMat gd(1, 2);
    gd.at(0, 0) = 1;
    gd.at(0, 1) = 1;
    const Lagrangian l_diag(1, gd);

    for (const Lagrangian& l : {l_std, l_a, l_diag}) {
        const InducedSpace space = induced_space(l, 2);
        CHECK(space.basis.size() == 2);
        CHECK(space.ambient_dim == 16);
        CHECK(induced_dimension_by_row_reduction(l, 2) == 2);
    }

    // Genus 2, standard Lagrangian: ambient dimension 64, quotient 4.
    const InducedSpace space2 = induced_space(Lagrangian::standard(2), 2);
    CHECK(space2.basis.size() == 4);
    CHECK(space2.ambient_dim == 64);
    CHECK(induced_dimension_by_row_reduction(Lagrangian::standard(2), 2) == 4);
}

TEST_CASE("projection satisfies the defining relations") {
    // Both for the standard Lagrangian and for one whose lattice lifts
    // acquire canonical-form corrections.
    IntMat diag_gens(1, 2);
    diag_gens.at(0, 0) = -1;
    diag_gens.at(0, 1) = 1;
    for (const Lagrangian& l : {Lagrangian::standard(1), Lagrangian(1, diag_gens)}) {
        for (int N : {2, 4}) {
            const InducedSpace space = induced_space(l, N);
            std::vector<std::pair<HeisElement, long>> lift;
            for (const auto& [pt, base] : l.lift_points(N)) {
                for (long k = 0; k < 2 * N; ++k) {
                    HeisElement u1 = base;
                    u1.k = (u1.k + k) % (2 * N);
                    lift.emplace_back(u1, k);
                }
            }
            for (const auto& u : all_canonical(N, 1)) {
                const auto pu = space.project_element(u);
                for (const auto& [u1, chi_exp] : lift) {
                    const auto prod = space.project_element(heis_mul(u, u1));
                    for (size_t r = 0; r < pu.size(); ++r) {
                        CHECK(prod[r] == t_power(N, chi_exp) * pu[r]);
                    }
                }
            }
        }
    }
}

TEST_CASE("theta basis map intertwines the representations") {
    // theta_mu -> pi_L[(mu,0,0)] carries the Schroedinger action to the
    // left regular action, exactly, on the generators.
    for (long N : {2L, 4L}) {
        const InducedSpace space = induced_space(Lagrangian::standard(1), N);
        CycloMatrix c(space.basis.size(), space.basis.size(),
                      static_cast<int>(N));
        for (size_t j = 0; j < space.basis.size(); ++j) {
            HeisElement e = heis_identity(1);
            e.p = zng_from_index(j, N, 1);
            const auto col = space.project_element(e);
            for (size_t r = 0; r < col.size(); ++r) c.at(r, j) = col[r];
        }
        for (const HeisElement& gen :
             {HeisElement{{1}, {0}, 0}, HeisElement{{0}, {1}, 0},
              HeisElement{{0}, {0}, 1}}) {
            CHECK(left_action_matrix(space, gen) * c ==
                  c * schrodinger_matrix(gen, N));
        }
    }
}

TEST_CASE("discrete Fourier transform of the S move") {
    const FourierPair fp = fourier_matrix(s_matrix_g1(), Lagrangian::standard(1), 2);
    CHECK(fp.index == 2);
    // Exactly N^{-1/2} [[1,1],[1,-1]].
    const CycloScalar s = CycloScalar::n_power(2, -1);
    CycloMatrix expect(2, 2, 2);
    expect.at(0, 0) = s;
    expect.at(0, 1) = s;
    expect.at(1, 0) = s;
    expect.at(1, 1) = -s;
    CHECK(fp.rho == expect);
    CHECK(fp.rho_inverse == expect);  // the Hadamard is self inverse here
    CHECK(egorov_residual(s_matrix_g1(), 2) == 0);
}

TEST_CASE("discrete Fourier transform of the b-twist is diagonal") {
    for (long N : {2L, 4L}) {
        const FourierPair fp =
            fourier_matrix(twist_b1(), Lagrangian::standard(1), N);
        CHECK(fp.index == 1);
        // rho(T_b)^{-1} = diag(t^{mu^2}) up to scale; rho = diag(t^{-mu^2}).
        CycloMatrix expect(static_cast<size_t>(N), static_cast<size_t>(N),
                           static_cast<int>(N));
        for (long mu = 0; mu < N; ++mu) {
            expect.at(mu, mu) = t_power(static_cast<int>(N), -mu * mu);
        }
        CHECK(projectively_equal(fp.rho, expect));
        CHECK(egorov_residual(twist_b1(), N) == 0);
    }
}

TEST_CASE("identity mapping class gives the identity transform") {
    const FourierPair fp =
        fourier_matrix(IntMat::identity(2), Lagrangian::standard(1), 4);
    CHECK(projectively_equal(fp.rho, CycloMatrix::identity(4, 4)));
    CHECK(fp.index == 1);
}

TEST_CASE("Egorov identity for twist products") {
    CHECK(egorov_residual(twist_a1(), 2) == 0);
    CHECK(egorov_residual(twist_a1() * twist_b1(), 2) == 0);
    CHECK(egorov_residual(s_matrix_g1() * twist_b1(), 4) == 0);
}

TEST_CASE("Fourier transform is projectively multiplicative") {
    const Lagrangian l = Lagrangian::standard(1);
    for (long N : {2L, 4L}) {
        const std::vector<IntMat> words = {twist_a1(), twist_b1(),
                                           s_matrix_g1()};
        for (const auto& h1 : words) {
            for (const auto& h2 : words) {
                const CycloMatrix lhs = fourier_matrix(h1 * h2, l, N).rho;
                const CycloMatrix rhs =
                    fourier_matrix(h1, l, N).rho * fourier_matrix(h2, l, N).rho;
                CHECK(projectively_equal(lhs, rhs));
            }
        }
    }
}

TEST_CASE("fourier_matrix rejects bad input") {
    IntMat not_symplectic(2, 2);
    not_symplectic.at(0, 0) = 2;
    not_symplectic.at(1, 1) = 1;
    CHECK_THROWS_AS(fourier_matrix(not_symplectic, Lagrangian::standard(1), 2),
                    NotSymplectic);
    IntMat ga(1, 2);
    ga.at(0, 0) = 1;
    CHECK_THROWS_AS(fourier_matrix(s_matrix_g1(), Lagrangian(1, ga), 2), Error);
}

TEST_CASE("algebra vectors prune zero terms") {
    HeisAlgebraVector v(2, 1);
    v.add_term(HeisElement{{1}, {0}, 0}, CycloScalar::one(2));
    v.add_term(HeisElement{{3}, {0}, 0}, CycloScalar::one(2));  // nf = (1,0,0)
    CHECK(v.terms().size() == 1);
    CHECK(v.coefficient(HeisElement{{1}, {0}, 0}) ==
          CycloScalar::from_rational(2, Rational(2)));
    v.add_term(HeisElement{{1}, {0}, 0},
               CycloScalar::from_rational(2, Rational(-2)));
    CHECK(v.terms().empty());
}
