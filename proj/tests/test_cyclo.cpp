#include <doctest.h>

#include <complex>
#include <random>

#include "helpers.hpp"
#include "thetaq/cyclo.hpp"

using namespace thetaq;

TEST_CASE("t powers reduce mod 2N") {
    CHECK(t_power(2, 0) == CycloScalar::one(2));
    CHECK(t_power(2, 2) == -CycloScalar::one(2));  // t^2 = e^{i pi} at N=2
    CHECK(t_power(4, 9) == t_power(4, 1));
    CHECK(t_power(4, -1) == t_power(4, 7));
}

TEST_CASE("power sums of roots of unity vanish") {
    for (int N : {2, 4, 6}) {
        for (long m = 1; m < 2 * N; ++m) {
            CycloScalar sum = CycloScalar::zero(N);
            for (long j = 0; j < 2 * N; ++j) sum += t_power(N, j * m);
            CHECK(sum.is_zero());
        }
        CycloScalar full = CycloScalar::zero(N);
        for (long j = 0; j < 2 * N; ++j) full += t_power(N, j * 2 * N);
        CHECK(full == CycloScalar::from_rational(N, Rational(2 * N)));
    }
}

TEST_CASE("additive structure") {
    CHECK((t_power(2, 1) + (-t_power(2, 1))).is_zero());
    CycloScalar doubled = t_power(2, 1) + t_power(2, 1);
    CHECK(doubled == CycloScalar::from_rational(2, Rational(2)) * t_power(2, 1));
}

TEST_CASE("multiplication examples") {
    CHECK(t_power(2, 1) * t_power(2, 1) == -CycloScalar::one(2));
    CHECK(CycloScalar::n_power(2, -1) * CycloScalar::n_power(2, -1) ==
          CycloScalar::from_rational(2, Rational(1, 2)));
    CHECK(t_power(4, 3) * t_power(4, 6) == t_power(4, 1));
}

TEST_CASE("conjugation") {
    CHECK(t_power(2, 1).conjugate() == t_power(2, 3));
    CHECK(CycloScalar::one(4).conjugate() == CycloScalar::one(4));
    CycloScalar x = CycloScalar::one(2) + t_power(2, 1);
    CHECK(x.conjugate() == CycloScalar::one(2) + t_power(2, 3));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        CycloScalar a = testutil::random_small_scalar(4, rng, true);
        CHECK(a.conjugate().conjugate() == a);
    }
}

TEST_CASE("floating backend") {
    auto z = t_power(2, 1).to_complex();
    CHECK(std::abs(z - std::complex<double>(0, 1)) < 1e-15);
    CHECK(std::abs(CycloScalar().to_complex()) == 0.0);
    CHECK(std::abs(CycloScalar::n_power(2, 1).to_complex().real() -
                   1.4142135623730951) < 1e-15);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        CycloScalar a = testutil::random_small_scalar(6, rng, true);
        CycloScalar b = testutil::random_small_scalar(6, rng, true);
        CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) <
              1e-12);
    }
}

TEST_CASE("ring axioms on random scalars") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        CycloScalar a = testutil::random_small_scalar(4, rng);
        CycloScalar b = testutil::random_small_scalar(4, rng);
        CycloScalar c = testutil::random_small_scalar(4, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("equality is a congruence") {
    // Representations differing by a multiple of the cyclotomic polynomial
    // and by an N-rescaling are the same scalar.
    const auto phi = cyclotomic_polynomial(8);  // N = 4
    std::vector<Rational> lifted(8, Rational(0));
    for (size_t i = 0; i < phi.size(); ++i) lifted[i] = phi[i];
    CycloScalar zero_rep(4, lifted, 0);
    CHECK(zero_rep.is_zero());

    CycloScalar a = t_power(4, 1) + zero_rep;
    CHECK(a == t_power(4, 1));

    std::vector<Rational> scaled(8, Rational(0));
    scaled[2] = Rational(4);
    CycloScalar b(4, scaled, -2);  // 4 t^2 N^{-1} = t^2
    CHECK(b == t_power(4, 2));

    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        CycloScalar c = testutil::random_small_scalar(4, rng);
        CHECK(a * c == t_power(4, 1) * c);
        CHECK(a + c == t_power(4, 1) + c);
    }
}

TEST_CASE("incommensurable N-exponents are refused") {
    CycloScalar a = CycloScalar::one(2);
    CycloScalar b = CycloScalar::n_power(2, 1);
    CHECK_THROWS_AS(a + b, IncommensurableNExp);
    CHECK_THROWS_AS(a == b, IncommensurableNExp);
    // A zero side is absorbed regardless of its exponent.
    CHECK(CycloScalar::zero(2) + b == b);
    CHECK((CycloScalar::n_power(2, 1) - CycloScalar::n_power(2, 1)).is_zero());
}

TEST_CASE("mixed rings are refused") {
    CHECK_THROWS_AS(t_power(2, 1) + t_power(4, 1), DimensionMismatch);
}

TEST_CASE("inverse") {
    std::mt19937_64 rng(13);
    for (int N : {2, 4, 6}) {
        for (int i = 0; i < 10; ++i) {
            CycloScalar a = testutil::random_small_scalar(N, rng, true);
            if (a.is_zero()) continue;
            CHECK(a * a.inverse() == CycloScalar::one(N));
        }
    }
    CHECK_THROWS_AS(CycloScalar::zero(2).inverse(), DivisionByZero);
}

TEST_CASE("square roots of integers") {
    // N = 2: sqrt(2) is the N-exponent itself.
    CycloScalar r2 = cyclo_sqrt_of_integer(2, 2);
    CHECK(r2 == CycloScalar::n_power(2, 1));
    // N = 4: sqrt(2) = t + t^{-1} inside the ring, sqrt(4) = 2 rational.
    CycloScalar r2_4 = cyclo_sqrt_of_integer(4, 2);
    CHECK(r2_4 == t_power(4, 1) + t_power(4, 7));
    CHECK(cyclo_sqrt_of_integer(4, 4) == CycloScalar::from_rational(4, Rational(2)));
    for (int N : {2, 4, 6, 8}) {
        for (long d : {1L, 2L, 3L, 4L, 6L, 8L, 9L, 12L}) {
            if (d % 3 == 0 && N % 3 != 0) continue;  // sqrt(3) needs 3 | N
            CycloScalar s = cyclo_sqrt_of_integer(N, d);
            CHECK(s * s == CycloScalar::from_rational(N, Rational(d)));
            CHECK(s.to_complex().real() > 0);
        }
    }
}

TEST_CASE("canonical text form") {
    CHECK(CycloScalar::zero(2).to_text() == "0");
    CHECK(CycloScalar::one(2).to_text() == "N^{0} * (1)");
    CHECK(t_power(2, 1).to_text() == "N^{0} * (t)");
    CHECK(CycloScalar::n_power(2, -1).to_text() == "N^{-1/2} * (1)");
    CycloScalar x = CycloScalar::from_rational(4, Rational(1, 2)) +
                    CycloScalar::from_rational(4, Rational(3)) * t_power(4, 2);
    CHECK(x.to_text() == "N^{0} * (1/2 + 3 t^2)");
    // Content normalization moves plain N factors into the exponent.
    CycloScalar y = CycloScalar::from_rational(2, Rational(2)) * t_power(2, 1);
    CHECK(y.to_text() == "N^{1} * (t)");
}
