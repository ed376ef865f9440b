#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "thetaq/theta_numeric.hpp"

using namespace thetaq;

namespace {

PeriodMatrix pi_i() { return PeriodMatrix(1, {Complex(0.0, 1.0)}); }

// Independent oracle: same partial sum with reversed loop order and
// compensated (Kahan) accumulation, term exponent assembled differently.
Complex theta_oracle(const std::vector<long>& mu, long N, const PeriodMatrix& Pi,
                     long M, const std::vector<Complex>& z) {
    const size_t g = Pi.genus();
    Complex sum(0.0, 0.0), comp(0.0, 0.0);
    std::vector<long> n(g, M);
    bool more = true;
    while (more) {
        std::vector<Complex> v(g);
        for (size_t i = 0; i < g; ++i) {
            v[i] = Complex(static_cast<double>(mu[i]) / static_cast<double>(N) +
                               static_cast<double>(n[i]),
                           0.0);
        }
        Complex phase(0.0, 0.0);
        for (size_t r = 0; r < g; ++r) {
            Complex row(0.0, 0.0);
            for (size_t c = 0; c < g; ++c) row += Pi.at(r, c) * v[c];
            phase += v[r] * (0.5 * row + z[r]);
        }
        const Complex term =
            std::exp(Complex(0.0, 2.0 * std::numbers::pi * N) * phase);
        const Complex y = term - comp;
        const Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        // countdown iteration
        more = false;
        for (size_t i = g; i-- > 0;) {
            if (n[i] > -M) {
                --n[i];
                for (size_t j = i + 1; j < g; ++j) n[j] = M;
                more = true;
                break;
            }

        }
    }
    return sum;
}

}  // namespace

TEST_CASE("period matrix validation") {
    CHECK_THROWS_AS(PeriodMatrix(2, {Complex(0, 1), Complex(1, 0), Complex(0, 0),
                                     Complex(0, 1)}),
                    NonSymmetric);
    CHECK_THROWS_AS(PeriodMatrix(1, {Complex(0.5, -1.0)}), NotPositiveDefinite);
    CHECK_THROWS_AS(PeriodMatrix(2, {Complex(0, 1), Complex(0, 2), Complex(0, 2),
                                     Complex(0, 1)}),
                    NotPositiveDefinite);
    CHECK_NOTHROW(PeriodMatrix(2, {Complex(0.3, 2), Complex(0.1, 0.5),
                                   Complex(0.1, 0.5), Complex(-0.2, 1)}));
}

TEST_CASE("theta series partial sum at the square lattice point") {
    const TruncatedThetaSeries s{{0}, 2, pi_i(), 10};
    const Complex v = theta_eval(s, {Complex(0.0, 0.0)});
    // sum_n e^{-2 pi n^2} = 1.00373488548773909...
    CHECK(std::abs(v - Complex(1.0037348854877391, 0.0)) < 1e-12);
    CHECK(std::abs(v.imag()) < 1e-14);
}

TEST_CASE("theta series agrees with the independent summation oracle") {
    std::mt19937_64 rng(2718);
    auto urand = [&rng]() {
        return static_cast<double>(rng() % 10000) / 10000.0 - 0.5;
    };
    for (int trial = 0; trial < 10; ++trial) {
        const std::vector<long> mu{static_cast<long>(rng() % 2)};
        const TruncatedThetaSeries s{mu, 2, pi_i(), 8};
        const std::vector<Complex> z{Complex(urand(), urand() * 0.3)};
        CHECK(std::abs(theta_eval(s, z) - theta_oracle(mu, 2, pi_i(), 8, z)) <
              1e-12);
    }
    // Genus 2 as well.
    const PeriodMatrix pi2(2, {Complex(0.1, 1.0), Complex(0.0, 0.2),
                               Complex(0.0, 0.2), Complex(-0.3, 0.8)});
    const TruncatedThetaSeries s2{{1, 0}, 2, pi2, 5};
    const std::vector<Complex> z2{Complex(0.2, 0.1), Complex(-0.1, 0.05)};
    CHECK(std::abs(theta_eval(s2, z2) - theta_oracle({1, 0}, 2, pi2, 5, z2)) <
          1e-12);
}

TEST_CASE("index shift mu -> mu + N matches after enlarging the window") {
    const std::vector<Complex> z{Complex(0.17, 0.21)};
    const TruncatedThetaSeries lo{{0}, 2, pi_i(), 11};
    const TruncatedThetaSeries hi{{2}, 2, pi_i(), 12};
    CHECK(std::abs(theta_eval(lo, z) - theta_eval(hi, z)) < 1e-12);
}

TEST_CASE("truncation tail is negligible at M=10") {
    const std::vector<Complex> z{Complex(0.0, 0.0)};
    const TruncatedThetaSeries m10{{0}, 2, pi_i(), 10};
    const TruncatedThetaSeries m12{{0}, 2, pi_i(), 12};
    CHECK(std::abs(theta_eval(m10, z) - theta_eval(m12, z)) < 1e-200);
}

TEST_CASE("periodicity residuals") {
    const std::vector<Complex> z{Complex(0.3, 0.2)};
    const TruncatedThetaSeries s{{0}, 2, pi_i(), 12};
    CHECK(periodicity_residual(s, z, 1) < 1e-10);
    CHECK(periodicity_residual(s, z, 2) < 1e-8);
    // A crude truncation is visibly worse.
    const TruncatedThetaSeries crude{{0}, 2, pi_i(), 2};
    CHECK(periodicity_residual(crude, z, 2) >
          1e3 * periodicity_residual(s, z, 2));
    CHECK_THROWS_AS(periodicity_residual(s, z, 3), Error);
}

TEST_CASE("residuals shrink as the window grows") {
    const std::vector<Complex> z{Complex(0.4, 0.1)};
    double prev = 1e300;
    for (long M : {2L, 4L, 6L, 8L}) {
        const TruncatedThetaSeries s{{1}, 2, pi_i(), M};
        const double r = periodicity_residual(s, z, 2);
        CHECK(r < prev + 1e-12);
        prev = r;
    }
}

TEST_CASE("quadrature Gram is close to the identity") {
    for (long N : {2L, 4L}) {
        const auto gram = gram_quadrature(N, 1, pi_i(), 10, 64);
        CHECK(gram_identity_error(gram, static_cast<size_t>(N)) < 1e-6);
        // Hermitian within rounding, diagonal real positive.
        for (long a = 0; a < N; ++a) {
            CHECK(gram[a * N + a].real() > 0);
            for (long b = 0; b < N; ++b) {
                CHECK(std::abs(gram[a * N + b] - std::conj(gram[b * N + a])) <
                      1e-12);
            }
        }
    }
}

TEST_CASE("quadrature needs a minimal resolution") {
    CHECK_THROWS_AS(gram_quadrature(2, 1, pi_i(), 10, 2), Error);
}
