#include "thetaq/theta_numeric.hpp"

#include <cmath>
#include <numbers>

#include "thetaq/zmod.hpp"

namespace thetaq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Iterate n over [-M, M]^g.
bool advance(std::vector<long>& n, long M) {
    for (size_t i = n.size(); i-- > 0;) {
        if (n[i] < M) {
            ++n[i];
            for (size_t j = i + 1; j < n.size(); ++j) n[j] = -M;
            return true;
        }
    }
    return false;
}

}  // namespace

PeriodMatrix::PeriodMatrix(size_t g, std::vector<Complex> entries)
    : g_(g), pi_(std::move(entries)) {
    if (pi_.size() != g_ * g_) {
        throw DimensionMismatch("PeriodMatrix: needs g x g entries");
    }
    for (size_t r = 0; r < g_; ++r) {
        for (size_t c = r + 1; c < g_; ++c) {
            if (at(r, c) != at(c, r)) {
                throw NonSymmetric("period matrix must be symmetric");
            }
        }
    }
    // Cholesky of the imaginary part.
    std::vector<double> im(g_ * g_);
    for (size_t i = 0; i < g_ * g_; ++i) im[i] = pi_[i].imag();
    for (size_t k = 0; k < g_; ++k) {
        double pivot = im[k * g_ + k];
        for (size_t j = 0; j < k; ++j) {
            pivot -= im[k * g_ + j] * im[k * g_ + j];
        }
        if (!(pivot > 0.0)) {
            throw NotPositiveDefinite(
                "imaginary part of the period matrix must be positive definite");
        }
        const double root = std::sqrt(pivot);
        im[k * g_ + k] = root;
        for (size_t i = k + 1; i < g_; ++i) {
            double v = im[i * g_ + k];
            for (size_t j = 0; j < k; ++j) {
                v -= im[i * g_ + j] * im[k * g_ + j];
            }
            im[i * g_ + k] = v / root;
        }
    }
}

std::vector<Complex> PeriodMatrix::column(size_t j) const {
    std::vector<Complex> out(g_);
    for (size_t r = 0; r < g_; ++r) out[r] = at(r, j);
    return out;
}

double PeriodMatrix::imag_determinant() const {
    std::vector<double> im(g_ * g_);
    for (size_t i = 0; i < g_ * g_; ++i) im[i] = pi_[i].imag();
    double det = 1.0;
    for (size_t k = 0; k < g_; ++k) {
        size_t pivot = k;
        for (size_t r = k + 1; r < g_; ++r) {
            if (std::abs(im[r * g_ + k]) > std::abs(im[pivot * g_ + k])) pivot = r;
        }
        if (pivot != k) {
            for (size_t c = 0; c < g_; ++c) std::swap(im[k * g_ + c], im[pivot * g_ + c]);
            det = -det;
        }
        det *= im[k * g_ + k];
        if (im[k * g_ + k] == 0.0) return 0.0;
        for (size_t r = k + 1; r < g_; ++r) {
            const double f = im[r * g_ + k] / im[k * g_ + k];
            for (size_t c = k; c < g_; ++c) im[r * g_ + c] -= f * im[k * g_ + c];
        }
    }
    return det;
}

double PeriodMatrix::imag_quadratic(const std::vector<double>& y) const {
    double acc = 0.0;
    for (size_t r = 0; r < g_; ++r) {
        for (size_t c = 0; c < g_; ++c) {
            acc += y[r] * at(r, c).imag() * y[c];
        }
    }
    return acc;
}

Complex theta_eval(const TruncatedThetaSeries& s, const std::vector<Complex>& z) {
    const size_t g = s.Pi.genus();
    if (s.mu.size() != g || z.size() != g) {
        throw DimensionMismatch("theta_eval: index or argument size");
    }
    if (s.M < 1) throw Error("theta_eval: truncation radius must be >= 1");
    const double N = static_cast<double>(s.N);
    Complex acc(0.0, 0.0);
    std::vector<long> n(g, -s.M);
    std::vector<Complex> v(g);
    do {
        for (size_t i = 0; i < g; ++i) {
            v[i] = Complex(static_cast<double>(s.mu[i]) / N +
                               static_cast<double>(n[i]),
                           0.0);
        }
        Complex quad(0.0, 0.0);
        for (size_t r = 0; r < g; ++r) {
            for (size_t c = 0; c < g; ++c) {
                quad += v[r] * s.Pi.at(r, c) * v[c];
            }
        }
        Complex lin(0.0, 0.0);
        for (size_t i = 0; i < g; ++i) lin += v[i] * z[i];
        acc += std::exp(Complex(0.0, kTwoPi * N) * (0.5 * quad + lin));
    } while (advance(n, s.M));
    return acc;
}

double periodicity_residual(const TruncatedThetaSeries& s,
                            const std::vector<Complex>& z, size_t j) {
    const size_t g = s.Pi.genus();
    if (j < 1 || j > 2 * g) throw Error("periodicity_residual: j out of range");
    const Complex base = theta_eval(s, z);
    std::vector<Complex> shifted = z;
    if (j <= g) {
        shifted[j - 1] += 1.0;
        return std::abs(theta_eval(s, shifted) - base);
    }
    const size_t i = j - g - 1;
    const auto col = s.Pi.column(i);
    for (size_t r = 0; r < g; ++r) shifted[r] += col[r];
    const double N = static_cast<double>(s.N);
    const Complex factor = std::exp(Complex(0.0, -kTwoPi * N) * z[i] +
                                    Complex(0.0, -std::numbers::pi * N) *
                                        s.Pi.at(i, i));
    return std::abs(theta_eval(s, shifted) - factor * base);
}

std::vector<Complex> gram_quadrature(long N, size_t g, const PeriodMatrix& Pi,
                                     long M, long Q) {
    if (Q < 4) throw Error("gram_quadrature: need at least 4 points per axis");
    const size_t dim = zng_size(N, g);
    std::vector<Complex> gram(dim * dim, Complex(0.0, 0.0));
    const double prefactor =
        std::pow(2.0 * static_cast<double>(N), g / 2.0) *
        std::sqrt(Pi.imag_determinant());
    const double cell = 1.0 / static_cast<double>(Q);

    std::vector<TruncatedThetaSeries> series;
    series.reserve(dim);
    for (size_t i = 0; i < dim; ++i) {
        series.push_back(
            TruncatedThetaSeries{zng_from_index(i, N, g), N, Pi, M});
    }

    // Midpoint rule over [0,1]^{2g}; the integrand is smooth and periodic
    // in every coordinate, so the rule converges spectrally.
    std::vector<long> grid(2 * g, 0);
    std::vector<double> x(g), y(g);
    std::vector<Complex> values(dim);
    bool more = true;
    while (more) {
        for (size_t i = 0; i < g; ++i) {
            x[i] = (static_cast<double>(grid[i]) + 0.5) * cell;
            y[i] = (static_cast<double>(grid[g + i]) + 0.5) * cell;
        }
        std::vector<Complex> z(g);
        for (size_t r = 0; r < g; ++r) {
            Complex zi(x[r], 0.0);
            for (size_t c = 0; c < g; ++c) {
                zi += Pi.at(r, c) * y[c];
            }
            z[r] = zi;
        }
        const double weight =
            std::exp(-kTwoPi * static_cast<double>(N) * Pi.imag_quadratic(y));
        for (size_t i = 0; i < dim; ++i) values[i] = theta_eval(series[i], z);
        for (size_t a = 0; a < dim; ++a) {
            for (size_t b = 0; b < dim; ++b) {
                gram[a * dim + b] += values[a] * std::conj(values[b]) * weight;
            }
        }
        // advance the 2g-dimensional grid index
        more = false;
        for (size_t i = 2 * g; i-- > 0;) {
            if (grid[i] + 1 < Q) {
                ++grid[i];
                for (size_t k = i + 1; k < 2 * g; ++k) grid[k] = 0;
                more = true;
                break;
            }
        }
    }
    const double volume = std::pow(cell, static_cast<double>(2 * g));
    for (auto& v : gram) v *= prefactor * volume;
    return gram;
}

double gram_identity_error(const std::vector<Complex>& gram, size_t dim) {
    double err = 0.0;
    for (size_t a = 0; a < dim; ++a) {
        for (size_t b = 0; b < dim; ++b) {
            const Complex expect = (a == b) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            err = std::max(err, std::abs(gram[a * dim + b] - expect));
        }
    }
    return err;
}

}  // namespace thetaq
