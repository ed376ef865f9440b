#include "thetaq/intmat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace thetaq {

IntMat IntMat::identity(size_t n) {
    IntMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("IntMat multiply");
    IntMat out(rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            const long v = at(i, k);
            if (v == 0) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) {
                out.at(i, j) += v * rhs.at(k, j);
            }
        }
    }
    return out;
}

std::vector<long> IntMat::apply(const std::vector<long>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("IntMat apply");
    std::vector<long> out(rows_, 0);
    for (size_t i = 0; i < rows_; ++i) {
        long acc = 0;
        for (size_t j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

IntMat IntMat::hermite_normal_form() const {
    IntMat m = *this;
    size_t pivot_row = 0;
    for (size_t col = 0; col < m.cols_ && pivot_row < m.rows_; ++col) {
        // Euclidean elimination in this column below pivot_row.
        while (true) {
            size_t best = m.rows_;
            for (size_t r = pivot_row; r < m.rows_; ++r) {
                if (m.at(r, col) != 0 &&
                    (best == m.rows_ ||
                     std::abs(m.at(r, col)) < std::abs(m.at(best, col)))) {
                    best = r;
                }
            }
            if (best == m.rows_) break;
            for (size_t j = 0; j < m.cols_; ++j) {
                std::swap(m.at(pivot_row, j), m.at(best, j));
            }
            bool done = true;
            for (size_t r = pivot_row + 1; r < m.rows_; ++r) {
                if (m.at(r, col) == 0) continue;
                long q = m.at(r, col) / m.at(pivot_row, col);
                for (size_t j = 0; j < m.cols_; ++j) {
                    m.at(r, j) -= q * m.at(pivot_row, j);
                }
                if (m.at(r, col) != 0) done = false;
            }
            if (done) break;
        }
        if (m.at(pivot_row, col) == 0) continue;
        if (m.at(pivot_row, col) < 0) {
            for (size_t j = 0; j < m.cols_; ++j) m.at(pivot_row, j) = -m.at(pivot_row, j);
        }
        // Reduce the rows above the pivot into canonical range.
        for (size_t r = 0; r < pivot_row; ++r) {
            long p = m.at(pivot_row, col);
            long q = m.at(r, col) / p;
            if (m.at(r, col) % p < 0) q -= 1;  // floor division
            if (q == 0) continue;
            for (size_t j = 0; j < m.cols_; ++j) {
                m.at(r, j) -= q * m.at(pivot_row, j);
            }
        }
        ++pivot_row;
    }
    IntMat out(pivot_row, m.cols_);
    for (size_t r = 0; r < pivot_row; ++r) {
        for (size_t j = 0; j < m.cols_; ++j) out.at(r, j) = m.at(r, j);
    }
    return out;
}

std::vector<long> IntMat::smith_divisors() const {
    IntMat m = *this;
    const size_t n = std::min(m.rows_, m.cols_);
    std::vector<long> divisors;
    size_t top = 0;
    while (top < n) {
        // Find the smallest nonzero entry in the remaining block.
        size_t pr = m.rows_, pc = m.cols_;
        for (size_t r = top; r < m.rows_; ++r) {
            for (size_t c = top; c < m.cols_; ++c) {
                if (m.at(r, c) != 0 &&
                    (pr == m.rows_ ||
                     std::abs(m.at(r, c)) < std::abs(m.at(pr, pc)))) {
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr == m.rows_) break;
        for (size_t j = 0; j < m.cols_; ++j) std::swap(m.at(top, j), m.at(pr, j));
        for (size_t i = 0; i < m.rows_; ++i) std::swap(m.at(i, top), m.at(i, pc));
        bool clean = true;
        for (size_t r = top + 1; r < m.rows_; ++r) {
            long q = m.at(r, top) / m.at(top, top);
            if (q != 0) {
                for (size_t j = 0; j < m.cols_; ++j) m.at(r, j) -= q * m.at(top, j);
            }
            if (m.at(r, top) != 0) clean = false;
        }
        for (size_t c = top + 1; c < m.cols_; ++c) {
            long q = m.at(top, c) / m.at(top, top);
            if (q != 0) {
                for (size_t i = 0; i < m.rows_; ++i) m.at(i, c) -= q * m.at(i, top);
            }
            if (m.at(top, c) != 0) clean = false;
        }
        if (!clean) continue;  // repeat with a smaller pivot
        divisors.push_back(std::abs(m.at(top, top)));
        ++top;
    }
    return divisors;
}

IntMat intersection_form(size_t g) {
    IntMat j(2 * g, 2 * g);
    for (size_t i = 0; i < g; ++i) {
        j.at(i, g + i) = 1;
        j.at(g + i, i) = -1;
    }
    return j;
}

long symplectic_pairing(const std::vector<long>& x, const std::vector<long>& y) {
    if (x.size() != y.size() || x.size() % 2 != 0) {
        throw DimensionMismatch("symplectic_pairing");
    }
    const size_t g = x.size() / 2;
    long acc = 0;
    for (size_t i = 0; i < g; ++i) {
        acc += x[i] * y[g + i] - x[g + i] * y[i];
    }
    return acc;
}

bool is_symplectic(const IntMat& h) {
    if (h.rows() != h.cols() || h.rows() % 2 != 0) return false;
    const size_t g = h.rows() / 2;
    const IntMat j = intersection_form(g);
    IntMat ht(h.cols(), h.rows());
    for (size_t r = 0; r < h.rows(); ++r) {
        for (size_t c = 0; c < h.cols(); ++c) ht.at(c, r) = h.at(r, c);
    }
    return ht * j * h == j;
}

void require_symplectic(const IntMat& h) {
    if (!is_symplectic(h)) throw NotSymplectic("matrix is not symplectic");
}

bool is_primitive_vector(const std::vector<long>& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, x);
    return g == 1;
}

}  // namespace thetaq
