#include "thetaq/matrix.hpp"

#include <utility>

namespace thetaq {

CycloMatrix CycloMatrix::identity(size_t n, int N) {
    CycloMatrix m(n, n, N);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = CycloScalar::one(N);
    return m;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("CycloMatrix multiply");
    CycloMatrix out(rows_, rhs.cols_, CycloScalar());
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            const CycloScalar& v = at(i, k);
            if (v.is_universal_zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) {
                out.at(i, j) += v * rhs.at(k, j);
            }
        }
    }
    return out;
}

CycloMatrix CycloMatrix::operator+(const CycloMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DimensionMismatch("CycloMatrix add");
    }
    CycloMatrix out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
    return out;
}

CycloMatrix CycloMatrix::operator-(const CycloMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DimensionMismatch("CycloMatrix subtract");
    }
    CycloMatrix out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += -rhs.a_[i];
    return out;
}

CycloMatrix CycloMatrix::scaled(const CycloScalar& s) const {
    CycloMatrix out = *this;
    for (auto& x : out.a_) x *= s;
    return out;
}

CycloMatrix CycloMatrix::transposed() const {
    CycloMatrix out(cols_, rows_, CycloScalar());
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    }
    return out;
}

bool CycloMatrix::operator==(const CycloMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] != rhs.a_[i]) return false;
    }
    return true;
}

std::vector<CycloScalar> CycloMatrix::apply(const std::vector<CycloScalar>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("CycloMatrix apply");
    std::vector<CycloScalar> out(rows_);
    for (size_t i = 0; i < rows_; ++i) {
        CycloScalar acc;
        for (size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_universal_zero() || v[j].is_universal_zero()) continue;
            acc += at(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

size_t CycloMatrix::rank() const {
    CycloMatrix m = *this;
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
        size_t pivot = rows_;
        for (size_t r = rank; r < rows_; ++r) {
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows_) continue;
        for (size_t j = 0; j < cols_; ++j) {
            std::swap(m.at(rank, j), m.at(pivot, j));
        }
        CycloScalar inv = m.at(rank, col).inverse();
        for (size_t j = col; j < cols_; ++j) m.at(rank, j) *= inv;
        for (size_t r = 0; r < rows_; ++r) {
            if (r == rank || m.at(r, col).is_zero()) continue;
            CycloScalar f = m.at(r, col);
            for (size_t j = col; j < cols_; ++j) {
                m.at(r, j) += -(f * m.at(rank, j));
            }
        }
        ++rank;
    }
    return rank;
}

CycloMatrix CycloMatrix::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
    const size_t n = rows_;
    CycloMatrix m = *this;
    int N = 0;
    for (const auto& x : a_) {
        if (!x.is_universal_zero()) {
            N = x.order();
            break;
        }
    }
    if (N == 0) throw SingularMatrix("inverse of zero matrix");
    CycloMatrix inv = identity(n, N);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = n;
        for (size_t r = col; r < n; ++r) {
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == n) throw SingularMatrix("matrix is singular");
        for (size_t j = 0; j < n; ++j) {
            std::swap(m.at(col, j), m.at(pivot, j));
            std::swap(inv.at(col, j), inv.at(pivot, j));
        }
        CycloScalar f = m.at(col, col).inverse();
        for (size_t j = 0; j < n; ++j) {
            m.at(col, j) *= f;
            inv.at(col, j) *= f;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m.at(r, col).is_zero()) continue;
            CycloScalar g = m.at(r, col);
            for (size_t j = 0; j < n; ++j) {
                m.at(r, j) += -(g * m.at(col, j));
                inv.at(r, j) += -(g * inv.at(col, j));
            }
        }
    }
    return inv;
}

size_t CycloMatrix::count_differences(const CycloMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DimensionMismatch("count_differences");
    }
    size_t count = 0;
    for (size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] != rhs.a_[i]) ++count;
    }
    return count;
}

bool projectively_equal(const CycloMatrix& a, const CycloMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    // Anchor on the first position where either matrix is nonzero.
    size_t ar = a.rows(), ac = a.cols();
    bool found = false;
    for (size_t c = 0; c < a.cols() && !found; ++c) {
        for (size_t r = 0; r < a.rows() && !found; ++r) {
            if (!a.at(r, c).is_zero() || !b.at(r, c).is_zero()) {
                ar = r;
                ac = c;
                found = true;
            }
        }
    }
    if (!found) return true;  // both zero
    if (a.at(ar, ac).is_zero() || b.at(ar, ac).is_zero()) return false;
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < a.cols(); ++c) {
            // a[anchor] * b[r,c] == b[anchor] * a[r,c]
            if (a.at(ar, ac) * b.at(r, c) != b.at(ar, ac) * a.at(r, c)) {
                return false;
            }
        }
    }
    return true;
}

CycloMatrix projective_normal_form(const CycloMatrix& m) {
    for (size_t c = 0; c < m.cols(); ++c) {
        for (size_t r = 0; r < m.rows(); ++r) {
            if (!m.at(r, c).is_zero()) {
                return m.scaled(m.at(r, c).inverse());
            }
        }
    }
    return m;
}

}  // namespace thetaq
