#pragma once

#include <cstddef>
#include <vector>

#include "thetaq/cyclo.hpp"

namespace thetaq {

/// Dense matrix over the exact cyclotomic scalars, row major.
class CycloMatrix {
public:
    CycloMatrix() : rows_(0), cols_(0) {}
    CycloMatrix(size_t rows, size_t cols, const CycloScalar& fill)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
    /// Zero matrix in the ring of order N.
    CycloMatrix(size_t rows, size_t cols, int N)
        : CycloMatrix(rows, cols, CycloScalar::zero(N)) {}
    static CycloMatrix identity(size_t n, int N);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    CycloScalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const CycloScalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    CycloMatrix operator*(const CycloMatrix& rhs) const;
    CycloMatrix operator+(const CycloMatrix& rhs) const;
    CycloMatrix operator-(const CycloMatrix& rhs) const;
    CycloMatrix scaled(const CycloScalar& s) const;
    CycloMatrix transposed() const;
    bool operator==(const CycloMatrix& rhs) const;
    bool operator!=(const CycloMatrix& rhs) const { return !(*this == rhs); }

    std::vector<CycloScalar> apply(const std::vector<CycloScalar>& v) const;

    /// Exact rank over the cyclotomic field.
    size_t rank() const;

    /// Exact inverse; throws SingularMatrix.
    CycloMatrix inverse() const;

    /// Count of entries that differ between two equally sized matrices.
    size_t count_differences(const CycloMatrix& rhs) const;

private:
    size_t rows_, cols_;
    std::vector<CycloScalar> a_;
};

/// True when a = c * b for some nonzero scalar c (both zero also counts).
/// Decided through cross products only, so scalars of different N-exponent
/// parity never get added.
bool projectively_equal(const CycloMatrix& a, const CycloMatrix& b);

/// Scale so that the first nonzero entry in column-major order becomes 1;
/// canonical representative of the projective class.
CycloMatrix projective_normal_form(const CycloMatrix& m);

}  // namespace thetaq
