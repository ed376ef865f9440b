#pragma once

#include <cstddef>
#include <vector>

#include "thetaq/errors.hpp"

namespace thetaq {

/// Dense integer matrix, row major.  Used for homology classes, symplectic
/// matrices and Lagrangian generator matrices.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(size_t rows, size_t cols, long fill = 0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
    static IntMat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    long& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    long at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    IntMat operator*(const IntMat& rhs) const;
    bool operator==(const IntMat& rhs) const = default;

    std::vector<long> apply(const std::vector<long>& v) const;

    /// Row-style Hermite normal form (over Z, canonical up to nothing --
    /// it is the canonical form).  Zero rows are dropped.
    IntMat hermite_normal_form() const;

    /// Elementary divisors from the Smith normal form.
    std::vector<long> smith_divisors() const;

private:
    size_t rows_, cols_;
    std::vector<long> a_;
};

/// Intersection form J = [[0, I_g], [-I_g, 0]] on Z^{2g} with the basis
/// (a_1..a_g, b_1..b_g).
IntMat intersection_form(size_t g);

/// x^T J y.
long symplectic_pairing(const std::vector<long>& x, const std::vector<long>& y);

bool is_symplectic(const IntMat& h);
void require_symplectic(const IntMat& h);

bool is_primitive_vector(const std::vector<long>& v);

}  // namespace thetaq
