#pragma once

#include <vector>

#include "hgr/errors.hpp"
#include "hgr/rational.hpp"

namespace hgr {

// Dense square matrix over exact rationals. Indices are 0-based here; the
// diagram layer documents its entries against the 1-based curve numbering.
class RatMatrix {
public:
    RatMatrix() : n_(0) {}
    explicit RatMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}

    static RatMatrix identity(int n) {
        RatMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    int size() const { return n_; }
    Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        RatMatrix r(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < a.n_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

private:
    int n_;
    std::vector<Rational> e_;
};

// Exact determinant by Gaussian elimination, pivoting on the first nonzero
// entry of each column (no numerical concerns over exact rationals).
// The empty 0x0 matrix has determinant 1.
inline Rational mat_det(RatMatrix m) {
    const int n = m.size();
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!m.at(row, col).is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        for (int row = col + 1; row < n; ++row) {
            if (m.at(row, col).is_zero()) continue;
            Rational f = m.at(row, col) / m.at(col, col);
            for (int j = col; j < n; ++j) m.at(row, j) -= f * m.at(col, j);
        }
    }
    return det;
}

// Exact inverse by Gauss-Jordan elimination. Throws SingularMatrix.
inline RatMatrix mat_inverse(const RatMatrix& in) {
    const int n = in.size();
    RatMatrix a = in;
    RatMatrix inv = RatMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!a.at(row, col).is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw SingularMatrix();
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rational p = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || a.at(row, col).is_zero()) continue;
            Rational f = a.at(row, col);
            for (int j = 0; j < n; ++j) {
                a.at(row, j) -= f * a.at(col, j);
                inv.at(row, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

}  // namespace hgr
