#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "spinpoly/errors.hpp"
#include "spinpoly/rational.hpp"

namespace spinpoly::linalg {

inline Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw DimensionError("dot product of unequal lengths");
    Rational out(0);
    for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
    return out;
}

inline RationalVector matvec(const RationalMatrix& m, const RationalVector& x) {
    RationalVector out;
    out.reserve(m.size());
    for (const RationalVector& row : m) out.push_back(dot(row, x));
    return out;
}

struct Rref {
    RationalMatrix matrix;
    std::vector<std::size_t> pivot_columns;
};

/// Exact Gauss-Jordan reduced row echelon form.
inline Rref rref(RationalMatrix m) {
    Rref out;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const Rational lead = m[r][c];
        for (Rational& v : m[r]) v /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational factor = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.matrix = std::move(m);
    return out;
}

inline std::size_t rank(RationalMatrix m) { return rref(std::move(m)).pivot_columns.size(); }

/// Basis of {x : m x = 0} in Q^cols (cols given explicitly so m may be empty).
inline std::vector<RationalVector> nullspace_basis(const RationalMatrix& m, std::size_t cols) {
    const Rref reduced = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : reduced.pivot_columns) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t p = 0; p < reduced.pivot_columns.size(); ++p) {
            v[reduced.pivot_columns[p]] = -reduced.matrix[p][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact determinant by fraction-preserving Gaussian elimination.
inline Rational determinant(RationalMatrix m) {
    const std::size_t n = m.size();
    for (const RationalVector& row : m) {
        if (row.size() != n) throw DimensionError("determinant of non-square matrix");
    }
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != c) {
            std::swap(m[c], m[pivot]);
            det = -det;
        }
        det *= m[c][c];
        const Rational lead = m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            const Rational factor = m[i][c] / lead;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= factor * m[c][j];
        }
    }
    return det;
}

} // namespace spinpoly::linalg
