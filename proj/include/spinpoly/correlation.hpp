#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "spinpoly/errors.hpp"
#include "spinpoly/rational.hpp"
#include "spinpoly/sign_vector.hpp"

namespace spinpoly {

inline std::size_t pair_count(int n) {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// Position of (i,j), 0-based i<j, in the lexicographic upper-triangle order
/// (0,1),(0,2),...,(0,n-1),(1,2),...  This order is the wire convention everywhere.
inline std::size_t pair_index(int i, int j, int n) {
    if (i < 0 || j <= i || j >= n) throw DimensionError("bad pair (" + std::to_string(i) + "," + std::to_string(j) + ") for n=" + std::to_string(n));
    const auto si = static_cast<std::size_t>(i);
    return si * (2 * static_cast<std::size_t>(n) - si - 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

inline std::pair<int, int> pair_from_index(std::size_t index, int n) {
    for (int i = 0; i < n; ++i) {
        const std::size_t row = static_cast<std::size_t>(n - i - 1);
        if (index < row) return {i, i + 1 + static_cast<int>(index)};
        index -= row;
    }
    throw DimensionError("pair index out of range for n=" + std::to_string(n));
}

/// A symmetric unit-diagonal matrix with entries in [-1,1], stored as its
/// n(n-1)/2 upper-triangle rationals. The diagonal is implied, never stored.
class CorrelationMatrix {
public:
    CorrelationMatrix(int n, RationalVector upper) : n_(n), upper_(std::move(upper)) {
        if (n_ < 1) throw InvariantError("correlation matrix needs n >= 1");
        if (upper_.size() != pair_count(n_)) {
            throw InvariantError("expected " + std::to_string(pair_count(n_)) +
                                 " upper-triangle entries, got " + std::to_string(upper_.size()));
        }
        for (const Rational& s : upper_) {
            if (s < -1 || s > 1) {
                throw InvariantError("correlation entry " + rational_string(s) + " outside [-1,1]");
            }
        }
    }

    static CorrelationMatrix identity(int n) {
        return CorrelationMatrix(n, RationalVector(pair_count(n), Rational(0)));
    }

    /// The rank-1 vertex w w^T; both members of a sign class give the same matrix.
    static CorrelationMatrix from_sign_vector(const SignVector& w) {
        const int n = w.size();
        RationalVector upper;
        upper.reserve(pair_count(n));
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                upper.emplace_back(w.entry(i) * w.entry(j));
            }
        }
        return CorrelationMatrix(n, std::move(upper));
    }

    int size() const { return n_; }
    const RationalVector& upper() const { return upper_; }

    /// Full-matrix accessor: at(i,i) = 1, at(i,j) = at(j,i).
    Rational at(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_) throw DimensionError("matrix index out of range");
        if (i == j) return Rational(1);
        return i < j ? upper_[pair_index(i, j, n_)] : upper_[pair_index(j, i, n_)];
    }

    friend bool operator==(const CorrelationMatrix& a, const CorrelationMatrix& b) {
        return a.n_ == b.n_ && a.upper_ == b.upper_;
    }
    friend bool operator!=(const CorrelationMatrix& a, const CorrelationMatrix& b) { return !(a == b); }

private:
    int n_;
    RationalVector upper_;
};

/// The 2^(n-1) vertices of C_n, one per canonical sign class, in class order.
inline std::vector<CorrelationMatrix> extreme_points(int n) {
    std::vector<CorrelationMatrix> out;
    for (const SignVector& w : sign_class_representatives(n)) {
        out.push_back(CorrelationMatrix::from_sign_vector(w));
    }
    return out;
}

} // namespace spinpoly
