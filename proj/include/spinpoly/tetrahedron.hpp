#pragma once

#include <array>

#include "spinpoly/bell.hpp"
#include "spinpoly/correlation.hpp"
#include "spinpoly/errors.hpp"
#include "spinpoly/rational.hpp"

namespace spinpoly {

// The fixed symmetric 4x4 transform between moment vectors and Bell left-hand
// sides at n=3. Involutory up to scale: kBellTransform^2 = 4*I.
inline constexpr std::array<std::array<int, 4>, 4> kBellTransform{{
    {1, 1, 1, 1},
    {1, -1, 1, -1},
    {1, 1, -1, -1},
    {1, -1, -1, 1},
}};

/// x = (1, s12, s13, s23); the leading 1 carries the unit diagonal.
class MomentVector {
public:
    explicit MomentVector(std::array<Rational, 4> x) : x_(std::move(x)) {
        if (x_[0] != 1) throw InvariantError("moment vector must start with 1");
    }
    const std::array<Rational, 4>& values() const { return x_; }

    friend bool operator==(const MomentVector& a, const MomentVector& b) { return a.x_ == b.x_; }

private:
    std::array<Rational, 4> x_;
};

/// y = kBellTransform * x; component t is the left-hand side of the t-th
/// Bell inequality of the triple (1,2,3). Nonnegative y means all four hold.
struct BellEvaluation {
    std::array<Rational, 4> y;

    bool nonnegative() const {
        for (const Rational& v : y) {
            if (v < 0) return false;
        }
        return true;
    }

    friend bool operator==(const BellEvaluation& a, const BellEvaluation& b) { return a.y == b.y; }
};

/// Affine coordinates of a unit-diagonal symmetric 3x3 matrix with respect to
/// the four tetrahedron vertices; the components always sum to exactly 1.
/// The matrix lies in C_3 precisely when every component is >= 0.
class BarycentricCoords {
public:
    explicit BarycentricCoords(std::array<Rational, 4> lambda) : lambda_(std::move(lambda)) {
        if (lambda_[0] + lambda_[1] + lambda_[2] + lambda_[3] != 1) {
            throw InvariantError("barycentric components must sum to exactly 1");
        }
    }
    const std::array<Rational, 4>& values() const { return lambda_; }

    bool nonnegative() const {
        for (const Rational& v : lambda_) {
            if (v < 0) return false;
        }
        return true;
    }

    friend bool operator==(const BarycentricCoords& a, const BarycentricCoords& b) {
        return a.lambda_ == b.lambda_;
    }

private:
    std::array<Rational, 4> lambda_;
};

namespace detail {
inline std::array<Rational, 4> transform_apply(const std::array<Rational, 4>& v) {
    std::array<Rational, 4> out{Rational(0), Rational(0), Rational(0), Rational(0)};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            out[static_cast<std::size_t>(r)] +=
                kBellTransform[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
                v[static_cast<std::size_t>(c)];
        }
    }
    return out;
}
} // namespace detail

/// The affine (possibly non-convex) combination of the tetrahedron vertices
/// produced by compose3. Entries may fall outside [-1,1] when some component
/// of lambda is negative; the flag records whether it is a correlation matrix.
struct ComposedMatrix {
    std::array<Rational, 3> upper; // s12, s13, s23
    bool correlation;

    MomentVector moments() const {
        return MomentVector({Rational(1), upper[0], upper[1], upper[2]});
    }

    /// Only valid when the correlation flag is set.
    CorrelationMatrix as_correlation() const {
        return CorrelationMatrix(3, {upper[0], upper[1], upper[2]});
    }
};

inline MomentVector moment_vector(const CorrelationMatrix& sigma) {
    if (sigma.size() != 3) {
        throw DimensionError("moment vector is defined for n=3, got n=" + std::to_string(sigma.size()));
    }
    return MomentVector({Rational(1), sigma.upper()[0], sigma.upper()[1], sigma.upper()[2]});
}

inline BellEvaluation bell_transform(const MomentVector& x) {
    return BellEvaluation{detail::transform_apply(x.values())};
}

inline BarycentricCoords barycentric3(const MomentVector& x) {
    std::array<Rational, 4> y = detail::transform_apply(x.values());
    for (Rational& v : y) v /= 4;
    return BarycentricCoords(std::move(y));
}

inline BarycentricCoords barycentric3(const CorrelationMatrix& sigma) {
    return barycentric3(moment_vector(sigma));
}

inline BarycentricCoords barycentric3(const ComposedMatrix& m) {
    return barycentric3(m.moments());
}

/// Exact inverse of barycentric3; the vertex order is the transform's column order.
inline ComposedMatrix compose3(const BarycentricCoords& lambda) {
    const std::array<Rational, 4> x = detail::transform_apply(lambda.values());
    ComposedMatrix out{{x[1], x[2], x[3]}, true};
    for (const Rational& s : out.upper) {
        if (s < -1 || s > 1) {
            out.correlation = false;
            break;
        }
    }
    return out;
}

/// The four vertices of C_3 in the transform's column order: compose3 of the
/// standard basis coordinates yields exactly these.
inline std::array<CorrelationMatrix, 4> tetrahedron_vertices() {
    std::array<Rational, 4> unit{Rational(1), Rational(0), Rational(0), Rational(0)};
    std::vector<CorrelationMatrix> v;
    for (int i = 0; i < 4; ++i) {
        std::array<Rational, 4> lambda = unit;
        std::swap(lambda[0], lambda[static_cast<std::size_t>(i)]);
        v.push_back(compose3(BarycentricCoords(lambda)).as_correlation());
    }
    return {v[0], v[1], v[2], v[3]};
}

} // namespace spinpoly
