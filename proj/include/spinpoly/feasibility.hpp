#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinpoly/correlation.hpp"
#include "spinpoly/distribution.hpp"
#include "spinpoly/errors.hpp"
#include "spinpoly/rational.hpp"

namespace spinpoly::lp {

inline constexpr std::size_t kMaxColumns = std::size_t{1} << 12;

/// Find x in Q^cols with matrix*x = rhs and x >= 0.
struct FeasibilitySystem {
    std::size_t rows = 0;
    std::size_t cols = 0;
    RationalMatrix matrix;
    RationalVector rhs;

    FeasibilitySystem(RationalMatrix m, RationalVector b)
        : rows(m.size()), cols(rows == 0 ? 0 : m[0].size()), matrix(std::move(m)), rhs(std::move(b)) {
        if (rhs.size() != rows) throw DimensionError("rhs length does not match row count");
        for (const RationalVector& row : matrix) {
            if (row.size() != cols) throw DimensionError("feasibility matrix is ragged");
        }
        if (cols > kMaxColumns) {
            throw SizeError("feasibility system has " + std::to_string(cols) + " columns, guard is " +
                            std::to_string(kMaxColumns));
        }
    }
};

/// Either a nonnegative solution point or a Farkas witness y with
/// y^T M <= 0 componentwise and y^T b > 0. Exactly one side is populated,
/// and whichever it is has been re-verified exactly before being returned.
struct FeasibilityResult {
    bool feasible = false;
    RationalVector point;       // cols entries when feasible
    RationalVector certificate; // rows entries when infeasible
};

namespace detail {

inline void verify_result(const FeasibilitySystem& sys, const FeasibilityResult& result) {
    if (result.feasible) {
        if (result.point.size() != sys.cols) throw InternalError("solution has wrong length");
        for (const Rational& v : result.point) {
            if (v < 0) throw InternalError("solution has a negative component");
        }
        for (std::size_t r = 0; r < sys.rows; ++r) {
            Rational acc(0);
            for (std::size_t c = 0; c < sys.cols; ++c) acc += sys.matrix[r][c] * result.point[c];
            if (acc != sys.rhs[r]) throw InternalError("solution violates equality row " + std::to_string(r));
        }
        return;
    }
    if (result.certificate.size() != sys.rows) throw InternalError("certificate has wrong length");
    for (std::size_t c = 0; c < sys.cols; ++c) {
        Rational acc(0);
        for (std::size_t r = 0; r < sys.rows; ++r) acc += result.certificate[r] * sys.matrix[r][c];
        if (acc > 0) throw InternalError("certificate fails y^T M <= 0 at column " + std::to_string(c));
    }
    Rational ytb(0);
    for (std::size_t r = 0; r < sys.rows; ++r) ytb += result.certificate[r] * sys.rhs[r];
    if (ytb <= 0) throw InternalError("certificate fails y^T b > 0");
}

} // namespace detail

/// Phase-I simplex over exact rationals with Bland's pivot rule, which rules
/// out cycling, so every run terminates. Artificial variables start in the
/// basis; driving their sum to zero yields a basic feasible point, and a
/// positive optimum yields the Farkas certificate from the multipliers.
/// Deterministic for a fixed input, and self-checking: the point or
/// certificate is re-verified exactly before it is returned.
inline FeasibilityResult solve_feasibility(const FeasibilitySystem& sys) {
    const std::size_t m = sys.rows;
    const std::size_t k = sys.cols;

    // Orient every row so the right-hand side is nonnegative.
    std::vector<int> row_sign(m, 1);
    // Tableau layout: k structural columns, m artificial columns, rhs column.
    // Row m is the phase-I objective (reduced costs, then -objective value).
    const std::size_t width = k + m + 1;
    RationalMatrix tab(m + 1, RationalVector(width, Rational(0)));
    for (std::size_t r = 0; r < m; ++r) {
        const bool flip = sys.rhs[r] < 0;
        row_sign[r] = flip ? -1 : 1;
        for (std::size_t c = 0; c < k; ++c) tab[r][c] = flip ? -sys.matrix[r][c] : sys.matrix[r][c];
        tab[r][k + r] = 1;
        tab[r][width - 1] = flip ? -sys.rhs[r] : sys.rhs[r];
    }
    // Objective: minimize the sum of artificials. With the artificial basis,
    // the reduced cost of structural column c is -(column sum).
    for (std::size_t c = 0; c < k + m + 1; ++c) {
        if (c >= k && c < k + m) continue; // basic artificials have reduced cost 0
        Rational sum(0);
        for (std::size_t r = 0; r < m; ++r) sum += tab[r][c];
        tab[m][c] = -sum;
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) basis[r] = k + r;

    while (true) {
        // Bland: entering column is the lowest index with a negative reduced cost.
        std::size_t enter = width - 1;
        for (std::size_t c = 0; c < k + m; ++c) {
            if (tab[m][c] < 0) {
                enter = c;
                break;
            }
        }
        if (enter == width - 1) break; // optimal

        // Ratio test; ties broken by the lowest basis index (Bland again).
        std::size_t leave = m;
        Rational best;
        for (std::size_t r = 0; r < m; ++r) {
            if (tab[r][enter] <= 0) continue;
            const Rational ratio = tab[r][width - 1] / tab[r][enter];
            if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                best = ratio;
                leave = r;
            }
        }
        if (leave == m) throw InternalError("phase-I objective is bounded; no pivot row found");

        const Rational pivot = tab[leave][enter];
        for (Rational& v : tab[leave]) v /= pivot;
        for (std::size_t r = 0; r <= m; ++r) {
            if (r == leave || tab[r][enter] == 0) continue;
            const Rational factor = tab[r][enter];
            for (std::size_t c = 0; c < width; ++c) tab[r][c] -= factor * tab[leave][c];
        }
        basis[leave] = enter;
    }

    FeasibilityResult result;
    const Rational objective = -tab[m][width - 1];
    if (objective == 0) {
        result.feasible = true;
        result.point.assign(k, Rational(0));
        for (std::size_t r = 0; r < m; ++r) {
            if (basis[r] < k) result.point[basis[r]] = tab[r][width - 1];
        }
    } else {
        // Simplex multipliers: pi_r = 1 - (reduced cost of artificial r).
        // At optimality pi^T M' <= 0 and pi^T b' = objective > 0 on the
        // sign-adjusted system; undo the row orientation to certify the input.
        result.feasible = false;
        result.certificate.reserve(m);
        for (std::size_t r = 0; r < m; ++r) {
            result.certificate.push_back(row_sign[r] * (Rational(1) - tab[m][k + r]));
        }
    }
    detail::verify_result(sys, result);
    return result;
}

/// The vertex-weight system for sigma: one column per canonical sign class
/// (that vertex's upper triangle over a final all-ones affine row), with
/// rhs (sigma.upper, 1). Feasible exactly when sigma lies in C_n, and the
/// feasible point is a class-weight vector that realize() accepts as is.
inline FeasibilitySystem membership_system(const CorrelationMatrix& sigma) {
    const int n = sigma.size();
    const std::vector<CorrelationMatrix> vertices = extreme_points(n);
    const std::size_t pairs = pair_count(n);
    RationalMatrix m(pairs + 1, RationalVector(vertices.size(), Rational(0)));
    for (std::size_t c = 0; c < vertices.size(); ++c) {
        for (std::size_t p = 0; p < pairs; ++p) m[p][c] = vertices[c].upper()[p];
        m[pairs][c] = 1;
    }
    RationalVector b = sigma.upper();
    b.push_back(Rational(1));
    return FeasibilitySystem(std::move(m), std::move(b));
}

inline FeasibilityResult membership(const CorrelationMatrix& sigma) {
    return solve_feasibility(membership_system(sigma));
}

/// Realizability = membership plus the witnessing spin law. When feasible the
/// solver's class weights (a basic solution; not unique for n >= 4) are turned
/// into a sign-symmetric distribution whose correlations are re-checked to
/// reproduce sigma exactly.
struct RealizabilityResult {
    std::optional<JointSpinDistribution> distribution;
    RationalVector class_weights; // set alongside distribution
    RationalVector certificate;   // Farkas witness when not realizable

    bool realizable() const { return distribution.has_value(); }
};

inline RealizabilityResult realizability(const CorrelationMatrix& sigma) {
    RealizabilityResult out;
    FeasibilityResult lp = membership(sigma);
    if (!lp.feasible) {
        out.certificate = std::move(lp.certificate);
        return out;
    }
    out.class_weights = std::move(lp.point);
    out.distribution = realize(out.class_weights, sigma.size());
    if (correlations_of(*out.distribution) != sigma) {
        throw InternalError("realized distribution does not reproduce the input correlations");
    }
    return out;
}

} // namespace spinpoly::lp
