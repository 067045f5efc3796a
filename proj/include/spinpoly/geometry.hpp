#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spinpoly/bell.hpp"
#include "spinpoly/correlation.hpp"
#include "spinpoly/errors.hpp"
#include "spinpoly/feasibility.hpp"
#include "spinpoly/linalg.hpp"
#include "spinpoly/rational.hpp"
#include "spinpoly/sampling.hpp"

namespace spinpoly::geometry {

// Brute-force guards for facet enumeration.
inline constexpr std::size_t kMaxFacetPoints = 64;
inline constexpr std::size_t kMaxFacetDim = 10;

/// A finite point set whose convex hull is the polytope under study.
struct VRepresentation {
    std::size_t dim = 0;
    std::vector<RationalVector> points;

    VRepresentation(std::size_t ambient_dim, std::vector<RationalVector> pts)
        : dim(ambient_dim), points(std::move(pts)) {
        std::set<RationalVector> seen;
        for (const RationalVector& p : points) {
            if (p.size() != dim) throw DimensionError("point length does not match ambient dimension");
            if (!seen.insert(p).second) throw InvariantError("duplicate point in V-representation");
        }
    }
};

/// Builds the V-representation of C_n: the vertex upper triangles as points
/// of Q^(n(n-1)/2).
inline VRepresentation vertex_representation(int n) {
    std::vector<RationalVector> pts;
    for (const CorrelationMatrix& v : extreme_points(n)) pts.push_back(v.upper());
    return VRepresentation(pair_count(n), std::move(pts));
}

/// normal . x + offset >= 0. Canonical scaling divides by |first nonzero of
/// (offset, normal)|, so equal halfspaces compare equal componentwise.
struct HalfSpace {
    RationalVector normal;
    Rational offset;

    static HalfSpace canonicalized(Rational offset, RationalVector normal) {
        Rational scale = offset < 0 ? -offset : offset;
        if (scale == 0) {
            for (const Rational& a : normal) {
                if (a != 0) {
                    scale = a < 0 ? -a : a;
                    break;
                }
            }
        }
        if (scale == 0) throw InvariantError("halfspace normal must be nonzero");
        offset /= scale;
        for (Rational& a : normal) a /= scale;
        return HalfSpace{std::move(normal), std::move(offset)};
    }

    Rational evaluate(const RationalVector& x) const {
        return linalg::dot(normal, x) + offset;
    }

    friend bool operator==(const HalfSpace& a, const HalfSpace& b) {
        return a.offset == b.offset && a.normal == b.normal;
    }
    friend bool operator<(const HalfSpace& a, const HalfSpace& b) {
        if (a.offset != b.offset) return a.offset < b.offset;
        return a.normal < b.normal;
    }
};

/// normal . x + offset == 0 on the whole set; first nonzero of (offset, normal)
/// is scaled to exactly +1 (equalities may be scaled by negative factors).
struct AffineEquality {
    RationalVector normal;
    Rational offset;

    static AffineEquality canonicalized(Rational offset, RationalVector normal) {
        Rational scale = offset;
        if (scale == 0) {
            for (const Rational& a : normal) {
                if (a != 0) {
                    scale = a;
                    break;
                }
            }
        }
        if (scale == 0) throw InvariantError("equality normal must be nonzero");
        offset /= scale;
        for (Rational& a : normal) a /= scale;
        return AffineEquality{std::move(normal), std::move(offset)};
    }

    Rational evaluate(const RationalVector& x) const {
        return linalg::dot(normal, x) + offset;
    }

    friend bool operator==(const AffineEquality& a, const AffineEquality& b) {
        return a.offset == b.offset && a.normal == b.normal;
    }
    friend bool operator<(const AffineEquality& a, const AffineEquality& b) {
        if (a.offset != b.offset) return a.offset < b.offset;
        return a.normal < b.normal;
    }
};

struct HRepresentation {
    std::size_t dim = 0;
    std::vector<HalfSpace> halfspaces;        // facet-defining within the affine hull
    std::vector<AffineEquality> equalities;   // satisfied with equality by the whole set
};

/// Affine hull data: dimension, a basis of the direction space, and the
/// indices of dim+1 affinely independent input points.
struct AffineHull {
    std::size_t dim = 0;
    std::vector<RationalVector> directions;
    std::vector<std::size_t> independent_points;
};

inline AffineHull affine_hull(const VRepresentation& v) {
    if (v.points.empty()) throw InvariantError("affine hull of an empty point set");
    AffineHull hull;
    hull.independent_points.push_back(0);
    RationalMatrix reduced; // rref rows spanning the directions found so far
    for (std::size_t p = 1; p < v.points.size(); ++p) {
        RationalVector raw(v.dim);
        for (std::size_t c = 0; c < v.dim; ++c) raw[c] = v.points[p][c] - v.points[0][c];
        // Reduce a copy against the basis found so far; a nonzero remainder
        // means this difference is a genuinely new direction.
        RationalVector remainder = raw;
        for (const RationalVector& row : reduced) {
            std::size_t lead = 0;
            while (lead < v.dim && row[lead] == 0) ++lead;
            if (lead < v.dim && remainder[lead] != 0) {
                const Rational factor = remainder[lead] / row[lead];
                for (std::size_t c = 0; c < v.dim; ++c) remainder[c] -= factor * row[c];
            }
        }
        if (std::all_of(remainder.begin(), remainder.end(), [](const Rational& x) { return x == 0; })) {
            continue;
        }
        hull.directions.push_back(std::move(raw));
        hull.independent_points.push_back(p);
        reduced.push_back(std::move(remainder));
        reduced = linalg::rref(std::move(reduced)).matrix;
    }
    hull.dim = hull.directions.size();
    return hull;
}

inline std::size_t affine_hull_dim(const VRepresentation& v) { return affine_hull(v).dim; }

/// True exactly when the points are the vertex set of a simplex: their count
/// equals the affine dimension plus one.
inline bool is_simplex(const VRepresentation& v) {
    return v.points.size() == affine_hull(v).dim + 1;
}

/// Whether 2^(n-1) = n(n-1)/2 + 1, i.e. whether the vertex count of C_n could
/// match a simplex on the ambient dimension. Holds only for n = 2 and n = 3.
inline bool simplex_count_identity(int n) {
    if (n < 1) throw InvariantError("simplex_count_identity needs n >= 1");
    const BigInt lhs = BigInt(1) << (n - 1);
    const BigInt rhs = BigInt(n) * (n - 1) / 2 + 1;
    return lhs == rhs;
}

namespace detail {

/// Hyperplane through the chosen points inside the affine hull, as a pair
/// (offset, normal) with the normal constrained to the hull's direction
/// space. Empty result when the points do not span a hull hyperplane.
inline std::optional<std::pair<Rational, RationalVector>> hull_hyperplane(
    const VRepresentation& v, const AffineHull& hull, const std::vector<std::size_t>& subset) {
    const std::size_t h = hull.dim;
    // Unknowns (offset, mu): normal = directions^T mu. One equation per point.
    RationalMatrix system;
    system.reserve(subset.size());
    for (const std::size_t p : subset) {
        RationalVector row(1 + h);
        row[0] = 1;
        for (std::size_t t = 0; t < h; ++t) {
            row[1 + t] = linalg::dot(hull.directions[t], v.points[p]);
        }
        system.push_back(std::move(row));
    }
    const auto kernel = linalg::nullspace_basis(system, 1 + h);
    if (kernel.size() != 1) return std::nullopt; // affinely dependent subset
    const RationalVector& solution = kernel[0];
    RationalVector normal(v.dim, Rational(0));
    for (std::size_t t = 0; t < h; ++t) {
        for (std::size_t c = 0; c < v.dim; ++c) normal[c] += solution[1 + t] * hull.directions[t][c];
    }
    return std::make_pair(solution[0], std::move(normal));
}

} // namespace detail

/// Brute-force facet enumeration: every size-(hull dim) subset of points that
/// spans a hyperplane of the affine hull is kept exactly when all points lie
/// weakly on one side. The affine hull itself is reported as equalities, so
/// non-full-dimensional inputs are handled without any coordinate change.
/// Output is canonically scaled, deduplicated, and sorted, hence byte-identical
/// across runs and independent of the input point order.
inline HRepresentation facet_enumerate(const VRepresentation& v) {
    if (v.points.empty()) throw InvariantError("facet enumeration of an empty point set");
    if (v.points.size() > kMaxFacetPoints || v.dim > kMaxFacetDim) {
        throw SizeError("facet enumeration guard: at most " + std::to_string(kMaxFacetPoints) +
                        " points in dimension at most " + std::to_string(kMaxFacetDim));
    }
    const AffineHull hull = affine_hull(v);
    HRepresentation out;
    out.dim = v.dim;

    // Equalities: a basis of the orthogonal complement of the direction space.
    for (const RationalVector& a : linalg::nullspace_basis(hull.directions, v.dim)) {
        out.equalities.push_back(
            AffineEquality::canonicalized(-linalg::dot(a, v.points[0]), a));
    }
    std::sort(out.equalities.begin(), out.equalities.end());

    const std::size_t h = hull.dim;
    if (h == 0) return out; // a single point: equalities only

    std::set<HalfSpace> facets;
    std::vector<std::size_t> subset(h);
    // Enumerate index combinations of size h in lexicographic order.
    for (std::size_t i = 0; i < h; ++i) subset[i] = i;
    while (true) {
        if (auto plane = detail::hull_hyperplane(v, hull, subset)) {
            auto& [offset, normal] = *plane;
            bool any_negative = false;
            bool any_positive = false;
            for (const RationalVector& p : v.points) {
                const Rational value = linalg::dot(normal, p) + offset;
                if (value < 0) any_negative = true;
                if (value > 0) any_positive = true;
                if (any_negative && any_positive) break;
            }
            if (!(any_negative && any_positive)) {
                if (any_negative) {
                    offset = -offset;
                    for (Rational& a : normal) a = -a;
                }
                facets.insert(HalfSpace::canonicalized(std::move(offset), std::move(normal)));
            }
        }
        // next combination
        std::size_t i = h;
        while (i > 0) {
            --i;
            if (subset[i] != i + v.points.size() - h) break;
            if (i == 0) { i = h; break; }
        }
        if (i == h) break;
        ++subset[i];
        for (std::size_t j = i + 1; j < h; ++j) subset[j] = subset[j - 1] + 1;
    }
    out.halfspaces.assign(facets.begin(), facets.end());
    return out;
}

/// True exactly when x satisfies every equality exactly and every halfspace weakly.
inline bool h_membership(const HRepresentation& h, const RationalVector& x) {
    if (x.size() != h.dim) throw DimensionError("point length does not match H-representation");
    for (const AffineEquality& eq : h.equalities) {
        if (eq.evaluate(x) != 0) return false;
    }
    for (const HalfSpace& hs : h.halfspaces) {
        if (hs.evaluate(x) < 0) return false;
    }
    return true;
}

/// A correlation matrix outside C_n that satisfies every Bell inequality,
/// together with the Farkas certificate of LP infeasibility.
struct GapWitness {
    CorrelationMatrix sigma;
    RationalVector certificate;
};

namespace detail {

/// Checks both halves of the witness property; certificate verified exactly.
inline std::optional<RationalVector> gap_witness_certificate(const CorrelationMatrix& sigma) {
    if (!check_bell(sigma).empty()) return std::nullopt;
    lp::FeasibilityResult result = lp::membership(sigma);
    if (result.feasible) return std::nullopt;
    return std::move(result.certificate);
}

} // namespace detail

/// Searches for evidence that the Bell system is not sufficient at this n.
/// Deterministic scan of the all-equal family s_ij = c over the grid
/// c = -1/3 + j/30 (inside [-1/3, 0)); the first grid point already works for
/// every n >= 5 because the all-equal matrix then has the negative eigenvalue
/// 1 + (n-1)c while every Bell value is 1 + 3c or 1 - c >= 0. A seeded
/// random-perturbation fallback follows, for robustness only.
inline GapWitness gap_search(int n, std::uint64_t seed = 0) {
    if (n < 5) {
        throw SizeError("gap_search needs n >= 5; the Bell system is sufficient for n <= 4");
    }
    check_spin_count(n);
    const std::size_t pairs = pair_count(n);

    for (int j = 0; j < 10; ++j) {
        const Rational c = Rational(-1, 3) + Rational(j, 30);
        const CorrelationMatrix sigma(n, RationalVector(pairs, c));
        if (auto certificate = detail::gap_witness_certificate(sigma)) {
            return GapWitness{sigma, std::move(*certificate)};
        }
    }

    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 512; ++attempt) {
        SplitMix64 stream = rng.split();
        const Rational base = Rational(-1, 3) + Rational(static_cast<long long>(stream.below(30)), 90);
        RationalVector upper(pairs);
        for (Rational& s : upper) {
            const long long jitter = static_cast<long long>(stream.below(61)) - 30;
            s = base + Rational(jitter, 900);
            if (s < -1) s = -1;
            if (s > 1) s = 1;
        }
        const CorrelationMatrix sigma(n, std::move(upper));
        if (auto certificate = detail::gap_witness_certificate(sigma)) {
            return GapWitness{sigma, std::move(*certificate)};
        }
    }
    throw SearchError("gap search exhausted without a witness for n=" + std::to_string(n));
}

} // namespace spinpoly::geometry
