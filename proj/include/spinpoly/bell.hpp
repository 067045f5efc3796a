#pragma once

#include <array>
#include <string>
#include <vector>

#include "spinpoly/correlation.hpp"
#include "spinpoly/errors.hpp"
#include "spinpoly/rational.hpp"

namespace spinpoly {

/// One inequality 1 + e_i e_j s_ij + e_i e_k s_ik + e_j e_k s_jk >= 0 for a
/// triple i<j<k (0-based) and signs e in {-1,+1}^3. Negating all three signs
/// leaves the inequality unchanged, so the stored form has e_i = +1, which
/// leaves 4 canonical sign patterns per triple.
class BellInequality {
public:
    BellInequality(std::array<int, 3> triple, std::array<int, 3> signs)
        : triple_(triple), signs_(signs) {
        if (!(0 <= triple_[0] && triple_[0] < triple_[1] && triple_[1] < triple_[2])) {
            throw InvariantError("bell triple must satisfy 0 <= i < j < k");
        }
        for (int s : signs_) {
            if (s != 1 && s != -1) throw InvariantError("bell sign must be +1 or -1");
        }
        if (signs_[0] == -1) {
            for (int& s : signs_) s = -s;
        }
    }

    const std::array<int, 3>& triple() const { return triple_; }
    const std::array<int, 3>& signs() const { return signs_; }

    /// Coefficients of (s_ij, s_ik, s_jk) in the left-hand side.
    std::array<int, 3> pair_coefficients() const {
        return {signs_[0] * signs_[1], signs_[0] * signs_[2], signs_[1] * signs_[2]};
    }

    friend bool operator==(const BellInequality& a, const BellInequality& b) {
        return a.triple_ == b.triple_ && a.signs_ == b.signs_;
    }

    friend bool operator<(const BellInequality& a, const BellInequality& b) {
        if (a.triple_ != b.triple_) return a.triple_ < b.triple_;
        // +1 before -1, matching the sign-vector order
        for (int t = 0; t < 3; ++t) {
            if (a.signs_[t] != b.signs_[t]) return a.signs_[t] > b.signs_[t];
        }
        return false;
    }

private:
    std::array<int, 3> triple_;
    std::array<int, 3> signs_;
};

/// All 4*C(n,3) canonical inequalities, sorted by triple then by sign pattern.
inline std::vector<BellInequality> bell_system(int n) {
    if (n < 1) throw InvariantError("bell_system needs n >= 1");
    static constexpr std::array<std::array<int, 2>, 4> jk_signs{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    std::vector<BellInequality> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                for (const auto& jk : jk_signs) {
                    out.push_back(BellInequality({i, j, k}, {1, jk[0], jk[1]}));
                }
            }
        }
    }
    return out;
}

/// Exact left-hand side of the inequality at sigma.
inline Rational evaluate_bell(const BellInequality& ineq, const CorrelationMatrix& sigma) {
    const auto& [i, j, k] = ineq.triple();
    if (k >= sigma.size()) {
        throw DimensionError("bell triple index " + std::to_string(k + 1) + " exceeds n=" +
                             std::to_string(sigma.size()));
    }
    const auto c = ineq.pair_coefficients();
    const int n = sigma.size();
    return Rational(1) + c[0] * sigma.upper()[pair_index(i, j, n)] +
           c[1] * sigma.upper()[pair_index(i, k, n)] +
           c[2] * sigma.upper()[pair_index(j, k, n)];
}

/// The violated inequalities (strictly negative left-hand side), in system order.
/// An empty result means sigma satisfies every Bell inequality.
inline std::vector<BellInequality> check_bell(const CorrelationMatrix& sigma) {
    std::vector<BellInequality> violated;
    for (const BellInequality& ineq : bell_system(sigma.size())) {
        if (evaluate_bell(ineq, sigma) < 0) violated.push_back(ineq);
    }
    return violated;
}

} // namespace spinpoly
