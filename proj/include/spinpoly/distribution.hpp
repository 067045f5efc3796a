#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spinpoly/correlation.hpp"
#include "spinpoly/errors.hpp"
#include "spinpoly/rational.hpp"
#include "spinpoly/sign_vector.hpp"

namespace spinpoly {

/// Exact joint law of n spins. Sign symmetry weight(w) = weight(-w) is an
/// invariant of the type: it forces zero mean and fair +-1 marginals, so the
/// second moments are genuine correlations. Zero weights are not stored.
class JointSpinDistribution {
public:
    JointSpinDistribution(int n, std::map<SignVector, Rational> weights) : n_(n) {
        check_spin_count(n_);
        Rational total(0);
        for (auto& [atom, w] : weights) {
            if (atom.size() != n_) {
                throw DimensionError("atom " + atom.to_string() + " has wrong length for n=" +
                                     std::to_string(n_));
            }
            if (w < 0) throw InvariantError("negative probability weight " + rational_string(w));
            if (w == 0) continue;
            total += w;
            weights_.emplace(atom, w);
        }
        if (total != 1) {
            throw InvariantError("probability weights sum to " + rational_string(total) + ", not 1");
        }
        for (const auto& [atom, w] : weights_) {
            if (weight(atom.negated()) != w) {
                throw InvariantError("sign symmetry violated at atom " + atom.to_string());
            }
        }
    }

    int size() const { return n_; }
    const std::map<SignVector, Rational>& weights() const { return weights_; }

    Rational weight(const SignVector& atom) const {
        const auto it = weights_.find(atom);
        return it == weights_.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const JointSpinDistribution& a, const JointSpinDistribution& b) {
        return a.n_ == b.n_ && a.weights_ == b.weights_;
    }

private:
    int n_;
    std::map<SignVector, Rational> weights_;
};

/// Builds the sign-symmetric law with the given weight per canonical sign
/// class, splitting each class weight equally between w and -w. Class order
/// is the canonical (lexicographic) order used everywhere.
inline JointSpinDistribution realize(const RationalVector& class_weights, int n) {
    if (class_weights.size() != sign_class_count(n)) {
        throw InvariantError("expected " + std::to_string(sign_class_count(n)) +
                             " class weights, got " + std::to_string(class_weights.size()));
    }
    Rational total(0);
    for (const Rational& w : class_weights) {
        if (w < 0) throw InvariantError("negative class weight " + rational_string(w));
        total += w;
    }
    if (total != 1) {
        throw InvariantError("class weights sum to " + rational_string(total) + ", not 1");
    }
    std::map<SignVector, Rational> weights;
    const std::vector<SignVector> reps = sign_class_representatives(n);
    for (std::size_t c = 0; c < reps.size(); ++c) {
        if (class_weights[c] == 0) continue;
        const Rational half = class_weights[c] / 2;
        weights[reps[c]] += half;
        weights[reps[c].negated()] += half;
    }
    return JointSpinDistribution(n, std::move(weights));
}

/// Second moments s_ij = sum_w weight(w) w_i w_j, exact. Always lands in [-1,1].
inline CorrelationMatrix correlations_of(const JointSpinDistribution& dist) {
    const int n = dist.size();
    RationalVector upper(pair_count(n), Rational(0));
    for (const auto& [atom, w] : dist.weights()) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                upper[pair_index(i, j, n)] += w * (atom.entry(i) * atom.entry(j));
            }
        }
    }
    return CorrelationMatrix(n, std::move(upper));
}

} // namespace spinpoly
