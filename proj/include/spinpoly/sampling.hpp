#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "spinpoly/correlation.hpp"
#include "spinpoly/distribution.hpp"
#include "spinpoly/errors.hpp"
#include "spinpoly/rational.hpp"

namespace spinpoly {

/// splitmix64: the well-known 64-bit mix generator. Splittable: a child stream
/// seeded from next() is independent of the parent's subsequent output.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    SplitMix64 split() { return SplitMix64(next()); }

    /// Uniform draw from [0, bound), bound >= 1, via rejection on the top range.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t r = next();
        while (r >= limit) r = next();
        return r % bound;
    }

private:
    std::uint64_t state_;
};

inline constexpr const char* kGeneratorName = "splitmix64";

/// Monte-Carlo estimate of the correlations of a distribution. The estimates
/// themselves are exact rationals (pair sums over count); the standard errors
/// sqrt((1 - s^2)/count) are the only floating-point output in the library.
struct SampleSummary {
    int n = 0;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
    std::string generator; // algorithm name, part of the reproducibility metadata
    RationalVector sigma_hat;
    std::vector<double> standard_error;

    friend bool operator==(const SampleSummary& a, const SampleSummary& b) {
        return a.n == b.n && a.count == b.count && a.seed == b.seed &&
               a.generator == b.generator && a.sigma_hat == b.sigma_hat &&
               a.standard_error == b.standard_error;
    }
};

/// Deterministic for a fixed (dist, count, seed). Atoms are drawn by inverting
/// the exact cumulative weights against a 64-bit uniform: atom c is selected
/// when the draw lands in [floor(2^64 cum_{c-1}), floor(2^64 cum_c)), which
/// reproduces each weight to within 2^-64.
inline SampleSummary sample_correlations(const JointSpinDistribution& dist, std::uint64_t count,
                                         std::uint64_t seed) {
    if (count < 1) throw InvariantError("sample count must be >= 1");
    const int n = dist.size();
    const std::size_t pairs = pair_count(n);

    std::vector<const SignVector*> atoms;
    std::vector<std::uint64_t> upper_bounds; // exclusive, for all atoms but the last
    Rational cumulative(0);
    for (const auto& [atom, w] : dist.weights()) {
        atoms.push_back(&atom);
        cumulative += w;
        if (cumulative < 1) {
            const BigInt scaled = (numerator(cumulative) << 64) / denominator(cumulative);
            upper_bounds.push_back(scaled.convert_to<std::uint64_t>());
        }
    }
    if (cumulative != 1) throw InternalError("distribution weights no longer sum to 1");

    SplitMix64 rng(seed);
    std::vector<long long> pair_sums(pairs, 0);
    for (std::uint64_t draw = 0; draw < count; ++draw) {
        const std::uint64_t r = rng.next();
        const auto it = std::upper_bound(upper_bounds.begin(), upper_bounds.end(), r);
        const SignVector& atom = *atoms[static_cast<std::size_t>(it - upper_bounds.begin())];
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                pair_sums[pair_index(i, j, n)] += atom.entry(i) * atom.entry(j);
            }
        }
    }

    SampleSummary out;
    out.n = n;
    out.count = count;
    out.seed = seed;
    out.generator = kGeneratorName;
    out.sigma_hat.reserve(pairs);
    out.standard_error.reserve(pairs);
    for (std::size_t p = 0; p < pairs; ++p) {
        const Rational estimate(BigInt(pair_sums[p]), BigInt(count));
        out.sigma_hat.push_back(estimate);
        const double e = estimate.convert_to<double>();
        out.standard_error.push_back(std::sqrt(std::max(0.0, 1.0 - e * e) / static_cast<double>(count)));
    }
    return out;
}

} // namespace spinpoly
