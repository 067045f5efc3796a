#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinpoly/errors.hpp"

namespace spinpoly {

// Enumeration guard: atoms (2^n) and vertex classes (2^(n-1)) stay desk-scale.
inline constexpr int kMaxSpinCount = 12;

inline void check_spin_count(int n) {
    if (n < 1 || n > kMaxSpinCount) {
        throw SizeError("spin count " + std::to_string(n) + " outside enumeration guard [1, " +
                        std::to_string(kMaxSpinCount) + "]");
    }
}

/// An element of {-1,+1}^n. The pair {w, -w} forms a sign class; the canonical
/// class representative has first entry +1. Ordering is lexicographic with +1
/// sorting before -1, so the all-plus vector comes first.
class SignVector {
public:
    explicit SignVector(std::vector<int> entries) {
        if (entries.empty()) throw InvariantError("sign vector must be nonempty");
        entries_.reserve(entries.size());
        for (int e : entries) {
            if (e != 1 && e != -1) {
                throw InvariantError("sign vector entry must be +1 or -1, got " + std::to_string(e));
            }
            entries_.push_back(static_cast<std::int8_t>(e));
        }
    }

    /// Representative of the index-th canonical sign class of {-1,+1}^n,
    /// index in [0, 2^(n-1)). Index order equals the lexicographic order above.
    static SignVector class_representative(int n, std::uint64_t index) {
        check_spin_count(n);
        if (index >= sign_class_count_unchecked(n)) {
            throw InvariantError("sign class index out of range");
        }
        std::vector<int> entries(static_cast<std::size_t>(n), 1);
        for (int j = 1; j < n; ++j) {
            const int bit = static_cast<int>((index >> (n - 1 - j)) & 1u);
            entries[static_cast<std::size_t>(j)] = bit ? -1 : 1;
        }
        return SignVector(std::move(entries));
    }

    int size() const { return static_cast<int>(entries_.size()); }
    int entry(int i) const { return entries_.at(static_cast<std::size_t>(i)); }

    SignVector negated() const {
        std::vector<int> flipped;
        flipped.reserve(entries_.size());
        for (std::int8_t e : entries_) flipped.push_back(-e);
        return SignVector(std::move(flipped));
    }

    bool is_canonical() const { return entries_.front() == 1; }

    /// The member of {w, -w} whose first entry is +1.
    SignVector canonicalized() const { return is_canonical() ? *this : negated(); }

    /// Rendering used across documents: '+' / '-' per entry, e.g. "++-".
    std::string to_string() const {
        std::string s;
        s.reserve(entries_.size());
        for (std::int8_t e : entries_) s += (e == 1 ? '+' : '-');
        return s;
    }

    static SignVector from_string(const std::string& s) {
        std::vector<int> entries;
        entries.reserve(s.size());
        for (char c : s) {
            if (c == '+') entries.push_back(1);
            else if (c == '-') entries.push_back(-1);
            else throw ParseError("bad sign vector character in \"" + s + "\"");
        }
        if (entries.empty()) throw ParseError("empty sign vector string");
        return SignVector(std::move(entries));
    }

    friend bool operator==(const SignVector& a, const SignVector& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const SignVector& a, const SignVector& b) { return !(a == b); }

    // +1 before -1, shorter before longer on a tie prefix
    friend bool operator<(const SignVector& a, const SignVector& b) {
        const std::size_t m = std::min(a.entries_.size(), b.entries_.size());
        for (std::size_t i = 0; i < m; ++i) {
            if (a.entries_[i] != b.entries_[i]) return a.entries_[i] > b.entries_[i];
        }
        return a.entries_.size() < b.entries_.size();
    }

private:
    static std::uint64_t sign_class_count_unchecked(int n) {
        return std::uint64_t{1} << (n - 1);
    }

    std::vector<std::int8_t> entries_;
};

/// 2^(n-1): classes {w,-w} are in bijection with rank-1 vertex matrices.
inline std::uint64_t sign_class_count(int n) {
    check_spin_count(n);
    return std::uint64_t{1} << (n - 1);
}

/// All canonical class representatives, in their lexicographic order.
inline std::vector<SignVector> sign_class_representatives(int n) {
    const std::uint64_t count = sign_class_count(n);
    std::vector<SignVector> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t k = 0; k < count; ++k) {
        out.push_back(SignVector::class_representative(n, k));
    }
    return out;
}

/// All 2^n atoms of {-1,+1}^n in lexicographic order (+1 first).
inline std::vector<SignVector> all_atoms(int n) {
    check_spin_count(n);
    std::vector<SignVector> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
        std::vector<int> entries(static_cast<std::size_t>(n), 1);
        for (int j = 0; j < n; ++j) {
            const int bit = static_cast<int>((k >> (n - 1 - j)) & 1u);
            entries[static_cast<std::size_t>(j)] = bit ? -1 : 1;
        }
        out.emplace_back(std::move(entries));
    }
    return out;
}

} // namespace spinpoly
