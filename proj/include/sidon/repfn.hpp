// repfn.hpp
//
// Representation functions r_{A+B}(m) = #{(a,b) in A x B : a + b = m},
// t-fold additive energy E_t(A_1..A_t) = #{tuples summing to 0}, interval
// compression I(J) = [-ceil(|J|/2), ceil(|J|/2)], and closed forms for the
// representation counts and 4-fold energy of symmetric intervals.
//
// Everything is exact integer arithmetic. Profiles are built by direct
// pairwise accumulation.

#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "sidon/core.hpp"

namespace sidon {

class IntSet {
public:
    IntSet() = default;
    // Sorts the input; throws Error on duplicates.
    explicit IntSet(std::vector<long long> values);
    IntSet(std::initializer_list<long long> values) : IntSet(std::vector<long long>(values)) {}

    // [lo, hi], empty when lo > hi.
    static IntSet interval(long long lo, long long hi);

    std::span<const long long> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    long long min() const { return values_.front(); }
    long long max() const { return values_.back(); }
    bool contains(long long x) const;

    friend bool operator==(const IntSet&, const IntSet&) = default;

private:
    std::vector<long long> values_;
};

IntSet negate_set(const IntSet& a);

class RepProfile {
public:
    RepProfile() = default;
    RepProfile(long long lo, std::vector<Count> counts) : lo_(lo), counts_(std::move(counts)) {}

    long long lo() const { return lo_; }
    long long hi() const { return lo_ + static_cast<long long>(counts_.size()) - 1; }
    bool empty() const { return counts_.empty(); }
    std::span<const Count> counts() const { return counts_; }

    // r(m); zero outside [lo, hi].
    Count operator[](long long m) const {
        if (counts_.empty() || m < lo_ || m > hi()) return 0;
        return counts_[static_cast<std::size_t>(m - lo_)];
    }
    Count total() const;

    friend bool operator==(const RepProfile&, const RepProfile&) = default;

private:
    long long lo_ = 0;
    std::vector<Count> counts_;
};

// Support is exactly [min A + min B, max A + max B]; empty when either set
// is empty.
RepProfile rep_profile(const IntSet& a, const IntSet& b);

// Counts indexed by residues {1..n}: r(m) = #{(a,b) : a + b == m mod n}.
// Both sets must lie in {1..n}.
RepProfile cyclic_rep_profile(const IntSet& a, const IntSet& b, int n);

// Profile of a + b for a drawn from the profile and b from the set.
RepProfile convolve(const RepProfile& p, const IntSet& b);

IntSet interval_compress(long long size);
inline IntSet interval_compress(const IntSet& a) { return interval_compress(static_cast<long long>(a.size())); }

// E_t for t = sets.size() >= 2.
Count additive_energy(std::span<const IntSet> sets);
inline Count additive_energy(std::initializer_list<IntSet> sets) {
    return additive_energy(std::span<const IntSet>(sets.begin(), sets.size()));
}

// r_{A+B}(m) for A = [-alpha, alpha], B = [-beta, beta], 1 <= alpha <= beta.
Count closed_rep_two_intervals(long long alpha, long long beta, long long m);
// r_{J+J}(m) for J = [-alpha, alpha].
Count closed_rep_one_interval(long long alpha, long long m);
// E_4(J,J,J,J) = 16a^3/3 + 8a^2 + 14a/3 + 1 for J = [-a, a].
Count closed_energy4_interval(long long alpha);

struct Dominance {
    Count lhs = 0;  // r_{A1+A2}(m) + r_{A3+A4}(m)
    Count rhs = 0;  // 2 r_{J+J}(m), J = [-alpha/4, alpha/4]
    bool holds() const { return lhs <= rhs; }
};

// A_i = [-alpha_i, alpha_i] with alpha_i >= 1 and 4 | sum; |m| <= sum/2.
Dominance sum_dominance(long long a1, long long a2, long long a3, long long a4, long long m);
bool check_sum_dominance(long long a1, long long a2, long long a3, long long a4, long long m);

// sum_m r_{A1+A2}(m) r_{A3+A4}(m) against sum_{|m| <= alpha/2} r_{J+J}(m)^2,
// same preconditions as sum_dominance minus m.
Dominance product_energy_dominance(long long a1, long long a2, long long a3, long long a4);

// E_t(A_1..A_t) <= E_t(I(A_1)..I(A_t)); all sets nonempty.
bool check_lev(std::span<const IntSet> sets);

}  // namespace sidon
