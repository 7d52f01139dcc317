#include "sidon/repfn.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace sidon {

IntSet::IntSet(std::vector<long long> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    if (std::adjacent_find(values_.begin(), values_.end()) != values_.end()) {
        throw Error("IntSet: duplicate element");
    }
}

IntSet IntSet::interval(long long lo, long long hi) {
    IntSet s;
    for (long long x = lo; x <= hi; ++x) s.values_.push_back(x);
    return s;
}

bool IntSet::contains(long long x) const {
    return std::binary_search(values_.begin(), values_.end(), x);
}

IntSet negate_set(const IntSet& a) {
    std::vector<long long> out;
    out.reserve(a.size());
    for (auto x : a.values()) out.push_back(-x);
    return IntSet(std::move(out));
}

Count RepProfile::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), Count{0});
}

RepProfile rep_profile(const IntSet& a, const IntSet& b) {
    if (a.empty() || b.empty()) return {};
    const long long lo = a.min() + b.min();
    std::vector<Count> counts(static_cast<std::size_t>(a.max() + b.max() - lo + 1), 0);
    for (auto x : a.values()) {
        for (auto y : b.values()) ++counts[static_cast<std::size_t>(x + y - lo)];
    }
    return RepProfile(lo, std::move(counts));
}

RepProfile cyclic_rep_profile(const IntSet& a, const IntSet& b, int n) {
    if (n < 1) throw Error("cyclic_rep_profile needs n >= 1");
    for (const IntSet* s : {&a, &b}) {
        if (!s->empty() && (s->min() < 1 || s->max() > n)) throw Error("cyclic_rep_profile: element outside {1..n}");
    }
    std::vector<Count> counts(static_cast<std::size_t>(n), 0);
    for (auto x : a.values()) {
        for (auto y : b.values()) ++counts[static_cast<std::size_t>(residue(x + y, n) - 1)];
    }
    return RepProfile(1, std::move(counts));
}

RepProfile convolve(const RepProfile& p, const IntSet& b) {
    if (p.empty() || b.empty()) return {};
    const long long lo = p.lo() + b.min();
    std::vector<Count> counts(static_cast<std::size_t>(p.hi() + b.max() - lo + 1), 0);
    const auto src = p.counts();
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] == 0) continue;
        for (auto y : b.values()) {
            auto& slot = counts[static_cast<std::size_t>(static_cast<long long>(i) + p.lo() + y - lo)];
            slot = add_count(slot, src[i]);
        }
    }
    return RepProfile(lo, std::move(counts));
}

IntSet interval_compress(long long size) {
    if (size < 1) throw Error("interval_compress needs size >= 1");
    const long long half = (size + 1) / 2;
    return IntSet::interval(-half, half);
}

Count additive_energy(std::span<const IntSet> sets) {
    if (sets.size() < 2) throw Error("additive_energy needs at least two sets");
    for (const auto& s : sets) {
        if (s.empty()) return 0;
    }
    if (sets.size() == 2) return rep_profile(sets[0], sets[1])[0];
    RepProfile acc = rep_profile(sets[0], sets[1]);
    for (std::size_t i = 2; i + 1 < sets.size(); ++i) acc = convolve(acc, sets[i]);
    Count total = 0;
    for (auto y : sets.back().values()) total = add_count(total, acc[-y]);
    return total;
}

Count closed_rep_two_intervals(long long alpha, long long beta, long long m) {
    if (alpha < 1 || alpha > beta) throw Error("closed_rep_two_intervals needs 1 <= alpha <= beta");
    const long long am = std::llabs(m);
    if (am <= beta - alpha) return 2 * alpha + 1;
    if (am <= alpha + beta) return beta + alpha + 1 - am;
    return 0;
}

Count closed_rep_one_interval(long long alpha, long long m) {
    if (alpha < 1) throw Error("closed_rep_one_interval needs alpha >= 1");
    const long long am = std::llabs(m);
    return am <= 2 * alpha ? 2 * alpha + 1 - am : 0;
}

Count closed_energy4_interval(long long alpha) {
    if (alpha < 1) throw Error("closed_energy4_interval needs alpha >= 1");
    // 16a^3 + 14a = 2a(8a^2 + 7) is divisible by 3 for every integer a.
    return (16 * alpha * alpha * alpha + 14 * alpha) / 3 + 8 * alpha * alpha + 1;
}

namespace {

void check_interval_family(long long a1, long long a2, long long a3, long long a4) {
    if (a1 < 1 || a2 < 1 || a3 < 1 || a4 < 1) throw Error("interval half-widths must be >= 1");
    if ((a1 + a2 + a3 + a4) % 4 != 0) throw Error("sum of half-widths must be divisible by 4");
}

}  // namespace

Dominance sum_dominance(long long a1, long long a2, long long a3, long long a4, long long m) {
    check_interval_family(a1, a2, a3, a4);
    const long long alpha = a1 + a2 + a3 + a4;
    if (2 * std::llabs(m) > alpha) throw Error("sum_dominance needs |m| <= alpha/2");
    const auto j = IntSet::interval(-alpha / 4, alpha / 4);
    const auto p12 = rep_profile(IntSet::interval(-a1, a1), IntSet::interval(-a2, a2));
    const auto p34 = rep_profile(IntSet::interval(-a3, a3), IntSet::interval(-a4, a4));
    return {p12[m] + p34[m], 2 * rep_profile(j, j)[m]};
}

bool check_sum_dominance(long long a1, long long a2, long long a3, long long a4, long long m) {
    return sum_dominance(a1, a2, a3, a4, m).holds();
}

Dominance product_energy_dominance(long long a1, long long a2, long long a3, long long a4) {
    check_interval_family(a1, a2, a3, a4);
    const long long alpha = a1 + a2 + a3 + a4;
    const auto j = IntSet::interval(-alpha / 4, alpha / 4);
    const auto pj = rep_profile(j, j);
    const auto p12 = rep_profile(IntSet::interval(-a1, a1), IntSet::interval(-a2, a2));
    const auto p34 = rep_profile(IntSet::interval(-a3, a3), IntSet::interval(-a4, a4));
    Dominance d;
    for (long long m = p12.lo(); m <= p12.hi(); ++m) d.lhs += p12[m] * p34[m];
    for (long long m = -alpha / 2; m <= alpha / 2; ++m) d.rhs += pj[m] * pj[m];
    return d;
}

bool check_lev(std::span<const IntSet> sets) {
    if (sets.size() < 2) throw Error("check_lev needs at least two sets");
    std::vector<IntSet> compressed;
    compressed.reserve(sets.size());
    for (const auto& s : sets) {
        if (s.empty()) throw Error("check_lev needs nonempty sets");
        compressed.push_back(interval_compress(s));
    }
    return additive_energy(sets) <= additive_energy(compressed);
}

}  // namespace sidon
