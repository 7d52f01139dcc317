// enumeration.hpp
//
// Sidon 4-sets of [n] and of Z_k: streaming enumeration, closed-form and
// sum-by-sum totals, and the number f_n of Sidon 4-sets through a fixed pair.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "sidon/core.hpp"

namespace sidon {

// Number of unordered pairs {a < b} in [n] with a + b = sum.
Count pairs_with_sum(long long sum, int n);

// Yields every canonical SidonQuad of [n] once, ordered by side sum
// ascending and then by (x1, x2, x3, x4) ascending.
class QuadStream {
public:
    explicit QuadStream(int n);
    std::optional<SidonQuad> next();

private:
    void start_sum();

    int n_;
    long long sum_;
    long long a_lo_ = 0, a_hi_ = -1;  // smaller elements of pairs with this sum
    long long outer_ = 0, inner_ = 0;
};

template <class F>
void for_each_quad(int n, F&& fn) {
    for (long long l = 3; l <= 2LL * n - 1; ++l) {
        const long long lo = std::max(1LL, l - n);
        const long long hi = (l - 1) / 2;
        for (long long p = hi - 1; p >= lo; --p) {
            for (long long q = hi; q > p; --q) {
                fn(SidonQuad{static_cast<int>(l - p), static_cast<int>(l - q), static_cast<int>(q), static_cast<int>(p)});
            }
        }
    }
}

// Every Sidon 4-set of [n] containing element x, each exactly once. The
// callback receives the quad's other three elements as (partner, y, z):
// x + partner = y + z.
template <class F>
void for_each_quad_containing(int n, int x, F&& fn) {
    for (int partner = 1; partner <= n; ++partner) {
        if (partner == x) continue;
        const long long s = static_cast<long long>(x) + partner;
        const long long lo = std::max(1LL, s - n);
        for (long long y = lo; 2 * y < s; ++y) {
            const long long z = s - y;
            if (y == x || y == partner || z == x || z == partner) continue;
            fn(partner, static_cast<int>(y), static_cast<int>(z));
        }
    }
}

std::vector<SidonQuad> enumerate_quads(int n);

// n^3/12 - 3n^2/8 + 5n/12 - theta, theta = 0 (n even) or 1/8 (n odd).
Count total_quads_formula(long long n);

// sum over l of C(p(l), 2), p(l) = pairs_with_sum(l, n).
Count count_quads_by_sums(int n);

void write_quads_csv(int n, std::ostream& out);

std::vector<ModularSidonQuad> enumerate_modular_quads(int k);

struct ModularCount {
    Count value = 0;
    bool formula_valid = false;  // false for k < 4
};

// k^3/8 - k^2/2 + theta k, theta = 1/2 (k even) or 3/8 (k odd).
ModularCount modular_count_formula(long long k);

// Buckets S(k, u) for u in {1..k}: quads whose pairs sum to u mod k.
std::map<int, std::vector<ModularSidonQuad>> partition_modular(int k);

// Number of Sidon 4-sets of [n] containing both b and a, 1 <= b < a <= n.
Count f_n_exact(int n, int b, int a);

}  // namespace sidon
