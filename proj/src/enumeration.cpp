#include "sidon/enumeration.hpp"

#include <algorithm>

namespace sidon {

Count pairs_with_sum(long long sum, int n) {
    const long long lo = std::max(1LL, sum - n);
    const long long hi = (sum - 1) / 2;
    return hi >= lo ? hi - lo + 1 : 0;
}

QuadStream::QuadStream(int n) : n_(n), sum_(2) {
    if (n < 1) throw Error("QuadStream needs n >= 1");
    outer_ = a_lo_ - 1;  // forces start_sum on the first call
}

void QuadStream::start_sum() {
    a_lo_ = std::max(1LL, sum_ - n_);
    a_hi_ = (sum_ - 1) / 2;
    outer_ = a_hi_ - 1;
    inner_ = a_hi_;
}

std::optional<SidonQuad> QuadStream::next() {
    while (true) {
        if (outer_ >= a_lo_ && inner_ > outer_) {
            SidonQuad q{static_cast<int>(sum_ - outer_), static_cast<int>(sum_ - inner_), static_cast<int>(inner_),
                        static_cast<int>(outer_)};
            if (--inner_ <= outer_) {
                --outer_;
                inner_ = a_hi_;
            }
            return q;
        }
        if (sum_ >= 2LL * n_ - 1) return std::nullopt;
        ++sum_;
        start_sum();
    }
}

std::vector<SidonQuad> enumerate_quads(int n) {
    if (n < 1) throw Error("enumerate_quads needs n >= 1");
    std::vector<SidonQuad> out;
    out.reserve(static_cast<std::size_t>(total_quads_formula(n)));
    for_each_quad(n, [&](const SidonQuad& q) { out.push_back(q); });
    return out;
}

Count total_quads_formula(long long n) {
    if (n < 1) throw Error("total_quads_formula needs n >= 1");
    // (2n^3 - 9n^2 + 10n - 3[n odd]) / 24
    const __int128 m = n;
    const __int128 num = 2 * m * m * m - 9 * m * m + 10 * m - (n % 2 != 0 ? 3 : 0);
    return static_cast<Count>(num / 24);
}

Count count_quads_by_sums(int n) {
    if (n < 1) throw Error("count_quads_by_sums needs n >= 1");
    Count total = 0;
    for (long long l = 3; l <= 2LL * n - 1; ++l) {
        const Count p = pairs_with_sum(l, n);
        total = add_count(total, p * (p - 1) / 2);
    }
    return total;
}

void write_quads_csv(int n, std::ostream& out) {
    for_each_quad(n, [&](const SidonQuad& q) { out << q.x1 << ',' << q.x2 << ',' << q.x3 << ',' << q.x4 << '\n'; });
}

std::vector<ModularSidonQuad> enumerate_modular_quads(int k) {
    if (k < 1) throw Error("enumerate_modular_quads needs k >= 1");
    std::vector<ModularSidonQuad> out;
    for (int a = 1; a <= k; ++a) {
        for (int b = a + 1; b <= k; ++b) {
            for (int c = a; c <= k; ++c) {
                for (int d = c + 1; d <= k; ++d) {
                    if (c == a && d <= b) continue;  // pair_b must follow pair_a
                    if (c == a || c == b || d == a || d == b) continue;
                    if ((a + b - c - d) % k != 0) continue;
                    out.push_back({a, b, c, d});
                }
            }
        }
    }
    return out;
}

ModularCount modular_count_formula(long long k) {
    if (k < 1) throw Error("modular_count_formula needs k >= 1");
    // (k^3 - 4k^2 + 4k) / 8 for even k, (k^3 - 4k^2 + 3k) / 8 for odd k.
    const __int128 m = k;
    const __int128 num = m * m * m - 4 * m * m + (k % 2 == 0 ? 4 : 3) * m;
    if (k < 4) return {0, false};
    return {static_cast<Count>(num / 8), true};
}

std::map<int, std::vector<ModularSidonQuad>> partition_modular(int k) {
    if (k < 4) throw Error("partition_modular needs k >= 4");
    std::map<int, std::vector<ModularSidonQuad>> buckets;
    for (int u = 1; u <= k; ++u) buckets[u];
    for (const auto& q : enumerate_modular_quads(k)) buckets[static_cast<int>(residue(q.a + q.b, k))].push_back(q);
    return buckets;
}

Count f_n_exact(int n, int b, int a) {
    if (b < 1 || a > n || b >= a) throw Error("f_n_exact needs 1 <= b < a <= n");
    Count count = 0;
    // a and b on the same side: another pair {x < y} with x + y = a + b.
    const long long s = static_cast<long long>(a) + b;
    for (long long x = std::max(1LL, s - n); 2 * x < s; ++x) {
        if (x != b) ++count;
    }
    // opposite sides: a + x = b + y, so y = x + (a - b), with x, y outside {a, b}.
    const long long d = a - b;
    for (long long x = 1; x + d <= n; ++x) {
        const long long y = x + d;
        if (x == a || x == b || y == a || y == b) continue;
        ++count;
    }
    return count;
}

}  // namespace sidon
