#include "sidon/counting.hpp"

#include <algorithm>
#include <array>

#include "sidon/enumeration.hpp"
#include "sidon/repfn.hpp"

namespace sidon {

namespace {

void require_domain(const Coloring& c, Domain d, const char* what) {
    if (c.domain() != d) {
        throw Error(std::string(what) + " expects a " + std::string(domain_name(d)) + " coloring");
    }
}

int distinct_colors(int a, int b, int c, int d) {
    std::array<int, 4> v{a, b, c, d};
    std::sort(v.begin(), v.end());
    return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
}

std::vector<IntSet> class_sets(const Coloring& c) {
    std::vector<IntSet> out;
    for (auto& cls : c.color_classes()) out.emplace_back(std::vector<long long>(cls.begin(), cls.end()));
    return out;
}

// sum_m p[m] q[m] restricted to m in [lo, hi].
Count dot(const RepProfile& p, const RepProfile& q, long long lo, long long hi) {
    if (p.empty() || q.empty()) return 0;
    lo = std::max({lo, p.lo(), q.lo()});
    hi = std::min({hi, p.hi(), q.hi()});
    Count s = 0;
    for (long long m = lo; m <= hi; ++m) s = add_count(s, p[m] * q[m]);
    return s;
}

// Sum over 4-color sets and their three pairings, l restricted to [lo, hi].
Count pairing_sum(const std::vector<std::vector<RepProfile>>& prof, int k, long long lo, long long hi) {
    Count total = 0;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            for (int s = j + 1; s < k; ++s) {
                for (int t = s + 1; t < k; ++t) {
                    total = add_count(total, dot(prof[i][j], prof[s][t], lo, hi));
                    total = add_count(total, dot(prof[i][s], prof[j][t], lo, hi));
                    total = add_count(total, dot(prof[i][t], prof[j][s], lo, hi));
                }
            }
        }
    }
    return total;
}

Count chunked_pairing_sum(const std::vector<std::vector<RepProfile>>& prof, int k, long long lo, long long hi,
                          int chunks) {
    chunks = std::max(1, chunks);
    const long long width = hi - lo + 1;
    Count total = 0;
    for (int ch = 0; ch < chunks; ++ch) {
        const long long a = lo + width * ch / chunks;
        const long long b = lo + width * (ch + 1) / chunks - 1;
        if (a <= b) total = add_count(total, pairing_sum(prof, k, a, b));
    }
    return total;
}

}  // namespace

QuadClass classify_quad(const SidonQuad& q, const Coloring& c) {
    require_domain(c, Domain::Interval, "classify_quad");
    if (q.x4 < 1 || q.x1 > c.n()) throw Error("quad outside the coloring's ground set");
    switch (distinct_colors(c(q.x1), c(q.x2), c(q.x3), c(q.x4))) {
        case 4: return QuadClass::Rainbow;
        case 3: return QuadClass::ThreeColored;
        case 2: return QuadClass::TwoColored;
        default: return QuadClass::Monochromatic;
    }
}

ClassBreakdown count_rainbow_naive(const Coloring& c) {
    require_domain(c, Domain::Interval, "count_rainbow_naive");
    ClassBreakdown out;
    for_each_quad(c.n(), [&](const SidonQuad& q) {
        switch (distinct_colors(c(q.x1), c(q.x2), c(q.x3), c(q.x4))) {
            case 4: ++out.rainbow; break;
            case 3: ++out.three_colored; break;
            case 2: ++out.two_colored; break;
            default: ++out.monochromatic; break;
        }
    });
    return out;
}

Count count_rainbow_fast(const Coloring& c, const FastCountOptions& opts) {
    require_domain(c, Domain::Interval, "count_rainbow_fast");
    const int k = c.k();
    if (k < 4) return 0;
    const auto pairs = static_cast<std::size_t>(k) * static_cast<std::size_t>(k - 1) / 2;
    const auto bytes = pairs * (2 * static_cast<std::size_t>(c.n()) + 1) * sizeof(Count);
    if (bytes > opts.memory_budget_bytes) return count_rainbow_naive(c).rainbow;

    const auto sets = class_sets(c);
    std::vector<std::vector<RepProfile>> prof(static_cast<std::size_t>(k), std::vector<RepProfile>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            prof[i][j] = rep_profile(sets[i], sets[j]);
            prof[j][i] = prof[i][j];
        }
    }
    return chunked_pairing_sum(prof, k, 1, 2LL * c.n(), opts.chunks);
}

Count rainbow_via_energy(const Coloring& c) {
    require_domain(c, Domain::Interval, "rainbow_via_energy");
    if (c.k() != 4) throw Error("rainbow_via_energy needs exactly 4 colors");
    const auto x = class_sets(c);
    return add_count(add_count(additive_energy({x[0], x[1], negate_set(x[2]), negate_set(x[3])}),
                               additive_energy({x[0], x[2], negate_set(x[1]), negate_set(x[3])})),
                     additive_energy({x[0], x[3], negate_set(x[1]), negate_set(x[2])}));
}

Count count_rainbow_cyclic_naive(const Coloring& c) {
    require_domain(c, Domain::Cyclic, "count_rainbow_cyclic_naive");
    const int n = c.n();
    Count total = 0;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            const long long s = a + b;
            for (int x = a + 1; x <= n; ++x) {
                const long long y = residue(s - x, n);
                if (y <= x) continue;
                if (x == b || y == b) continue;
                if (distinct_colors(c(a), c(b), c(x), c(y)) == 4) ++total;
            }
        }
    }
    return total;
}

Count count_rainbow_cyclic_fast(const Coloring& c) {
    require_domain(c, Domain::Cyclic, "count_rainbow_cyclic_fast");
    const int k = c.k();
    if (k < 4) return 0;
    const auto sets = class_sets(c);
    std::vector<std::vector<RepProfile>> prof(static_cast<std::size_t>(k), std::vector<RepProfile>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            prof[i][j] = cyclic_rep_profile(sets[i], sets[j], c.n());
            prof[j][i] = prof[i][j];
        }
    }
    return pairing_sum(prof, k, 1, c.n());
}

Count count_rainbow(const Coloring& c) {
    return c.domain() == Domain::Interval ? count_rainbow_fast(c) : count_rainbow_cyclic_fast(c);
}

MonochromaticPairs monochromatic_pairs(const Coloring& c) {
    require_domain(c, Domain::Interval, "monochromatic_pairs");
    MonochromaticPairs out;
    for (const auto& cls : c.color_classes()) {
        const auto s = static_cast<Count>(cls.size());
        out.count += s * (s - 1) / 2;
    }
    const Rational n = c.n();
    out.lower_bound = n * n / (2 * c.k()) - n / 2;
    return out;
}

Rational non_rainbow_lower_bound(const Coloring& c) {
    require_domain(c, Domain::Interval, "non_rainbow_lower_bound");
    Count sum = 0;
    for (const auto& cls : c.color_classes()) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
            for (std::size_t j = i + 1; j < cls.size(); ++j) sum = add_count(sum, f_n_exact(c.n(), cls[i], cls[j]));
        }
    }
    return Rational(sum) / 6;
}

}  // namespace sidon
