#include "sidon/search.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include <json.hpp>

#include "sidon/counting.hpp"
#include "sidon/enumeration.hpp"

namespace sidon {

std::string search_result_json(const SearchResult& r) {
    nlohmann::ordered_json j;
    j["method"] = r.method == SearchMethod::Exhaustive ? "exhaustive" : "local";
    j["exact"] = r.exact;
    j["n"] = r.best_coloring.n();
    j["k"] = r.best_coloring.k();
    j["best_count"] = r.best_count;
    j["seed"] = r.seed;
    j["restarts"] = r.restarts;
    j["moves"] = r.moves;
    j["coloring"] = nlohmann::ordered_json::parse(serialize_coloring(r.best_coloring));
    return j.dump();
}

Count canonical_coloring_count(int n, int k) {
    if (n < 1 || k < 1) throw Error("canonical_coloring_count needs n, k >= 1");
    // Stirling numbers of the second kind, saturating.
    constexpr __int128 cap = std::numeric_limits<Count>::max();
    const int kk = std::min(n, k);
    std::vector<__int128> row(static_cast<std::size_t>(kk) + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, kk); j >= 1; --j) row[j] = std::min(cap, j * row[j] + row[j - 1]);
        row[0] = 0;
    }
    __int128 total = 0;
    for (int j = 1; j <= kk; ++j) total = std::min(cap, total + row[j]);
    return static_cast<Count>(total);
}

std::vector<int> canonical_labels(std::span<const int> colors) {
    std::vector<int> map;
    std::vector<int> out;
    out.reserve(colors.size());
    for (int col : colors) {
        if (static_cast<std::size_t>(col) >= map.size()) map.resize(static_cast<std::size_t>(col) + 1, 0);
        if (map[col] == 0) map[col] = static_cast<int>(std::count_if(map.begin(), map.end(), [](int v) { return v != 0; })) + 1;
        out.push_back(map[col]);
    }
    return out;
}

namespace {

struct Triple {
    int x2, x3, x4;
};

// Quads grouped by their largest element.
std::vector<std::vector<Triple>> quads_by_max(int n) {
    std::vector<std::vector<Triple>> out(static_cast<std::size_t>(n) + 1);
    for_each_quad(n, [&](const SidonQuad& q) { out[q.x1].push_back({q.x2, q.x3, q.x4}); });
    return out;
}

bool all_distinct(int a, int b, int c, int d) {
    return a != b && a != c && a != d && b != c && b != d && c != d;
}

class BranchAndBound {
public:
    BranchAndBound(int n, int k, bool reflection) : n_(n), k_(k), reflection_(reflection), by_max_(quads_by_max(n)) {
        colors_.assign(static_cast<std::size_t>(n) + 1, 0);
        // remaining_[x] = number of quads whose largest element exceeds x
        remaining_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int x = n - 1; x >= 0; --x) remaining_[x] = remaining_[x + 1] + static_cast<Count>(by_max_[x + 1].size());
    }

    void run() { descend(1, 0, 0); }

    Count best() const { return best_; }
    const std::vector<int>& witness() const { return witness_; }

private:
    void descend(int x, int used, Count value) {
        if (x > n_) {
            leaf(value);
            return;
        }
        if (best_ >= 0 && value + remaining_[x - 1] <= best_) return;
        const int top = std::min(k_, used + 1);
        for (int col = 1; col <= top; ++col) {
            colors_[x] = col;
            Count gained = 0;
            for (const auto& t : by_max_[x]) {
                if (all_distinct(col, colors_[t.x2], colors_[t.x3], colors_[t.x4])) ++gained;
            }
            descend(x + 1, std::max(used, col), value + gained);
        }
        colors_[x] = 0;
    }

    void leaf(Count value) {
        if (value <= best_) return;
        std::vector<int> c(colors_.begin() + 1, colors_.end());
        if (reflection_) {
            std::vector<int> mirrored(c.rbegin(), c.rend());
            if (canonical_labels(mirrored) < c) return;
        }
        best_ = value;
        witness_ = std::move(c);
    }

    int n_, k_;
    bool reflection_;
    std::vector<std::vector<Triple>> by_max_;
    std::vector<Count> remaining_;
    std::vector<int> colors_;
    Count best_ = -1;
    std::vector<int> witness_;
};

Count verified(const Coloring& c, Count claimed) {
    const Count actual = count_rainbow_naive(c).rainbow;
    if (actual != claimed) throw Error("search result failed re-verification");
    return actual;
}

}  // namespace

SearchResult exhaustive_ar(int n, int k, const ExhaustiveOptions& opts) {
    if (n < 1 || k < 1) throw Error("exhaustive_ar needs n, k >= 1");
    const Count space = canonical_coloring_count(n, k);
    if (space > opts.max_colorings) {
        throw BudgetExceeded("exhaustive search over " + std::to_string(space) + " canonical colorings exceeds budget " +
                             std::to_string(opts.max_colorings));
    }
    BranchAndBound bb(n, k, opts.reflection_pruning);
    bb.run();
    Coloring best(Domain::Interval, k, bb.witness());
    return SearchResult{.best_count = verified(best, bb.best()),
                        .best_coloring = best,
                        .method = SearchMethod::Exhaustive,
                        .restarts = 0,
                        .moves = 0,
                        .seed = 0,
                        .exact = true};
}

std::vector<Count> recolor_deltas(const Coloring& c, int i) {
    if (c.domain() != Domain::Interval) throw Error("recolor_deltas expects an interval coloring");
    if (i < 1 || i > c.n()) throw Error("element out of range");
    const int k = c.k();
    const int current = c(i);
    Count three = 0;         // quads through i whose other elements carry 3 colors
    Count rainbow_now = 0;   // ... and avoid the current color
    std::vector<Count> hits(static_cast<std::size_t>(k) + 1, 0);
    for_each_quad_containing(c.n(), i, [&](int p, int y, int z) {
        const int cp = c(p), cy = c(y), cz = c(z);
        if (cp == cy || cp == cz || cy == cz) return;
        ++three;
        ++hits[cp];
        ++hits[cy];
        ++hits[cz];
        if (current != cp && current != cy && current != cz) ++rainbow_now;
    });
    std::vector<Count> out(static_cast<std::size_t>(k));
    for (int col = 1; col <= k; ++col) out[col - 1] = three - hits[col] - rainbow_now;
    return out;
}

Count delta_recolor(const Coloring& c, int i, int new_color) {
    if (new_color < 1 || new_color > c.k()) throw Error("color out of range");
    return recolor_deltas(c, i)[new_color - 1];
}

SearchResult local_search(int n, int k, std::uint64_t seed, int restarts, Count max_moves) {
    if (k < 4 || n < k) throw Error("local_search needs n >= k >= 4");
    if (restarts < 0 || max_moves < 0) throw Error("local_search needs non-negative restarts and moves");

    struct Climb {
        Count count;
        Count moves;
        std::vector<int> colors;
    };
    auto climb = [&](Coloring c) {
        Count count = count_rainbow_fast(c);
        Count moves = 0;
        std::vector<int> colors(c.colors().begin(), c.colors().end());
        while (moves < max_moves) {
            Count best_gain = 0;
            int best_i = 0, best_col = 0;
            for (int i = 1; i <= n; ++i) {
                const auto d = recolor_deltas(c, i);
                for (int col = 1; col <= k; ++col) {
                    if (d[col - 1] > best_gain) {
                        best_gain = d[col - 1];
                        best_i = i;
                        best_col = col;
                    }
                }
            }
            if (best_gain <= 0) break;
            colors[best_i - 1] = best_col;
            c = Coloring(Domain::Interval, k, colors);
            count += best_gain;
            ++moves;
        }
        return Climb{count, moves, std::move(colors)};
    };

    std::vector<Climb> climbs;
    climbs.reserve(static_cast<std::size_t>(restarts) + 1);
    for (int r = 0; r <= restarts; ++r) {
        climbs.push_back(climb(r == 0 ? mod_coloring(n, k) : random_coloring(n, k, seed + static_cast<std::uint64_t>(r))));
    }
    // max by count, ties to the earliest restart
    std::size_t best = 0;
    Count total_moves = 0;
    for (std::size_t r = 0; r < climbs.size(); ++r) {
        total_moves += climbs[r].moves;
        if (climbs[r].count > climbs[best].count) best = r;
    }
    Coloring witness(Domain::Interval, k, climbs[best].colors);
    return SearchResult{.best_count = verified(witness, climbs[best].count),
                        .best_coloring = witness,
                        .method = SearchMethod::LocalSearch,
                        .restarts = restarts,
                        .moves = total_moves,
                        .seed = seed,
                        .exact = false};
}

FoxCheck fox_check(int n, Count max_colorings) {
    if (n < 4) throw Error("fox_check needs n >= 4");
    const Count space = canonical_coloring_count(n, 4);
    if (space > max_colorings) throw BudgetExceeded("fox_check over n=" + std::to_string(n) + " exceeds budget");

    const auto by_max = quads_by_max(n);
    std::vector<int> colors(static_cast<std::size_t>(n) + 1, 0);
    std::array<int, 5> sizes{};
    FoxCheck out;
    // Surjective 4-colorings up to relabeling; smallest class must satisfy
    // 6 * size >= n + 1.
    auto rec = [&](auto&& self, int x, int used, bool found) -> void {
        if (x > n) {
            if (used < 4) return;
            const int smallest = *std::min_element(sizes.begin() + 1, sizes.end());
            if (6 * smallest < n + 1) return;
            ++out.colorings_checked;
            if (!found) out.passed = false;
            return;
        }
        const int top = std::min(4, used + 1);
        for (int col = 1; col <= top; ++col) {
            colors[x] = col;
            ++sizes[col];
            bool now = found;
            for (const auto& t : by_max[x]) {
                if (now) break;
                now = all_distinct(col, colors[t.x2], colors[t.x3], colors[t.x4]);
            }
            self(self, x + 1, std::max(used, col), now);
            --sizes[col];
        }
        colors[x] = 0;
    };
    rec(rec, 1, 0, false);
    return out;
}

}  // namespace sidon
