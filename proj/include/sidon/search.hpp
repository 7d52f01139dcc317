// search.hpp
//
// Search over colorings of [n] for the maximum number of rainbow Sidon
// 4-sets: exact branch-and-bound over label-canonical colorings at tiny n,
// and deterministic best-improvement hill climbing at moderate n.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sidon/core.hpp"

namespace sidon {

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

enum class SearchMethod { Exhaustive, LocalSearch };

struct SearchResult {
    Count best_count = 0;
    Coloring best_coloring;
    SearchMethod method = SearchMethod::Exhaustive;
    int restarts = 0;
    Count moves = 0;
    std::uint64_t seed = 0;
    bool exact = false;
};

std::string search_result_json(const SearchResult& r);

// Colorings of [n] with at most k colors, up to relabeling of colors
// (restricted growth strings). Saturates at INT64_MAX.
Count canonical_coloring_count(int n, int k);

struct ExhaustiveOptions {
    // Upper limit on canonical colorings; 1e6 admits n <= 12 at k = 4.
    Count max_colorings = 1'000'000;
    // Skip a leaf whose mirror image x -> n+1-x has a smaller canonical form.
    bool reflection_pruning = false;
};

// Exact maximum. Throws BudgetExceeded when the canonical coloring count is
// above the budget.
SearchResult exhaustive_ar(int n, int k, const ExhaustiveOptions& opts = {});

// Restart 0 starts from mod_coloring(n, k); restart r in 1..restarts starts
// from random_coloring(n, k, seed + r). Each climb applies at most max_moves
// strictly improving recolorings, picking the largest gain with ties broken
// by smallest element then smallest color. Requires n >= k >= 4.
SearchResult local_search(int n, int k, std::uint64_t seed, int restarts, Count max_moves);

// Change in the rainbow count if element i is recolored to new_color.
Count delta_recolor(const Coloring& c, int i, int new_color);

// Gains for recoloring element i to each color; index 0 is color 1.
std::vector<Count> recolor_deltas(const Coloring& c, int i);

struct FoxCheck {
    bool passed = true;
    Count colorings_checked = 0;  // canonical colorings meeting the class-size floor
};

// Every 4-coloring of [n] whose smallest class has at least (n+1)/6 elements
// has a rainbow Sidon 4-set.
FoxCheck fox_check(int n, Count max_colorings = 1'000'000);
inline bool fox_spot_check(int n) { return fox_check(n).passed; }

// Relabels colors in order of first appearance.
std::vector<int> canonical_labels(std::span<const int> colors);

}  // namespace sidon
