// counting.hpp
//
// Counting Sidon 4-sets by color pattern under a coloring.
//
// Interval domain [n]:
//   count_rainbow_naive   scans every Sidon 4-set (ground truth)
//   count_rainbow_fast    sums r_{X_i+X_j}(l) r_{X_s+X_t}(l) over the three
//                         pairings of every 4 colors i<j<s<t and every l
//   rainbow_via_energy    k = 4 only: E_4(X1,X2,-X3,-X4) + E_4(X1,X3,-X2,-X4)
//                         + E_4(X1,X4,-X2,-X3)
//
// Cyclic domain Z_n: a solution is an unordered pair of unordered pairs of
// distinct residues {a,b} {c,d} with a + b == c + d (mod n). The same four
// residues may carry more than one pairing; each pairing counts.

#pragma once

#include <cstddef>

#include "sidon/core.hpp"
#include "sidon/rational.hpp"

namespace sidon {

enum class QuadClass { Rainbow, Monochromatic, TwoColored, ThreeColored };

QuadClass classify_quad(const SidonQuad& q, const Coloring& c);

ClassBreakdown count_rainbow_naive(const Coloring& c);

struct FastCountOptions {
    // Profiles take C(k,2) * 2n counts; above this many bytes the naive scan
    // is used instead.
    std::size_t memory_budget_bytes = std::size_t{1} << 30;
    // Number of independent chunks the sum over l is split into. The result
    // does not depend on it.
    int chunks = 1;
};

Count count_rainbow_fast(const Coloring& c, const FastCountOptions& opts = {});

Count rainbow_via_energy(const Coloring& c);

Count count_rainbow_cyclic_naive(const Coloring& c);
Count count_rainbow_cyclic_fast(const Coloring& c);

// Domain-dispatching convenience: fast counter for either domain.
Count count_rainbow(const Coloring& c);

struct MonochromaticPairs {
    Count count = 0;           // sum_i C(|X_i|, 2)
    Rational lower_bound;      // n^2/(2k) - n/2
    bool bound_holds() const { return Rational(count) >= lower_bound; }
};

MonochromaticPairs monochromatic_pairs(const Coloring& c);

// (1/6) * sum over monochromatic pairs of f_n(pair).
Rational non_rainbow_lower_bound(const Coloring& c);

}  // namespace sidon
