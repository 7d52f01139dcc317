// bounds.hpp
//
// Leading terms of the known bounds on the maximum number of rainbow Sidon
// 4-sets, as exact rationals. Asymptotic bounds carry their error order as
// a symbolic flag; those flags are never turned into numbers, so only the
// exact bounds (trivial upper bound, Z_n bounds for k = 4) may be compared
// against measured counts.

#pragma once

#include <optional>
#include <string>

#include "sidon/core.hpp"
#include "sidon/rational.hpp"

namespace sidon {

struct BoundTerm {
    Rational value;          // leading term evaluated at n
    Rational coefficient;    // of n^3
    std::string error_term;  // "" when the bound is exact
};

struct BoundsReport {
    int n = 0;
    int k = 0;
    Count total_exact = 0;
    BoundTerm ub_trivial;                    // n^3/12 - 3n^2/8 + 5n/12, exact
    BoundTerm ub_general;                    // (1/12 - 1/(24k)) n^3 + O_k(n^2)
    std::optional<BoundTerm> ub_k4;          // 3n^3/96 + O(n^2), k = 4
    BoundTerm lb_construction;               // (1/12 - 1/(3k) + theta_lb/k^2) n^3 - O_k(n^2)
    std::optional<BoundTerm> cyclic_ub_k4;   // 3n^3/64, exact, k = 4
    std::optional<BoundTerm> cyclic_lb_k4;   // n^3/32, exact, k = 4 and 4 | n
    Count s_k = 0;                           // |S(k)|
};

// The three parity corrections: theta_total in the Sidon 4-set count of [n],
// theta_modular in |S(k)|, theta_lb in the construction coefficient.
Rational theta_total(long long n);    // 0 (n even), 1/8 (n odd)
Rational theta_modular(long long k);  // 1/2 (k even), 3/8 (k odd)
Rational theta_lb(int k);             // 1/3 (k even), 1/4 (k odd)
Rational lb_coefficient(int k);
Rational ub_general_coefficient(int k);
// 2|S(k)| / (3k^3), computed from the closed form for |S(k)|.
Rational construction_coefficient(int k);
Rational trivial_upper_bound(long long n);

// Requires n >= k >= 4.
BoundsReport bounds_report(int n, int k);

std::string bounds_json(const BoundsReport& r);
std::string bounds_text(const BoundsReport& r);

struct ConstructionCheck {
    int n = 0;
    int k = 0;
    Count rainbow = 0;           // rainbow count of mod_coloring(n, k)
    Rational ratio;              // rainbow / n^3
    Rational coefficient;        // 2|S(k)| / (3k^3)
    Rational gap() const { return coefficient - ratio; }
};

// Requires k | n and n >= k >= 4.
ConstructionCheck check_construction_vs_lb(int n, int k);

}  // namespace sidon
