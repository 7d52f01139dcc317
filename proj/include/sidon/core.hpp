// core.hpp
//
// Domain types shared by every other module: colorings of [n] or Z_n,
// canonical Sidon 4-sets over the integers and over residues, and the
// per-pattern breakdown of Sidon 4-sets under a coloring.
//
// Elements are always 1-based. In the cyclic domain element n stands for
// the residue class of 0, so residues live in the window {1..n}.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sidon {

using Count = std::int64_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Accumulation helper. Overflow is trapped in debug builds; counts are valid
// for n up to 2,000,000 where n^3/12 still fits in 63 bits.
inline Count add_count(Count a, Count b) {
#ifndef NDEBUG
    Count out{};
    if (__builtin_add_overflow(a, b, &out)) throw Error("count overflow");
    return out;
#else
    return a + b;
#endif
}

// Normalizes x into the residue window {1..n}.
inline long long residue(long long x, long long n) {
    long long r = x % n;
    if (r <= 0) r += n;
    return r;
}

enum class Domain { Interval, Cyclic };

std::string_view domain_name(Domain d);

class Coloring {
public:
    // Throws Error when n < 1, k < 1, colors.size() != n or any entry is
    // outside {1..k}.
    Coloring(Domain domain, int k, std::vector<int> colors);

    Domain domain() const { return domain_; }
    int n() const { return static_cast<int>(colors_.size()); }
    int k() const { return k_; }
    std::span<const int> colors() const { return colors_; }

    // Color of element x. Interval: 1 <= x <= n. Cyclic: any integer,
    // reduced into {1..n}.
    int operator()(long long x) const {
        if (domain_ == Domain::Cyclic) x = residue(x, n());
        return colors_[static_cast<std::size_t>(x - 1)];
    }

    // Elements of color class i (1-based color), ascending.
    std::vector<int> color_class(int color) const;
    std::vector<std::vector<int>> color_classes() const;

    Coloring with_domain(Domain d) const { return Coloring(d, k_, colors_); }
    Coloring recolored(int element, int color) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    Domain domain_;
    int k_;
    std::vector<int> colors_;
};

// A Sidon 4-set of [n] in canonical order x1 > x2 > x3 > x4 with
// x1 + x4 = x2 + x3. Extremes pair against middles.
struct SidonQuad {
    int x1, x2, x3, x4;

    long long side_sum() const { return static_cast<long long>(x1) + x4; }

    friend auto operator<=>(const SidonQuad&, const SidonQuad&) = default;
};

// A Sidon 4-set of Z_k together with its pairing {a+b == c+d}. Residues are
// in {1..k}, each pair is stored ascending and pair_a < pair_b.
struct ModularSidonQuad {
    int a, b;  // first pair
    int c, d;  // second pair

    friend auto operator<=>(const ModularSidonQuad&, const ModularSidonQuad&) = default;
};

struct ClassBreakdown {
    Count rainbow = 0;
    Count monochromatic = 0;
    Count two_colored = 0;
    Count three_colored = 0;

    Count total() const { return rainbow + monochromatic + two_colored + three_colored; }

    friend bool operator==(const ClassBreakdown&, const ClassBreakdown&) = default;
};

// Canonical quad from four values in any order. Returns nullopt when the
// values are not distinct or do not solve the Sidon equation; throws when a
// value is outside [1, n].
std::optional<SidonQuad> make_quad(int a, int b, int c, int d, int n);

// c(i) = i mod k with residues in {1..k}. Requires n >= k >= 1.
Coloring mod_coloring(int n, int k, Domain domain = Domain::Interval);

Coloring constant_coloring(int n, int k, Domain domain = Domain::Interval);

// Uniform independent colors from a seeded mt19937_64.
Coloring random_coloring(int n, int k, std::uint64_t seed, Domain domain = Domain::Interval);

// JSON object {"domain":...,"n":...,"k":...,"colors":[...]}.
Coloring parse_coloring(std::string_view text);
std::string serialize_coloring(const Coloring& c);

// A file holding either a single JSON object (possibly spread over several
// lines) or JSON-lines with one coloring per non-blank line.
std::vector<Coloring> parse_colorings(std::string_view text);

}  // namespace sidon
