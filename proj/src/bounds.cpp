#include "sidon/bounds.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "sidon/counting.hpp"
#include "sidon/enumeration.hpp"

namespace sidon {

namespace {

void require_nk(int n, int k) {
    if (k < 4) throw Error("bounds need k >= 4");
    if (n < k) throw Error("bounds need n >= k");
}

Rational cube(long long n) {
    const Rational r = n;
    return r * r * r;
}

BoundTerm term(const Rational& coefficient, long long n, std::string error) {
    return {coefficient * cube(n), coefficient, std::move(error)};
}

}  // namespace

Rational theta_total(long long n) { return n % 2 == 0 ? Rational(0) : Rational(1, 8); }

Rational theta_modular(long long k) { return k % 2 == 0 ? Rational(1, 2) : Rational(3, 8); }

Rational theta_lb(int k) { return k % 2 == 0 ? Rational(1, 3) : Rational(1, 4); }

Rational lb_coefficient(int k) {
    return Rational(1, 12) - Rational(1, 3 * k) + theta_lb(k) / (Rational(k) * k);
}

Rational ub_general_coefficient(int k) { return Rational(1, 12) - Rational(1, 24 * k); }

Rational construction_coefficient(int k) {
    return Rational(2 * modular_count_formula(k).value) / (3 * cube(k));
}

Rational trivial_upper_bound(long long n) {
    const Rational r = n;
    return r * r * r / 12 - 3 * r * r / 8 + 5 * r / 12;
}

BoundsReport bounds_report(int n, int k) {
    require_nk(n, k);
    BoundsReport r;
    r.n = n;
    r.k = k;
    r.total_exact = total_quads_formula(n);
    r.ub_trivial = {trivial_upper_bound(n), Rational(1, 12), ""};
    r.ub_general = term(ub_general_coefficient(k), n, "+O_k(n^2)");
    r.lb_construction = term(lb_coefficient(k), n, "-O_k(n^2)");
    if (k == 4) {
        r.ub_k4 = term(Rational(3, 96), n, "+O(n^2)");
        r.cyclic_ub_k4 = term(Rational(3, 64), n, "");
        if (n % 4 == 0) r.cyclic_lb_k4 = term(Rational(1, 32), n, "");
    }
    r.s_k = modular_count_formula(k).value;
    return r;
}

namespace {

nlohmann::ordered_json term_json(const BoundTerm& t) {
    nlohmann::ordered_json j;
    j["value"] = format_rational(t.value);
    j["coefficient"] = format_rational(t.coefficient);
    j["decimal"] = format_decimal(t.value);
    j["error_term"] = t.error_term;
    return j;
}

}  // namespace

std::string bounds_json(const BoundsReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["total_exact"] = r.total_exact;
    j["ub_trivial"] = term_json(r.ub_trivial);
    j["ub_general"] = term_json(r.ub_general);
    j["ub_k4"] = r.ub_k4 ? term_json(*r.ub_k4) : nlohmann::ordered_json(nullptr);
    j["lb_construction"] = term_json(r.lb_construction);
    j["cyclic_ub_k4"] = r.cyclic_ub_k4 ? term_json(*r.cyclic_ub_k4) : nlohmann::ordered_json(nullptr);
    j["cyclic_lb_k4"] = r.cyclic_lb_k4 ? term_json(*r.cyclic_lb_k4) : nlohmann::ordered_json(nullptr);
    j["s_k"] = r.s_k;
    return j.dump(2);
}

std::string bounds_text(const BoundsReport& r) {
    std::ostringstream out;
    char line[256];
    auto row = [&](const char* name, const std::string& exact, const std::string& dec, const std::string& coeff,
                   const std::string& err) {
        std::snprintf(line, sizeof line, "%-16s %-24s %-12s %-12s %s\n", name, exact.c_str(), dec.c_str(),
                      coeff.c_str(), err.c_str());
        out << line;
    };
    auto bound = [&](const char* name, const BoundTerm& t) {
        row(name, format_rational(t.value), format_decimal(t.value), format_rational(t.coefficient),
            t.error_term.empty() ? "exact" : t.error_term);
    };
    out << "n=" << r.n << " k=" << r.k << "\n";
    row("term", "value", "decimal", "coeff(n^3)", "error");
    row("total_exact", std::to_string(r.total_exact), format_decimal(r.total_exact), "", "exact");
    bound("ub_trivial", r.ub_trivial);
    bound("ub_general", r.ub_general);
    if (r.ub_k4) bound("ub_k4", *r.ub_k4);
    bound("lb_construction", r.lb_construction);
    if (r.cyclic_ub_k4) bound("cyclic_ub_k4", *r.cyclic_ub_k4);
    if (r.cyclic_lb_k4) bound("cyclic_lb_k4", *r.cyclic_lb_k4);
    row("s_k", std::to_string(r.s_k), "", "", "exact");
    out << "rows with an O(.) error show the leading term only; comparisons against them are indicative, not asserted\n";
    return out.str();
}

ConstructionCheck check_construction_vs_lb(int n, int k) {
    require_nk(n, k);
    if (n % k != 0) throw Error("check_construction_vs_lb needs k | n");
    ConstructionCheck out;
    out.n = n;
    out.k = k;
    out.rainbow = count_rainbow_fast(mod_coloring(n, k));
    out.ratio = Rational(out.rainbow) / cube(n);
    out.coefficient = construction_coefficient(k);
    return out;
}

}  // namespace sidon
