#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "sidon/bounds.hpp"
#include "sidon/counting.hpp"
#include "sidon/enumeration.hpp"
#include "sidon/repfn.hpp"
#include "sidon/search.hpp"

namespace sidon::cli {

namespace {

constexpr const char* kSweepSchema =
    "Results CSV columns:\n"
    "  n         ground set size\n"
    "  k         number of colors\n"
    "  coloring  mod | random\n"
    "  rainbow   exact rainbow Sidon 4-set count\n"
    "  total     exact number of Sidon 4-sets in [n]\n"
    "  ratio     rainbow / n^3, decimal with 9 digits\n"
    "  lb_coeff  construction lower-bound coefficient of n^3, p/q\n"
    "  ub_coeff  best known upper-bound coefficient of n^3, p/q (3/96 for k=4)\n";

struct UsageError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------- total

int cmd_total(int n, const std::string& range, bool brute, std::ostream& out) {
    int lo = n, hi = n;
    const bool ranged = !range.empty();
    if (ranged) {
        const auto dots = range.find("..");
        if (dots == std::string::npos) throw UsageError("--range expects A..B");
        try {
            lo = std::stoi(range.substr(0, dots));
            hi = std::stoi(range.substr(dots + 2));
        } catch (const std::exception&) {
            throw UsageError("--range expects A..B");
        }
    }
    if (lo < 1 || hi < lo) throw UsageError("need 1 <= n (and A <= B)");
    int code = kOk;
    for (int m = lo; m <= hi; ++m) {
        const Count formula = total_quads_formula(m);
        const Count sums = count_quads_by_sums(m);
        bool ok = formula == sums;
        if (ranged) out << "n=" << m << ' ';
        out << formula << ' ' << sums;
        if (m <= 60 || brute) {
            Count enumerated = 0;
            for_each_quad(m, [&](const SidonQuad&) { ++enumerated; });
            out << ' ' << enumerated;
            ok = ok && enumerated == formula;
        }
        out << (ok ? " OK" : " MISMATCH") << '\n';
        if (!ok) code = kMismatch;
    }
    return code;
}

// ---------------------------------------------------------------- rainbow

int cmd_rainbow(const std::string& path, const std::string& method, bool json, std::ostream& out) {
    const auto colorings = parse_colorings(read_file(path));
    int code = kOk;
    for (const auto& c : colorings) {
        std::vector<std::pair<std::string, Count>> results;
        const bool all = method == "all";
        if (c.domain() == Domain::Interval) {
            if (all || method == "naive") {
                const auto b = count_rainbow_naive(c);
                results.emplace_back("naive", b.rainbow);
                if (json) {
                    nlohmann::ordered_json j;
                    j["n"] = c.n();
                    j["k"] = c.k();
                    j["rainbow"] = b.rainbow;
                    j["monochromatic"] = b.monochromatic;
                    j["two"] = b.two_colored;
                    j["three"] = b.three_colored;
                    j["total"] = b.total();
                    out << j.dump() << '\n';
                }
            }
            if (all || method == "fast") results.emplace_back("fast", count_rainbow_fast(c));
            if ((all && c.k() == 4) || method == "energy") {
                if (c.k() != 4) throw UsageError("--method energy needs k = 4");
                results.emplace_back("energy", rainbow_via_energy(c));
            }
        } else {
            if (method == "energy") throw UsageError("--method energy is not defined for cyclic colorings");
            if (all || method == "naive") results.emplace_back("naive", count_rainbow_cyclic_naive(c));
            if (all || method == "fast") results.emplace_back("fast", count_rainbow_cyclic_fast(c));
        }
        bool agree = true;
        for (std::size_t i = 0; i < results.size(); ++i) {
            out << (i ? " " : "") << results[i].first << '=' << results[i].second;
            agree = agree && results[i].second == results.front().second;
        }
        if (all) out << (agree ? " OK" : " MISMATCH");
        out << '\n';
        if (!agree) code = kMismatch;
    }
    return code;
}

// ---------------------------------------------------------------- bounds

int cmd_bounds(int n, int k, bool json, std::ostream& out) {
    if (k < 4 || n < k) throw UsageError("bounds need n >= k >= 4");
    const auto r = bounds_report(n, k);
    out << (json ? bounds_json(r) + "\n" : bounds_text(r));
    return kOk;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
    int n = 0, k = 0;
    bool exhaustive = false, local = false, reflection = false;
    std::uint64_t seed = 1;
    int restarts = 8;
    Count moves = 10000;
    Count budget = 1'000'000;
    std::string out_path;
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
    if (a.exhaustive == a.local) throw UsageError("choose exactly one of --exhaustive or --local");
    if (a.n < 1 || a.k < 1) throw UsageError("need n, k >= 1");
    SearchResult r = a.exhaustive ? exhaustive_ar(a.n, a.k, {a.budget, a.reflection})
                                  : local_search(a.n, a.k, a.seed, a.restarts, a.moves);
    out << "best " << r.best_count << '\n';
    const auto json = search_result_json(r);
    if (a.out_path.empty()) {
        out << json << '\n';
    } else {
        std::ofstream f(a.out_path);
        if (!f) throw UsageError("cannot write " + a.out_path);
        f << json << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------- verify

struct Check {
    std::string name;
    Count cases = 0;
    Count failures = 0;
};

Check check_rep_two_intervals() {
    Check c{"rep-two-intervals"};
    for (long long a = 1; a <= 30; ++a) {
        for (long long b = a; b <= 30; ++b) {
            const auto p = rep_profile(IntSet::interval(-a, a), IntSet::interval(-b, b));
            for (long long m = -(a + b) - 2; m <= a + b + 2; ++m) {
                ++c.cases;
                if (closed_rep_two_intervals(a, b, m) != p[m]) ++c.failures;
            }
        }
    }
    return c;
}

Check check_rep_one_interval() {
    Check c{"rep-one-interval"};
    for (long long a = 1; a <= 30; ++a) {
        const auto j = IntSet::interval(-a, a);
        const auto p = rep_profile(j, j);
        for (long long m = -2 * a - 2; m <= 2 * a + 2; ++m) {
            ++c.cases;
            if (closed_rep_one_interval(a, m) != p[m] || closed_rep_two_intervals(a, a, m) != p[m]) ++c.failures;
        }
    }
    return c;
}

template <class F>
void for_each_family(F&& fn) {
    for (long long a1 = 1; a1 <= 8; ++a1)
        for (long long a2 = 1; a2 <= 8; ++a2)
            for (long long a3 = 1; a3 <= 8; ++a3)
                for (long long a4 = 1; a4 <= 8; ++a4)
                    if ((a1 + a2 + a3 + a4) % 4 == 0) fn(a1, a2, a3, a4);
}

Check check_sum_dominance_all() {
    Check c{"sum-dominance"};
    for_each_family([&](long long a1, long long a2, long long a3, long long a4) {
        const long long half = (a1 + a2 + a3 + a4) / 2;
        for (long long m = -half; m <= half; ++m) {
            ++c.cases;
            if (!check_sum_dominance(a1, a2, a3, a4, m)) ++c.failures;
        }
    });
    return c;
}

// Only m within one of both pair supports (plus one).
Check check_sum_dominance_overlap() {
    Check c{"sum-dominance-overlap"};
    for_each_family([&](long long a1, long long a2, long long a3, long long a4) {
        const long long half = (a1 + a2 + a3 + a4) / 2;
        const long long reach = std::min({half, a1 + a2 + 1, a3 + a4 + 1});
        for (long long m = -reach; m <= reach; ++m) {
            ++c.cases;
            if (!check_sum_dominance(a1, a2, a3, a4, m)) ++c.failures;
        }
    });
    return c;
}

Check check_product_energy() {
    Check c{"product-energy-dominance"};
    for_each_family([&](long long a1, long long a2, long long a3, long long a4) {
        ++c.cases;
        if (!product_energy_dominance(a1, a2, a3, a4).holds()) ++c.failures;
    });
    return c;
}

Check check_energy4() {
    Check c{"energy4-interval"};
    for (long long a = 1; a <= 20; ++a) {
        const auto j = IntSet::interval(-a, a);
        ++c.cases;
        if (closed_energy4_interval(a) != additive_energy({j, j, j, j})) ++c.failures;
    }
    return c;
}

Check check_lev_random(int trials, std::uint64_t seed) {
    Check c{"lev-compression"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_t(2, 4), pick_size(1, 8);
    std::vector<long long> pool;
    for (long long v = -10; v <= 10; ++v) pool.push_back(v);
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<IntSet> sets;
        const int t = pick_t(rng);
        for (int i = 0; i < t; ++i) {
            std::shuffle(pool.begin(), pool.end(), rng);
            sets.emplace_back(std::vector<long long>(pool.begin(), pool.begin() + pick_size(rng)));
        }
        ++c.cases;
        if (!check_lev(sets)) ++c.failures;
    }
    return c;
}

Check check_pair_membership() {
    Check c{"pair-membership"};
    for (int n : {10, 20, 50, 100}) {
        Count sum = 0;
        for (int a = 2; a <= n; ++a) {
            for (int b = 1; b < a; ++b) {
                const Count f = f_n_exact(n, b, a);
                sum += f;
                ++c.cases;
                if (2 * f < n - 8) ++c.failures;
            }
        }
        ++c.cases;
        if (sum != 6 * total_quads_formula(n)) ++c.failures;
    }
    return c;
}

Check check_non_rainbow(int trials, std::uint64_t seed) {
    Check c{"non-rainbow-lower-bound"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_n(4, 120), pick_k(4, 8);
    for (int trial = 0; trial < trials; ++trial) {
        const int n = pick_n(rng);
        const auto col = random_coloring(n, pick_k(rng), rng());
        const auto b = count_rainbow_naive(col);
        ++c.cases;
        if (Rational(b.total() - b.rainbow) < non_rainbow_lower_bound(col)) ++c.failures;
    }
    return c;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed, std::ostream& out) {
    if (suite != "lemmas" && suite != "lev" && suite != "all") throw UsageError("--suite must be lemmas, lev or all");
    if (trials < 1) throw UsageError("--trials must be positive");
    std::vector<std::function<Check()>> checks;
    if (suite != "lev") {
        checks.insert(checks.end(), {check_rep_two_intervals, check_rep_one_interval, check_sum_dominance_all,
                                     check_sum_dominance_overlap, check_product_energy, check_energy4});
    }
    if (suite != "lemmas") checks.emplace_back([=] { return check_lev_random(trials, seed); });
    if (suite == "all") {
        checks.emplace_back(check_pair_membership);
        checks.emplace_back([=] { return check_non_rainbow(std::min(trials, 100), seed); });
    }
    int code = kOk;
    for (const auto& run : checks) {
        const auto c = run();
        out << (c.failures == 0 ? "PASS " : "FAIL ") << c.name << " cases=" << c.cases << " failures=" << c.failures
            << '\n';
        if (c.failures != 0) code = kMismatch;
    }
    return code;
}

// ---------------------------------------------------------------- sweep

std::vector<int> parse_n_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size() || v < 1) throw UsageError("");
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("bad --n-list entry \"" + item + "\"");
        }
    }
    if (out.empty()) throw UsageError("--n-list is empty");
    return out;
}

int cmd_sweep(int k, const std::string& n_list, const std::string& coloring, std::uint64_t seed,
              const std::string& out_path, std::ostream& out) {
    if (k < 4) throw UsageError("--k must be >= 4");
    if (coloring != "mod" && coloring != "random") throw UsageError("--coloring must be mod or random");
    const auto ns = parse_n_list(n_list);
    for (int n : ns) {
        if (n < k) throw UsageError("every n must be >= k");
    }
    std::ostringstream csv;
    csv << "n,k,coloring,rainbow,total,ratio,lb_coeff,ub_coeff\n";
    const Rational ub = k == 4 ? Rational(3, 96) : ub_general_coefficient(k);
    for (int n : ns) {
        const auto c = coloring == "mod" ? mod_coloring(n, k) : random_coloring(n, k, seed + static_cast<std::uint64_t>(n));
        const Count rainbow = count_rainbow_fast(c);
        const Rational ratio = Rational(rainbow) / (Rational(n) * n * n);
        csv << n << ',' << k << ',' << coloring << ',' << rainbow << ',' << total_quads_formula(n) << ','
            << format_fixed(ratio, 9) << ',' << format_rational(lb_coefficient(k)) << ',' << format_rational(ub)
            << '\n';
    }
    if (out_path.empty()) {
        out << csv.str();
    } else {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write " + out_path);
        f << csv.str();
        if (!f) throw UsageError("write failed: " + out_path);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counting of rainbow solutions to X+Y=Z+T under colorings of [n] and Z_n", "sidon"};
    app.require_subcommand(1);

    int n = 0, k = 0;
    std::string range;
    bool brute = false;
    auto* total = app.add_subcommand("total", "Count Sidon 4-sets of [n]: formula, per-sum oracle, enumeration");
    auto* total_n = total->add_option("--n", n, "ground set size");
    auto* total_range = total->add_option("--range", range, "inclusive range A..B");
    total_n->excludes(total_range);
    total->add_flag("--brute", brute, "enumerate even when n > 60");

    std::string coloring_path, method = "all";
    bool rainbow_json = false;
    auto* rainbow = app.add_subcommand("rainbow", "Count rainbow Sidon 4-sets of a coloring file (JSON or JSON-lines)");
    rainbow->add_option("--coloring", coloring_path, "coloring file")->required();
    rainbow->add_option("--method", method, "naive|fast|energy|all")
        ->check(CLI::IsMember({"naive", "fast", "energy", "all"}));
    rainbow->add_flag("--json", rainbow_json, "also print the naive class breakdown as JSON");

    bool bounds_as_json = false;
    auto* bounds = app.add_subcommand("bounds", "Evaluate bound leading terms for (n, k)");
    bounds->add_option("--n", n, "ground set size")->required();
    bounds->add_option("--k", k, "number of colors")->required();
    bounds->add_flag("--json", bounds_as_json, "JSON output");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "Search colorings for many rainbow Sidon 4-sets");
    search->add_option("--n", sa.n, "ground set size")->required();
    search->add_option("--k", sa.k, "number of colors")->required();
    search->add_flag("--exhaustive", sa.exhaustive, "exact branch and bound");
    search->add_flag("--local", sa.local, "hill climbing");
    search->add_option("--seed", sa.seed, "seed for random restarts");
    search->add_option("--restarts", sa.restarts, "random restarts besides the mod-k start");
    search->add_option("--moves", sa.moves, "move limit per climb");
    search->add_option("--budget", sa.budget, "exhaustive: max canonical colorings");
    search->add_flag("--reflection", sa.reflection, "exhaustive: prune mirror images");
    search->add_option("--out", sa.out_path, "write the result JSON here");

    std::string suite = "all";
    int trials = 500;
    std::uint64_t seed = 9;
    auto* verify = app.add_subcommand("verify", "Check closed forms and inequalities against direct computation");
    verify->add_option("--suite", suite, "lemmas|lev|all");
    verify->add_option("--trials", trials, "random trials");
    verify->add_option("--seed", seed, "seed");

    int sweep_k = 0;
    std::string n_list, sweep_coloring = "mod", sweep_out;
    std::uint64_t sweep_seed = 1;
    auto* sweep = app.add_subcommand("sweep", "Rainbow counts over a list of n");
    sweep->add_option("--k", sweep_k, "number of colors")->required();
    sweep->add_option("--n-list", n_list, "comma separated n values")->required();
    sweep->add_option("--coloring", sweep_coloring, "mod|random");
    sweep->add_option("--seed", sweep_seed, "random colorings use seed + n");
    sweep->add_option("--out", sweep_out, "results CSV (stdout if omitted)");
    sweep->footer(kSweepSchema);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (total->parsed()) {
            if (!*total_n && !*total_range) throw UsageError("total needs --n or --range");
            return cmd_total(n, range, brute, out);
        }
        if (rainbow->parsed()) return cmd_rainbow(coloring_path, method, rainbow_json, out);
        if (bounds->parsed()) return cmd_bounds(n, k, bounds_as_json, out);
        if (search->parsed()) return cmd_search(sa, out);
        if (verify->parsed()) return cmd_verify(suite, trials, seed, out);
        if (sweep->parsed()) return cmd_sweep(sweep_k, n_list, sweep_coloring, sweep_seed, sweep_out, out);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace sidon::cli
