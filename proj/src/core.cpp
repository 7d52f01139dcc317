#include "sidon/core.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include <json.hpp>

namespace sidon {

std::string_view domain_name(Domain d) {
    return d == Domain::Interval ? "interval" : "cyclic";
}

Coloring::Coloring(Domain domain, int k, std::vector<int> colors)
    : domain_(domain), k_(k), colors_(std::move(colors)) {
    if (colors_.empty()) throw Error("coloring needs n >= 1");
    if (k_ < 1) throw Error("coloring needs k >= 1");
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (colors_[i] < 1 || colors_[i] > k_) {
            throw Error("color out of range at index " + std::to_string(i + 1));
        }
    }
}

std::vector<int> Coloring::color_class(int color) const {
    std::vector<int> out;
    for (int x = 1; x <= n(); ++x) {
        if (colors_[x - 1] == color) out.push_back(x);
    }
    return out;
}

std::vector<std::vector<int>> Coloring::color_classes() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(k_));
    for (int x = 1; x <= n(); ++x) out[colors_[x - 1] - 1].push_back(x);
    return out;
}

Coloring Coloring::recolored(int element, int color) const {
    if (element < 1 || element > n()) throw Error("element out of range");
    auto next = colors_;
    next[element - 1] = color;
    return Coloring(domain_, k_, std::move(next));
}

std::optional<SidonQuad> make_quad(int a, int b, int c, int d, int n) {
    std::array<int, 4> v{a, b, c, d};
    for (int x : v) {
        if (x < 1 || x > n) throw Error("quad element " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
    }
    std::sort(v.begin(), v.end(), std::greater<>());
    if (v[0] == v[1] || v[1] == v[2] || v[2] == v[3]) return std::nullopt;
    if (v[0] + v[3] != v[1] + v[2]) return std::nullopt;
    return SidonQuad{v[0], v[1], v[2], v[3]};
}

Coloring mod_coloring(int n, int k, Domain domain) {
    if (k < 1) throw Error("mod_coloring needs k >= 1");
    if (k > n) throw Error("mod_coloring needs n >= k");
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) colors[i - 1] = ((i - 1) % k) + 1;
    return Coloring(domain, k, std::move(colors));
}

Coloring constant_coloring(int n, int k, Domain domain) {
    if (n < 1) throw Error("coloring needs n >= 1");
    return Coloring(domain, k, std::vector<int>(static_cast<std::size_t>(n), 1));
}

Coloring random_coloring(int n, int k, std::uint64_t seed, Domain domain) {
    if (n < 1 || k < 1) throw Error("random_coloring needs n, k >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, k);
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (auto& x : colors) x = pick(rng);
    return Coloring(domain, k, std::move(colors));
}

namespace {

Coloring from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error("coloring must be a JSON object");
    for (const char* key : {"domain", "n", "k", "colors"}) {
        if (!j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
    }
    const auto& dom = j.at("domain");
    if (!dom.is_string()) throw Error("field \"domain\" must be a string");
    Domain domain;
    if (dom.get<std::string>() == "interval") {
        domain = Domain::Interval;
    } else if (dom.get<std::string>() == "cyclic") {
        domain = Domain::Cyclic;
    } else {
        throw Error("unknown domain \"" + dom.get<std::string>() + "\"");
    }
    if (!j.at("n").is_number_integer() || !j.at("k").is_number_integer()) {
        throw Error("fields \"n\" and \"k\" must be integers");
    }
    const auto n = j.at("n").get<long long>();
    const auto k = j.at("k").get<long long>();
    if (n < 1 || n > 2'000'000) throw Error("n out of range");
    if (k < 1 || k > 2'000'000) throw Error("k out of range");
    const auto& arr = j.at("colors");
    if (!arr.is_array()) throw Error("field \"colors\" must be an array");
    if (static_cast<long long>(arr.size()) != n) {
        throw Error("length mismatch: n=" + std::to_string(n) + " but " + std::to_string(arr.size()) + " colors");
    }
    std::vector<int> colors;
    colors.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number_integer()) throw Error("non-integer color at index " + std::to_string(i + 1));
        const auto v = arr[i].get<long long>();
        if (v < 1 || v > k) throw Error("color out of range at index " + std::to_string(i + 1));
        colors.push_back(static_cast<int>(v));
    }
    return Coloring(domain, static_cast<int>(k), std::move(colors));
}

}  // namespace

Coloring parse_coloring(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return from_json(j);
}

std::string serialize_coloring(const Coloring& c) {
    nlohmann::ordered_json j;
    j["domain"] = domain_name(c.domain());
    j["n"] = c.n();
    j["k"] = c.k();
    j["colors"] = std::vector<int>(c.colors().begin(), c.colors().end());
    return j.dump();
}

std::vector<Coloring> parse_colorings(std::string_view text) {
    if (nlohmann::json::accept(text)) return {parse_coloring(text)};
    std::vector<Coloring> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(parse_coloring(line));
        } catch (const Error& e) {
            throw Error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (out.empty()) throw Error("no coloring found");
    return out;
}

}  // namespace sidon
