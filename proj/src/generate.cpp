#include "mis/generate.hpp"

#include <charconv>
#include <queue>
#include <random>

#include "mis/errors.hpp"

namespace mis {

namespace {

std::int32_t parse_int(std::string_view text, std::string_view what) {
    std::int32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
        throw InputError("thresholds: bad " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

} // namespace

ThresholdPolicy parse_threshold_policy(std::string_view text) {
    if (text == "uniform") return UniformThresholds{};
    if (text.starts_with("const:")) return ConstantThresholds{parse_int(text.substr(6), "constant")};
    if (text.starts_with("custom:")) {
        CustomThresholds custom;
        auto rest = text.substr(7);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            custom.values.push_back(parse_int(rest.substr(0, comma), "entry"));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        return custom;
    }
    throw InputError("thresholds: unknown policy '" + std::string(text) +
                     "' (expected uniform, const:K or custom:list)");
}

Graph make_path(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.emplace_back(static_cast<Node>(i), static_cast<Node>(i + 1));
    return Graph(n, edges);
}

Graph make_cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<Node>(i), static_cast<Node>((i + 1) % n));
    return Graph(n, edges);
}

Graph make_complete(std::size_t n) {
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(static_cast<Node>(u), static_cast<Node>(v));
    return Graph(n, edges);
}

Graph tree_from_pruefer(std::size_t n, const std::vector<Node>& sequence) {
    if (n <= 1) return Graph(n, {});
    if (sequence.size() != n - 2) throw InputError("pruefer sequence must have n-2 entries");
    std::vector<std::size_t> degree(n, 1);
    for (Node x : sequence) ++degree[static_cast<std::size_t>(x)];

    std::priority_queue<Node, std::vector<Node>, std::greater<>> leaves;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(static_cast<Node>(v));

    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Node x : sequence) {
        Node leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--degree[static_cast<std::size_t>(x)] == 1) leaves.push(x);
    }
    Node a = leaves.top();
    leaves.pop();
    Node b = leaves.top();
    edges.emplace_back(a, b);
    return Graph(n, edges);
}

Instance generate(GraphClass graph_class, std::size_t n, const ThresholdPolicy& policy,
                  std::uint64_t rng_seed) {
    if (n < 1) throw InputError("n: must be at least 1");
    std::mt19937_64 rng(rng_seed);

    Instance inst;
    switch (graph_class) {
    case GraphClass::Path: inst.graph = make_path(n); break;
    case GraphClass::Cycle:
        if (n < 3) throw InputError("n: cycles need at least 3 nodes");
        inst.graph = make_cycle(n);
        break;
    case GraphClass::Complete: inst.graph = make_complete(n); break;
    case GraphClass::Tree: {
        std::vector<Node> seq(n >= 2 ? n - 2 : 0);
        std::uniform_int_distribution<Node> pick(0, static_cast<Node>(n - 1));
        for (auto& x : seq) x = pick(rng);
        inst.graph = tree_from_pruefer(n, seq);
        break;
    }
    case GraphClass::Unsupported: throw InputError("class: cannot generate unsupported graphs");
    }

    inst.thresholds.resize(n);
    if (std::holds_alternative<UniformThresholds>(policy)) {
        for (std::size_t v = 0; v < n; ++v) {
            const auto hi = static_cast<std::int32_t>(inst.graph.degree(static_cast<Node>(v)) + 1);
            inst.thresholds[v] = std::uniform_int_distribution<std::int32_t>(0, hi)(rng);
        }
    } else if (const auto* c = std::get_if<ConstantThresholds>(&policy)) {
        std::fill(inst.thresholds.begin(), inst.thresholds.end(), c->value);
    } else {
        const auto& custom = std::get<CustomThresholds>(policy);
        if (custom.values.size() != n)
            throw InputError("thresholds: expected " + std::to_string(n) + " entries");
        inst.thresholds = custom.values;
    }
    return normalize_thresholds(std::move(inst));
}

} // namespace mis
