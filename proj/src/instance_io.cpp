#include "mis/instance_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace mis {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw InstanceParseError(field + ": " + what);
}

const json& require(const json& doc, const char* field) {
    const auto it = doc.find(field);
    if (it == doc.end()) fail(field, "missing");
    return *it;
}

std::int64_t non_negative(const json& value, const std::string& field,
                          std::int64_t max = std::numeric_limits<std::int64_t>::max()) {
    if (!value.is_number_integer()) fail(field, "expected a non-negative integer");
    if (value.is_number_unsigned()) {
        const auto u = value.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(max)) fail(field, "value too large");
        return static_cast<std::int64_t>(u);
    }
    const auto v = value.get<std::int64_t>();
    if (v < 0) fail(field, "expected a non-negative integer");
    if (v > max) fail(field, "value too large");
    return v;
}

} // namespace

InstanceFile parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("instance", std::string("not valid JSON (") + e.what() + ")");
    }
    if (!doc.is_object()) fail("instance", "expected a JSON object");

    InstanceFile file;
    auto& inst = file.instance;
    const auto n = static_cast<std::size_t>(non_negative(require(doc, "n"), "n", std::numeric_limits<Node>::max()));

    const auto& edges = require(doc, "edges");
    if (!edges.is_array()) fail("edges", "expected a list of [u, v] pairs");
    std::vector<Edge> list;
    list.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto field = "edges[" + std::to_string(i) + "]";
        const auto& e = edges[i];
        if (!e.is_array() || e.size() != 2) fail(field, "expected a pair of node ids");
        const auto u = non_negative(e[0], field, std::numeric_limits<Node>::max());
        const auto v = non_negative(e[1], field, std::numeric_limits<Node>::max());
        list.emplace_back(static_cast<Node>(u), static_cast<Node>(v));
    }
    try {
        inst.graph = Graph(n, list);
    } catch (const InputError& e) {
        const std::string what = e.what();
        if (what.rfind("edges", 0) == 0) throw InstanceParseError(what);
        fail("edges", what);
    }

    const auto& thresholds = require(doc, "thresholds");
    if (!thresholds.is_array()) fail("thresholds", "expected a list of integers");
    if (thresholds.size() != n) fail("thresholds", "expected " + std::to_string(n) + " entries");
    for (std::size_t i = 0; i < thresholds.size(); ++i)
        inst.thresholds.push_back(static_cast<std::int32_t>(
            non_negative(thresholds[i], "thresholds[" + std::to_string(i) + "]", std::numeric_limits<std::int32_t>::max())));

    inst.lambda = non_negative(require(doc, "lambda"), "lambda");
    inst.beta = non_negative(require(doc, "beta"), "beta");

    if (const auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) fail("name", "expected a string");
        file.name = it->get<std::string>();
    }
    return file;
}

InstanceFile read_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("instance", "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

std::string format_instance(const InstanceFile& file) {
    const auto& inst = file.instance;
    std::ostringstream out;
    out << "{\n";
    if (file.name) out << "  \"name\": " << json(*file.name).dump() << ",\n";
    out << "  \"n\": " << inst.size() << ",\n";
    out << "  \"lambda\": " << inst.lambda << ",\n";
    out << "  \"beta\": " << inst.beta << ",\n";
    out << "  \"thresholds\": [";
    for (std::size_t v = 0; v < inst.thresholds.size(); ++v) out << (v ? ", " : "") << inst.thresholds[v];
    out << "],\n";
    out << "  \"edges\": [";
    const auto edges = inst.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        out << (i ? ", " : "") << '[' << edges[i].first << ", " << edges[i].second << ']';
    out << "]\n}\n";
    return out.str();
}

void write_instance(const std::filesystem::path& path, const InstanceFile& file) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << format_instance(file);
}

} // namespace mis
