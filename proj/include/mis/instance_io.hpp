#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "mis/errors.hpp"
#include "mis/graph.hpp"

namespace mis {

/// A malformed instance document. The message starts with the offending field.
class InstanceParseError : public InputError {
public:
    using InputError::InputError;
};

struct InstanceFile {
    Instance instance;
    std::optional<std::string> name;

    friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

/// JSON object with fields n, edges ([[u, v], ...], 0-based), thresholds,
/// lambda, beta and an optional name. Unknown fields are ignored.
InstanceFile parse_instance(std::string_view text);
InstanceFile read_instance(const std::filesystem::path& path);

/// Deterministic rendering: fixed field order, edges as stored in the graph.
std::string format_instance(const InstanceFile& file);
void write_instance(const std::filesystem::path& path, const InstanceFile& file);

} // namespace mis
