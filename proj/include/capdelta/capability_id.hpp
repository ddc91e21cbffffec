#pragma once
// Dotted capability identifiers: a feature complex (1-9), a top-level
// capability and an optional detailed level, e.g. "3.02.01". The canonical
// rendering zero-pads the lower two levels to two digits.

#include <compare>
#include <optional>
#include <string>

namespace capdelta {

struct CapabilityId {
    int complex_part = 1; // feature complex, 1-9
    int top_level = 1;    // >= 1
    std::optional<int> detailed; // >= 1 when present

    auto operator<=>(const CapabilityId&) const = default;
};

// Canonical dotted form, e.g. (3, 2, 1) -> "3.02.01".
std::string render(const CapabilityId& id);

// Parses 2- or 3-group dotted notation. Accepts unpadded groups ("3.2").
// Throws std::invalid_argument naming the offending token.
CapabilityId parse_capability_id(const std::string& text);

} // namespace capdelta
