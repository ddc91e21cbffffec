#include "capdelta/capability_id.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace capdelta {

namespace {

[[noreturn]] void fail(const std::string& text, const std::string& why) {
    throw std::invalid_argument("capability id '" + text + "': " + why);
}

int parse_group(const std::string& text, const std::string& group) {
    if (group.empty())
        fail(text, "empty group");
    if (group.size() > 6)
        fail(text, "group '" + group + "' too long");
    int value = 0;
    auto [ptr, ec] = std::from_chars(group.data(), group.data() + group.size(), value);
    if (ec != std::errc{} || ptr != group.data() + group.size())
        fail(text, "group '" + group + "' is not a number");
    return value;
}

} // namespace

std::string render(const CapabilityId& id) {
    char buf[32];
    if (id.detailed)
        std::snprintf(buf, sizeof buf, "%d.%02d.%02d", id.complex_part, id.top_level, *id.detailed);
    else
        std::snprintf(buf, sizeof buf, "%d.%02d", id.complex_part, id.top_level);
    return buf;
}

CapabilityId parse_capability_id(const std::string& text) {
    std::vector<std::string> groups;
    std::size_t start = 0;
    while (true) {
        std::size_t dot = text.find('.', start);
        groups.push_back(text.substr(start, dot == std::string::npos ? dot : dot - start));
        if (dot == std::string::npos)
            break;
        start = dot + 1;
    }
    if (groups.size() < 2)
        fail(text, "expected 2 or 3 dotted groups");
    if (groups.size() > 3)
        fail(text, "too many groups (" + std::to_string(groups.size()) + ")");

    CapabilityId id;
    id.complex_part = parse_group(text, groups[0]);
    if (id.complex_part < 1 || id.complex_part > 9)
        fail(text, "complex '" + groups[0] + "' outside 1-9");
    id.top_level = parse_group(text, groups[1]);
    if (id.top_level < 1)
        fail(text, "top level '" + groups[1] + "' must be >= 1");
    if (groups.size() == 3) {
        int detailed = parse_group(text, groups[2]);
        if (detailed < 1)
            fail(text, "detailed level '" + groups[2] + "' must be >= 1");
        id.detailed = detailed;
    }
    return id;
}

} // namespace capdelta
