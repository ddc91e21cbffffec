#include "capdelta/profile.hpp"

#include <cmath>
#include <stdexcept>

namespace capdelta {

namespace {

// Tolerance for decimal parse wobble on products that are exact multiples.
constexpr double kFloorEps = 1e-9;

int scaled_floor(int capacity, double stamina) {
    return static_cast<int>(std::floor(capacity * stamina + kFloorEps));
}

} // namespace

bool ResourceState::has(const std::string& name) const {
    for (const auto* table : {&actuation, &environmental, &societal}) {
        auto it = table->find(name);
        if (it != table->end() && it->second)
            return true;
    }
    return false;
}

int effective_capacity(const AgentProfile& profile, const Taxonomy& taxonomy,
                       const CapabilityId& id, const std::set<std::string>& required_resources) {
    if (!taxonomy.contains(id))
        throw std::invalid_argument("unknown capability " + render(id));
    for (const std::string& name : required_resources)
        if (!profile.resources.has(name))
            return 0;
    return scaled_floor(profile.capacity(id), profile.resources.mental_stamina);
}

AgentProfile stamina_scaled(const AgentProfile& profile) {
    AgentProfile scaled = profile;
    for (auto& [id, capacity] : scaled.capacities)
        capacity = scaled_floor(capacity, profile.resources.mental_stamina);
    scaled.resources.mental_stamina = 1.0;
    return scaled;
}

ValidationReport validate_profile(const AgentProfile& profile, const Taxonomy& taxonomy,
                                  const QuantScale& scale) {
    ValidationReport report;
    if (profile.agent_id.empty())
        report.violations.push_back({"agent_id", "agent_id must not be empty"});
    for (const auto& [id, capacity] : profile.capacities) {
        if (!taxonomy.contains(id))
            report.violations.push_back({render(id), "unknown capability"});
        if (!scale.contains(capacity))
            report.violations.push_back(
                {render(id), "value out of range: " + std::to_string(capacity) +
                                 " not in [0, " + std::to_string(scale.q_max) + "]"});
    }
    double stamina = profile.resources.mental_stamina;
    if (!(stamina >= 0.0 && stamina <= 1.0))
        report.violations.push_back({"mental_stamina", "must lie in [0, 1]"});
    return report;
}

ValidationReport validate_performance(const PerformanceAssignment& perf,
                                      const AgentProfile& profile, const QuantScale& scale) {
    ValidationReport report;
    for (const auto& [id, value] : perf.values) {
        if (!scale.contains(value)) {
            report.violations.push_back(
                {render(id), "performance out of range: " + std::to_string(value)});
            continue;
        }
        if (value > profile.capacity(id))
            report.violations.push_back(
                {render(id), "performance " + std::to_string(value) + " exceeds capacity " +
                                 std::to_string(profile.capacity(id))});
    }
    return report;
}

} // namespace capdelta
