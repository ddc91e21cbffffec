#pragma once
// Agent capability profiles, resource state, and resource-gated effective
// capacity. All types are immutable values after construction; operations
// are pure functions.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "capdelta/capability_id.hpp"
#include "capdelta/quant.hpp"
#include "capdelta/taxonomy.hpp"

namespace capdelta {

enum class AgentKind { Human, Autonomous };

inline const char* to_string(AgentKind k) {
    return k == AgentKind::Human ? "human" : "autonomous";
}

// Binary resource gates plus mental stamina in [0,1]. A capability whose
// required resources are missing cannot be acted at all.
struct ResourceState {
    std::map<std::string, bool> actuation;
    std::map<std::string, bool> environmental;
    std::map<std::string, bool> societal;
    double mental_stamina = 1.0;

    bool operator==(const ResourceState&) const = default;

    bool has(const std::string& name) const;
};

struct AgentProfile {
    std::string agent_id;
    AgentKind kind = AgentKind::Human;
    std::map<CapabilityId, int> capacities; // absent id == capacity 0
    ResourceState resources;

    bool operator==(const AgentProfile&) const = default;

    int capacity(const CapabilityId& id) const {
        auto it = capacities.find(id);
        return it == capacities.end() ? 0 : it->second;
    }
};

// Per-capability performance; always <= the agent's capacity.
struct PerformanceAssignment {
    std::map<CapabilityId, int> values;

    bool operator==(const PerformanceAssignment&) const = default;

    int value_or_zero(const CapabilityId& id) const {
        auto it = values.find(id);
        return it == values.end() ? 0 : it->second;
    }
};

// Capacity the agent can actually act: 0 if any required resource gate is
// down, otherwise the stamina-scaled capacity floor(capacity * stamina).
// Throws on ids outside the taxonomy.
int effective_capacity(const AgentProfile& profile, const Taxonomy& taxonomy,
                       const CapabilityId& id,
                       const std::set<std::string>& required_resources = {});

// Profile copy with every capacity replaced by its stamina-scaled value and
// stamina reset to 1. Idempotent at full stamina.
AgentProfile stamina_scaled(const AgentProfile& profile);

struct Violation {
    std::string subject; // capability id or field name
    std::string message;

    bool operator==(const Violation&) const = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

// Violations are data, not faults: returns an empty report iff all profile
// invariants hold against the taxonomy and scale.
ValidationReport validate_profile(const AgentProfile& profile, const Taxonomy& taxonomy,
                                  const QuantScale& scale);

// Checks 0 <= performance <= capacity per capability.
ValidationReport validate_performance(const PerformanceAssignment& perf,
                                      const AgentProfile& profile, const QuantScale& scale);

} // namespace capdelta
