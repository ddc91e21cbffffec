#pragma once
// Team capability formation and capability deltas: combine two agents'
// performances per capability and measure the gap to an action's
// requirements.

#include <map>
#include <string>
#include <vector>

#include "capdelta/aggregation_kind.hpp"
#include "capdelta/capability_id.hpp"
#include "capdelta/profile.hpp"
#include "capdelta/quant.hpp"
#include "capdelta/taxonomy.hpp"

namespace capdelta {

// Per-capability aggregation kinds resolved against a taxonomy's defaults.
struct TeamSpec {
    QuantScale scale;
    std::map<CapabilityId, AggregationKind> kinds;

    bool operator==(const TeamSpec&) const = default;

    static TeamSpec from_taxonomy(const Taxonomy& taxonomy, QuantScale scale = {},
                                  const std::map<CapabilityId, AggregationKind>& overrides = {});

    bool knows(const CapabilityId& id) const { return kinds.count(id) != 0; }
    AggregationKind kind_for(const CapabilityId& id) const; // throws on unknown id
};

// One step of a task: quantified requirements over a subset of capabilities.
struct Action {
    std::string action_id;
    std::map<CapabilityId, int> requirements;

    bool operator==(const Action&) const = default;
};

struct Delta {
    CapabilityId capability;
    int value = 0; // requirement - team capability

    bool operator==(const Delta&) const = default;
};

struct DeltaVector {
    std::string action_id;
    std::vector<Delta> deltas; // keyed exactly by the action's requirements

    bool operator==(const DeltaVector&) const = default;
};

enum class Fulfillment { Fulfilled, OverFulfilled, UnderFulfilled };

inline const char* to_string(Fulfillment f) {
    switch (f) {
    case Fulfillment::Fulfilled: return "fulfilled";
    case Fulfillment::OverFulfilled: return "over_fulfilled";
    default: return "under_fulfilled";
    }
}

// f(h, a): clamped sum for summative capabilities, maximum otherwise.
// Inputs must lie in [0, q_max].
int team_capability(int human_perf, int auto_perf, AggregationKind kind, const QuantScale& scale);

// requirement - team capability; positive means under-fulfillment.
int capability_delta(int requirement, int team_cap, const QuantScale& scale);

// One delta per requirement key. Missing performance keys count as 0.
DeltaVector delta_vector(const Action& action, const PerformanceAssignment& human,
                         const PerformanceAssignment& autonomous, const TeamSpec& spec);

// UnderFulfilled if any delta > 0, OverFulfilled if none positive and some
// negative, Fulfilled when all are exactly zero.
Fulfillment classify_fulfillment(const DeltaVector& dv);

} // namespace capdelta
