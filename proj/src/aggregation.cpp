#include "capdelta/aggregation.hpp"

#include <algorithm>
#include <stdexcept>

namespace capdelta {

TeamSpec TeamSpec::from_taxonomy(const Taxonomy& taxonomy, QuantScale scale,
                                 const std::map<CapabilityId, AggregationKind>& overrides) {
    scale.check();
    TeamSpec spec;
    spec.scale = scale;
    for (const CapabilityDef& def : taxonomy.defs())
        spec.kinds[def.id] = def.summativity_default;
    for (const auto& [id, kind] : overrides) {
        if (!taxonomy.contains(id))
            throw std::invalid_argument("aggregation override for unknown capability " +
                                        render(id));
        spec.kinds[id] = kind;
    }
    return spec;
}

AggregationKind TeamSpec::kind_for(const CapabilityId& id) const {
    auto it = kinds.find(id);
    if (it == kinds.end())
        throw std::invalid_argument("no aggregation kind for capability " + render(id));
    return it->second;
}

int team_capability(int human_perf, int auto_perf, AggregationKind kind,
                    const QuantScale& scale) {
    scale.require(human_perf, "human performance");
    scale.require(auto_perf, "autonomous performance");
    if (kind == AggregationKind::Summative)
        return std::min(human_perf + auto_perf, scale.q_max);
    return std::max(human_perf, auto_perf);
}

int capability_delta(int requirement, int team_cap, const QuantScale& scale) {
    scale.require(requirement, "requirement");
    scale.require(team_cap, "team capability");
    return requirement - team_cap;
}

DeltaVector delta_vector(const Action& action, const PerformanceAssignment& human,
                         const PerformanceAssignment& autonomous, const TeamSpec& spec) {
    DeltaVector dv;
    dv.action_id = action.action_id;
    dv.deltas.reserve(action.requirements.size());
    for (const auto& [id, requirement] : action.requirements) {
        int team = team_capability(human.value_or_zero(id), autonomous.value_or_zero(id),
                                   spec.kind_for(id), spec.scale);
        dv.deltas.push_back({id, capability_delta(requirement, team, spec.scale)});
    }
    return dv;
}

Fulfillment classify_fulfillment(const DeltaVector& dv) {
    bool any_negative = false;
    for (const Delta& d : dv.deltas) {
        if (d.value > 0)
            return Fulfillment::UnderFulfilled;
        if (d.value < 0)
            any_negative = true;
    }
    return any_negative ? Fulfillment::OverFulfilled : Fulfillment::Fulfilled;
}

} // namespace capdelta
