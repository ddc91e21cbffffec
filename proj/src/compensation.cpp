#include "capdelta/compensation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace capdelta {

namespace {

constexpr double kRateEps = 1e-9;

// Largest shortfall absorbable into `headroom` requirement units at `rate`.
int max_absorbable(int headroom, double rate) {
    if (headroom <= 0)
        return 0;
    return static_cast<int>(std::floor(headroom / rate + kRateEps));
}

int raise_for(int shortfall, double rate) {
    return static_cast<int>(std::ceil(rate * shortfall - kRateEps));
}

} // namespace

std::vector<std::pair<CapabilityId, int>> find_reserves(const DeltaVector& dv) {
    std::vector<std::pair<CapabilityId, int>> reserves;
    for (const Delta& d : dv.deltas)
        if (d.value < 0)
            reserves.emplace_back(d.capability, -d.value);
    std::sort(reserves.begin(), reserves.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.second != rhs.second)
            return lhs.second > rhs.second;
        return lhs.first < rhs.first;
    });
    return reserves;
}

CompensationPlan compensate(const Action& action, const AgentProfile& human,
                            const AgentProfile& autonomous, const TeamSpec& spec,
                            const std::vector<ConjugatedPair>& pairs, SelectionPolicy policy) {
    for (const ConjugatedPair& pair : pairs) {
        if (pair.degraded == pair.compensator)
            throw std::invalid_argument("conjugated pair must relate two distinct capabilities: " +
                                        render(pair.degraded));
        if (!spec.knows(pair.degraded))
            throw std::invalid_argument("pair references unknown capability " +
                                        render(pair.degraded));
        if (!spec.knows(pair.compensator))
            throw std::invalid_argument("pair references unknown capability " +
                                        render(pair.compensator));
        if (!(pair.rate > 0.0))
            throw std::invalid_argument("pair rate must be > 0");
    }

    const AgentProfile h = stamina_scaled(human);
    const AgentProfile a = stamina_scaled(autonomous);

    // Capacity-based team capability per action capability.
    std::map<CapabilityId, int> team_cap;
    PerformanceAssignment h_caps, a_caps;
    for (const auto& [id, requirement] : action.requirements) {
        (void)requirement;
        h_caps.values[id] = h.capacity(id);
        a_caps.values[id] = a.capacity(id);
        team_cap[id] = team_capability(h.capacity(id), a.capacity(id), spec.kind_for(id),
                                       spec.scale);
    }
    DeltaVector dv = delta_vector(action, h_caps, a_caps, spec);

    CompensationPlan plan;
    plan.action_id = action.action_id;

    std::map<CapabilityId, int> adjusted = action.requirements;
    auto resolve_all = [&] {
        for (const auto& [id, requirement] : adjusted)
            plan.distributions.emplace(
                id, solve_distribution(requirement, spec.kind_for(id), a.capacity(id),
                                       h.capacity(id), policy, spec.scale));
    };

    std::vector<CapabilityId> degraded;
    for (const Delta& d : dv.deltas)
        if (d.value > 0)
            degraded.push_back(d.capability);
    if (degraded.empty()) {
        plan.status = CompensationStatus::NoOpAllFulfilled;
        resolve_all();
        return plan;
    }

    const std::vector<std::pair<CapabilityId, int>> reserves = find_reserves(dv);

    bool all_absorbed = true;
    for (const CapabilityId& j : degraded) {
        int shortfall = action.requirements.at(j) - team_cap.at(j);
        adjusted[j] = team_cap.at(j); // virtual lowering puts the delta at zero

        for (const auto& [target, reserve] : reserves) {
            (void)reserve;
            if (shortfall == 0)
                break;
            auto pair_it = std::find_if(pairs.begin(), pairs.end(), [&](const ConjugatedPair& p) {
                return p.degraded == j && p.compensator == target;
            });
            if (pair_it == pairs.end())
                continue;
            int cap_limit = std::min(spec.scale.q_max, team_cap.at(target));
            int headroom = cap_limit - adjusted.at(target);
            int moved = std::min(shortfall, max_absorbable(headroom, pair_it->rate));
            if (moved <= 0)
                continue;
            int raise = raise_for(moved, pair_it->rate);
            adjusted[target] += raise;
            plan.transfers.push_back({*pair_it, moved, raise});
            shortfall -= moved;
        }
        if (shortfall > 0) {
            plan.residuals.push_back({j, shortfall});
            all_absorbed = false;
        }
    }

    for (const auto& [id, value] : adjusted)
        if (value != action.requirements.at(id))
            plan.adjustments.push_back({id, action.requirements.at(id), value});

    if (all_absorbed)
        plan.status = CompensationStatus::Compensated;
    else if (!plan.transfers.empty())
        plan.status = CompensationStatus::PartiallyCompensated;
    else
        plan.status = CompensationStatus::Uncompensatable;

    resolve_all();
    return plan;
}

Action apply_plan(const Action& action, const CompensationPlan& plan) {
    Action adjusted = action;
    for (const VirtualRequirement& vr : plan.adjustments)
        adjusted.requirements[vr.capability] = vr.adjusted;
    return adjusted;
}

Roles infer_roles(const CompensationPlan& plan) {
    std::vector<CapabilityId> basis;
    for (const VirtualRequirement& vr : plan.adjustments)
        basis.push_back(vr.capability);
    if (basis.empty())
        for (const auto& [id, outcome] : plan.distributions) {
            (void)outcome;
            basis.push_back(id);
        }

    int human_total = 0;
    int auto_total = 0;
    for (const CapabilityId& id : basis) {
        auto it = plan.distributions.find(id);
        if (it == plan.distributions.end() || it->second.is_deficit())
            continue;
        human_total += it->second.chosen().point.human_perf;
        auto_total += it->second.chosen().point.auto_perf;
    }

    Roles roles;
    if (human_total > auto_total) {
        roles.supporter = AgentKind::Human;
        roles.leader = AgentKind::Autonomous;
    } else {
        roles.supporter = AgentKind::Autonomous;
        roles.leader = AgentKind::Human;
    }
    return roles;
}

} // namespace capdelta
