#pragma once
// Delta compensation: restore controllability by virtually lowering a
// degraded capability's requirement to the team's capability and raising
// requirements on conjugated capabilities that hold usable reserves.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "capdelta/aggregation.hpp"
#include "capdelta/cr_solver.hpp"
#include "capdelta/profile.hpp"

namespace capdelta {

// Directional influence pair: shortfall on `degraded` may be absorbed by
// raising the requirement on `compensator`. The reverse direction is a
// separate pair. `rate` is requirement units of compensator per unit of
// shortfall.
struct ConjugatedPair {
    CapabilityId degraded;
    CapabilityId compensator;
    double rate = 1.0;

    auto operator<=>(const ConjugatedPair&) const = default;
};

struct VirtualRequirement {
    CapabilityId capability;
    int original = 0;
    int adjusted = 0;

    bool operator==(const VirtualRequirement&) const = default;
};

struct Transfer {
    ConjugatedPair pair;
    int shortfall_moved = 0;
    int requirement_raise = 0;

    bool operator==(const Transfer&) const = default;
};

struct ResidualShortfall {
    CapabilityId capability;
    int remaining = 0;

    bool operator==(const ResidualShortfall&) const = default;
};

enum class CompensationStatus {
    NoOpAllFulfilled,
    Compensated,
    PartiallyCompensated,
    Uncompensatable,
};

inline const char* to_string(CompensationStatus s) {
    switch (s) {
    case CompensationStatus::NoOpAllFulfilled: return "no_op_all_fulfilled";
    case CompensationStatus::Compensated: return "compensated";
    case CompensationStatus::PartiallyCompensated: return "partially_compensated";
    default: return "uncompensatable";
    }
}

struct CompensationPlan {
    std::string action_id;
    CompensationStatus status = CompensationStatus::NoOpAllFulfilled;
    std::vector<VirtualRequirement> adjustments; // lowered and raised requirements
    std::vector<Transfer> transfers;
    std::vector<ResidualShortfall> residuals;
    // Re-solved distribution per action capability at its final requirement.
    std::map<CapabilityId, SolveOutcome> distributions;

    bool operator==(const CompensationPlan&) const = default;
};

// Capabilities with usable reserves (delta < 0), largest reserve first,
// ties by ascending capability id.
std::vector<std::pair<CapabilityId, int>> find_reserves(const DeltaVector& dv);

// Runs the compensation pattern against capacity-based team capabilities.
// Pair targets absorb shortfall only up to min(q_max, team capacity) on the
// compensator, consumed in find_reserves order. Throws when a pair references
// a capability the team spec does not know.
CompensationPlan compensate(const Action& action, const AgentProfile& human,
                            const AgentProfile& autonomous, const TeamSpec& spec,
                            const std::vector<ConjugatedPair>& pairs, SelectionPolicy policy);

// The action with the plan's virtual requirements applied.
Action apply_plan(const Action& action, const CompensationPlan& plan);

// Teaming roles derived from a plan: the supporter contributes more across
// the adjusted capabilities (all capabilities when nothing was adjusted);
// ties go to the autonomous agent.
struct Roles {
    AgentKind leader = AgentKind::Human;
    AgentKind supporter = AgentKind::Autonomous;

    bool operator==(const Roles&) const = default;
};

Roles infer_roles(const CompensationPlan& plan);

} // namespace capdelta
