#pragma once
// Delta reports: per-action requirement/team-capability/delta tables with
// solved distributions and optional compensation plans. The machine form is
// versioned JSON and round-trips losslessly; the text form derives from it.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "capdelta/aggregation.hpp"
#include "capdelta/arbitration.hpp"
#include "capdelta/compensation.hpp"
#include "capdelta/cr_solver.hpp"
#include "capdelta/formats.hpp"

namespace capdelta {

struct CapabilityRow {
    CapabilityId capability;
    int requirement = 0;
    AggregationKind kind = AggregationKind::NonSummative;
    int human_capacity = 0; // effective
    int auto_capacity = 0;
    int human_performance = 0; // values the delta was computed from
    int auto_performance = 0;
    int team_capability = 0;
    int delta = 0;
    SolveOutcome solve;                 // capacity-based recommendation
    std::optional<SpaceLabel> space;    // of the chosen point; absent on deficit

    bool operator==(const CapabilityRow&) const = default;
};

struct ActionReport {
    std::string action_id;
    Fulfillment fulfillment = Fulfillment::Fulfilled;
    bool any_deficit = false;
    std::vector<CapabilityRow> rows;
    std::optional<CompensationPlan> compensation;
    std::optional<Roles> roles;

    bool operator==(const ActionReport&) const = default;
};

struct DeltaReport {
    std::vector<ActionReport> actions;

    bool operator==(const DeltaReport&) const = default;
};

// One report entry per action, in task order. Performances default to the
// agents' effective capacities when none are supplied.
DeltaReport make_delta_report(const AgentProfile& human, const AgentProfile& autonomous,
                              const TeamSpec& spec, const std::vector<Action>& actions,
                              SelectionPolicy policy,
                              const PerformanceFile* performances = nullptr);

// Delta report with the compensation pattern applied to every action whose
// capacity-based deltas leave a shortfall.
DeltaReport make_compensation_report(const AgentProfile& human, const AgentProfile& autonomous,
                                     const TeamSpec& spec, const std::vector<Action>& actions,
                                     const std::vector<ConjugatedPair>& pairs,
                                     SelectionPolicy policy);

nlohmann::json report_to_json(const DeltaReport& report);
DeltaReport report_from_json(const nlohmann::json& j); // throws ParseError on bad shape
std::string report_to_text(const DeltaReport& report);

nlohmann::json solve_outcome_to_json(const SolveOutcome& outcome);

nlohmann::json plan_to_json(const CompensationPlan& plan);
CompensationPlan plan_from_json(const nlohmann::json& j);
std::string plan_to_text(const CompensationPlan& plan);

nlohmann::json consensus_to_json(const ConsensusState& state);
nlohmann::json sequence_report_to_json(const SequenceReport& report);
std::string sequence_report_to_text(const SequenceReport& report);

} // namespace capdelta
