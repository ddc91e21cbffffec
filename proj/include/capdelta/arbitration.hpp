#pragma once
// Deterministic two-agent arbitration: agents propose control distributions
// from their own capacities and their beliefs about the other agent, observe
// each other's proposals, and converge to consensus or report dissonance.
// Task sequences add stamina drain and recovery around each action.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "capdelta/aggregation.hpp"
#include "capdelta/compensation.hpp"
#include "capdelta/cr_solver.hpp"
#include "capdelta/profile.hpp"

namespace capdelta {

// Lower-bound estimate of another agent's capacities, grown from observed
// performances. Estimates start at 0 and never decrease.
struct AgentBelief {
    std::string subject;
    std::map<CapabilityId, int> estimated;
    std::map<CapabilityId, int> observation_count;

    bool operator==(const AgentBelief&) const = default;

    int estimate(const CapabilityId& id) const {
        auto it = estimated.find(id);
        return it == estimated.end() ? 0 : it->second;
    }
};

// Folds one witnessed performance into the belief. An under-read lowers the
// reading by one level before the monotone max update.
AgentBelief observe(AgentBelief belief, const CapabilityId& capability, int witnessed_perf,
                    bool under_read, const QuantScale& scale = {});

// Belief that matches the subject's stamina-scaled capacities on the
// action's capabilities exactly.
AgentBelief exact_belief(const AgentProfile& subject, const Action& action);

struct Proposal {
    int round = 0;
    std::string proposer;
    std::map<CapabilityId, ControlDistribution> distributions;

    bool operator==(const Proposal&) const = default;
};

// Solves each action capability with the proposer's own effective capacity
// on its axis and the believed capacity on the other; falls back to the
// best-effort point under deficits. Deterministic.
Proposal propose(const AgentProfile& self, const AgentBelief& about_other, const Action& action,
                 const TeamSpec& spec, SelectionPolicy policy, int round = 1);

enum class ConsensusStatus { Consensus, Dissonance };

inline const char* to_string(ConsensusStatus s) {
    return s == ConsensusStatus::Consensus ? "consensus" : "dissonance";
}

struct ConsensusState {
    ConsensusStatus status = ConsensusStatus::Dissonance;
    int rounds_used = 0;
    std::optional<std::map<CapabilityId, ControlDistribution>> agreed;
    std::vector<Proposal> log; // both agents' proposals, round by round

    bool operator==(const ConsensusState&) const = default;
};

struct SimulationConfig {
    std::uint64_t seed = 0;
    int max_rounds = 6;
    double perception_noise = 0.0;          // probability of a 1-level under-read
    double stamina_drain_per_action = 0.0;  // multiplicative decay factor
    double stamina_recovery_per_break = 0.0;

    bool operator==(const SimulationConfig&) const = default;

    void check() const;
};

// Runs proposal rounds from zero initial beliefs until proposals match or
// max_rounds is exhausted. Identical seeds reproduce identical runs.
ConsensusState arbitrate(const AgentProfile& human, const AgentProfile& autonomous,
                         const Action& action, const TeamSpec& spec,
                         const SimulationConfig& config, SelectionPolicy policy);

// Same with caller-supplied initial beliefs (e.g. exact mutual knowledge).
ConsensusState arbitrate_with_beliefs(const AgentProfile& human, const AgentProfile& autonomous,
                                      const Action& action, const TeamSpec& spec,
                                      const SimulationConfig& config, SelectionPolicy policy,
                                      AgentBelief human_about_auto, AgentBelief auto_about_human,
                                      std::mt19937_64* rng = nullptr);

struct SequenceStep {
    bool is_break = false;
    Action action; // ignored for breaks

    bool operator==(const SequenceStep&) const = default;
};

enum class StepOutcome {
    Fulfilled,
    Compensated,
    PartiallyCompensated,
    Uncompensatable,
    Dissonance,
    Break,
};

inline const char* to_string(StepOutcome o) {
    switch (o) {
    case StepOutcome::Fulfilled: return "fulfilled";
    case StepOutcome::Compensated: return "compensated";
    case StepOutcome::PartiallyCompensated: return "partially_compensated";
    case StepOutcome::Uncompensatable: return "uncompensatable";
    case StepOutcome::Dissonance: return "dissonance";
    default: return "break";
    }
}

struct SequenceRecord {
    int index = 0;
    StepOutcome outcome = StepOutcome::Fulfilled;
    std::string action_id;
    double stamina = 1.0; // human stamina after this step's drain/recovery
    DeltaVector deltas;   // capacity-based, from effective capacities
    Fulfillment fulfillment = Fulfillment::Fulfilled;
    ConsensusStatus arbitration = ConsensusStatus::Consensus;
    int rounds_used = 0;
    std::map<CapabilityId, ControlDistribution> agreed; // empty on dissonance
    bool any_deficit = false;
    std::optional<CompensationPlan> compensation;

    bool operator==(const SequenceRecord&) const = default;
};

struct SequenceReport {
    std::vector<SequenceRecord> records;

    bool operator==(const SequenceReport&) const = default;

    bool all_ok() const;
};

// Per action: drain the human's stamina, arbitrate on effective capacities,
// compensate on dissonance or deficit, log the outcome. Break steps apply
// stamina recovery. Deterministic under the config seed.
SequenceReport run_sequence(const AgentProfile& human, const AgentProfile& autonomous,
                            const std::vector<SequenceStep>& steps, const TeamSpec& spec,
                            const std::vector<ConjugatedPair>& pairs,
                            const SimulationConfig& config, SelectionPolicy policy);

} // namespace capdelta
