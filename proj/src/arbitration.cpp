#include "capdelta/arbitration.hpp"

#include <algorithm>
#include <stdexcept>

namespace capdelta {

AgentBelief observe(AgentBelief belief, const CapabilityId& capability, int witnessed_perf,
                    bool under_read, const QuantScale& scale) {
    scale.require(witnessed_perf, "witnessed performance");
    int reading = std::max(0, witnessed_perf - (under_read ? 1 : 0));
    int& estimate = belief.estimated[capability];
    estimate = std::max(estimate, reading);
    belief.observation_count[capability] += 1;
    return belief;
}

AgentBelief exact_belief(const AgentProfile& subject, const Action& action) {
    AgentBelief belief;
    belief.subject = subject.agent_id;
    AgentProfile scaled = stamina_scaled(subject);
    for (const auto& [id, requirement] : action.requirements) {
        (void)requirement;
        belief.estimated[id] = scaled.capacity(id);
    }
    return belief;
}

Proposal propose(const AgentProfile& self, const AgentBelief& about_other, const Action& action,
                 const TeamSpec& spec, SelectionPolicy policy, int round) {
    AgentProfile own = stamina_scaled(self);
    Proposal proposal;
    proposal.round = round;
    proposal.proposer = self.agent_id;
    for (const auto& [id, requirement] : action.requirements) {
        int own_cap = own.capacity(id);
        int other_cap = about_other.estimate(id);
        int cap_auto = self.kind == AgentKind::Autonomous ? own_cap : other_cap;
        int cap_human = self.kind == AgentKind::Human ? own_cap : other_cap;
        proposal.distributions[id] = best_effort_point(requirement, spec.kind_for(id), cap_auto,
                                                       cap_human, policy, spec.scale);
    }
    return proposal;
}

void SimulationConfig::check() const {
    if (max_rounds < 1)
        throw std::invalid_argument("max_rounds must be >= 1");
    auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!in_unit(perception_noise))
        throw std::invalid_argument("perception_noise must lie in [0, 1]");
    if (!in_unit(stamina_drain_per_action))
        throw std::invalid_argument("stamina_drain_per_action must lie in [0, 1]");
    if (!in_unit(stamina_recovery_per_break))
        throw std::invalid_argument("stamina_recovery_per_break must lie in [0, 1]");
}

ConsensusState arbitrate_with_beliefs(const AgentProfile& human, const AgentProfile& autonomous,
                                      const Action& action, const TeamSpec& spec,
                                      const SimulationConfig& config, SelectionPolicy policy,
                                      AgentBelief human_about_auto, AgentBelief auto_about_human,
                                      std::mt19937_64* rng) {
    config.check();
    std::mt19937_64 local(config.seed);
    if (!rng)
        rng = &local;
    // Explicit draw instead of std::bernoulli_distribution: the mt19937_64
    // output sequence is fully specified, so seeded runs reproduce
    // bit-for-bit across standard libraries.
    auto under_read = [&](std::mt19937_64& gen) {
        double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        return u < config.perception_noise;
    };

    const AgentProfile h = stamina_scaled(human);
    const AgentProfile a = stamina_scaled(autonomous);

    ConsensusState state;
    for (int round = 1; round <= config.max_rounds; ++round) {
        Proposal ph = propose(h, human_about_auto, action, spec, policy, round);
        Proposal pa = propose(a, auto_about_human, action, spec, policy, round);
        state.log.push_back(ph);
        state.log.push_back(pa);
        if (ph.distributions == pa.distributions) {
            state.status = ConsensusStatus::Consensus;
            state.rounds_used = round;
            state.agreed = ph.distributions;
            return state;
        }
        // Each agent witnesses the other's proposed self-contribution.
        for (const auto& [id, requirement] : action.requirements) {
            (void)requirement;
            human_about_auto = observe(human_about_auto, id, pa.distributions.at(id).auto_perf,
                                       under_read(*rng), spec.scale);
            auto_about_human = observe(auto_about_human, id, ph.distributions.at(id).human_perf,
                                       under_read(*rng), spec.scale);
        }
    }
    state.status = ConsensusStatus::Dissonance;
    state.rounds_used = config.max_rounds;
    return state;
}

ConsensusState arbitrate(const AgentProfile& human, const AgentProfile& autonomous,
                         const Action& action, const TeamSpec& spec,
                         const SimulationConfig& config, SelectionPolicy policy) {
    AgentBelief about_auto;
    about_auto.subject = autonomous.agent_id;
    AgentBelief about_human;
    about_human.subject = human.agent_id;
    return arbitrate_with_beliefs(human, autonomous, action, spec, config, policy, about_auto,
                                  about_human);
}

bool SequenceReport::all_ok() const {
    return std::all_of(records.begin(), records.end(), [](const SequenceRecord& r) {
        return r.outcome == StepOutcome::Fulfilled || r.outcome == StepOutcome::Compensated ||
               r.outcome == StepOutcome::Break;
    });
}

SequenceReport run_sequence(const AgentProfile& human, const AgentProfile& autonomous,
                            const std::vector<SequenceStep>& steps, const TeamSpec& spec,
                            const std::vector<ConjugatedPair>& pairs,
                            const SimulationConfig& config, SelectionPolicy policy) {
    config.check();
    std::mt19937_64 rng(config.seed);
    AgentProfile current_human = human;

    SequenceReport report;
    int index = 0;
    for (const SequenceStep& step : steps) {
        SequenceRecord record;
        record.index = index++;
        double& stamina = current_human.resources.mental_stamina;

        if (step.is_break) {
            stamina = std::min(1.0, stamina + config.stamina_recovery_per_break * (1.0 - stamina));
            record.outcome = StepOutcome::Break;
            record.stamina = stamina;
            report.records.push_back(std::move(record));
            continue;
        }

        stamina = std::max(0.0, stamina * (1.0 - config.stamina_drain_per_action));
        record.stamina = stamina;
        record.action_id = step.action.action_id;

        const AgentProfile h = stamina_scaled(current_human);
        const AgentProfile a = stamina_scaled(autonomous);
        PerformanceAssignment h_caps, a_caps;
        for (const auto& [id, requirement] : step.action.requirements) {
            (void)requirement;
            h_caps.values[id] = h.capacity(id);
            a_caps.values[id] = a.capacity(id);
        }
        record.deltas = delta_vector(step.action, h_caps, a_caps, spec);
        record.fulfillment = classify_fulfillment(record.deltas);
        record.any_deficit = record.fulfillment == Fulfillment::UnderFulfilled;

        AgentBelief about_auto;
        about_auto.subject = autonomous.agent_id;
        AgentBelief about_human;
        about_human.subject = human.agent_id;
        ConsensusState consensus = arbitrate_with_beliefs(
            current_human, autonomous, step.action, spec, config, policy, about_auto, about_human,
            &rng);
        record.arbitration = consensus.status;
        record.rounds_used = consensus.rounds_used;
        if (consensus.agreed)
            record.agreed = *consensus.agreed;

        if (consensus.status == ConsensusStatus::Dissonance || record.any_deficit) {
            CompensationPlan plan =
                compensate(step.action, current_human, autonomous, spec, pairs, policy);
            if (consensus.status == ConsensusStatus::Dissonance)
                record.outcome = StepOutcome::Dissonance;
            else if (plan.status == CompensationStatus::Compensated)
                record.outcome = StepOutcome::Compensated;
            else if (plan.status == CompensationStatus::PartiallyCompensated)
                record.outcome = StepOutcome::PartiallyCompensated;
            else
                record.outcome = StepOutcome::Uncompensatable;
            record.compensation = std::move(plan);
        } else {
            record.outcome = StepOutcome::Fulfilled;
        }
        report.records.push_back(std::move(record));
    }
    return report;
}

} // namespace capdelta
