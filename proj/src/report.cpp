#include "capdelta/report.hpp"

#include <sstream>

namespace capdelta {

namespace {

using nlohmann::json;

[[noreturn]] void bad_report(const std::string& message) {
    throw ParseError("<report>", 0, message);
}

Fulfillment fulfillment_from_string(const std::string& s) {
    if (s == "fulfilled")
        return Fulfillment::Fulfilled;
    if (s == "over_fulfilled")
        return Fulfillment::OverFulfilled;
    if (s == "under_fulfilled")
        return Fulfillment::UnderFulfilled;
    bad_report("unknown fulfillment '" + s + "'");
}

SpaceLabel space_from_string(const std::string& s) {
    if (s == "collaborative")
        return SpaceLabel::Collaborative;
    if (s == "summative_only")
        return SpaceLabel::SummativeOnly;
    if (s == "insufficient")
        return SpaceLabel::Insufficient;
    bad_report("unknown space label '" + s + "'");
}

CompensationStatus status_from_string(const std::string& s) {
    if (s == "no_op_all_fulfilled")
        return CompensationStatus::NoOpAllFulfilled;
    if (s == "compensated")
        return CompensationStatus::Compensated;
    if (s == "partially_compensated")
        return CompensationStatus::PartiallyCompensated;
    if (s == "uncompensatable")
        return CompensationStatus::Uncompensatable;
    bad_report("unknown compensation status '" + s + "'");
}

AgentKind agent_kind_from_string(const std::string& s) {
    if (s == "human")
        return AgentKind::Human;
    if (s == "autonomous")
        return AgentKind::Autonomous;
    bad_report("unknown agent kind '" + s + "'");
}

json point_to_json(const ControlDistribution& p) {
    return json{{"auto", p.auto_perf}, {"human", p.human_perf}};
}

ControlDistribution point_from_json(const json& j) {
    return {j.at("auto").get<int>(), j.at("human").get<int>()};
}

json solve_to_json(const SolveOutcome& outcome) {
    if (outcome.is_deficit()) {
        const ControlDeficit& d = outcome.deficit();
        return json{{"deficit", true},
                    {"requirement", d.requirement},
                    {"cap_auto", d.cap_auto},
                    {"cap_human", d.cap_human},
                    {"best_achievable", d.best_achievable}};
    }
    const ChosenDistribution& c = outcome.chosen();
    return json{{"deficit", false},
                {"point", point_to_json(c.point)},
                {"residual_delta", c.residual_delta},
                {"space", to_string(c.space)}};
}

SolveOutcome solve_from_json(const json& j) {
    if (j.at("deficit").get<bool>()) {
        ControlDeficit d;
        d.requirement = j.at("requirement").get<int>();
        d.cap_auto = j.at("cap_auto").get<int>();
        d.cap_human = j.at("cap_human").get<int>();
        d.best_achievable = j.at("best_achievable").get<int>();
        return SolveOutcome{d};
    }
    ChosenDistribution c;
    c.point = point_from_json(j.at("point"));
    c.residual_delta = j.at("residual_delta").get<int>();
    c.space = space_from_string(j.at("space").get<std::string>());
    return SolveOutcome{c};
}

std::string point_text(const ControlDistribution& p) {
    return "(a=" + std::to_string(p.auto_perf) + ", h=" + std::to_string(p.human_perf) + ")";
}

} // namespace

json solve_outcome_to_json(const SolveOutcome& outcome) { return solve_to_json(outcome); }

json plan_to_json(const CompensationPlan& plan) {
    json adjustments = json::array();
    for (const VirtualRequirement& vr : plan.adjustments)
        adjustments.push_back({{"capability", render(vr.capability)},
                               {"original", vr.original},
                               {"adjusted", vr.adjusted}});
    json transfers = json::array();
    for (const Transfer& t : plan.transfers)
        transfers.push_back({{"degraded", render(t.pair.degraded)},
                             {"compensator", render(t.pair.compensator)},
                             {"rate", t.pair.rate},
                             {"shortfall_moved", t.shortfall_moved},
                             {"requirement_raise", t.requirement_raise}});
    json residuals = json::array();
    for (const ResidualShortfall& r : plan.residuals)
        residuals.push_back({{"capability", render(r.capability)}, {"remaining", r.remaining}});
    json distributions = json::object();
    for (const auto& [id, outcome] : plan.distributions)
        distributions[render(id)] = solve_to_json(outcome);
    Roles roles = infer_roles(plan);
    return json{{"action_id", plan.action_id},
                {"status", to_string(plan.status)},
                {"adjustments", adjustments},
                {"transfers", transfers},
                {"residuals", residuals},
                {"distributions", distributions},
                {"roles",
                 {{"leader", to_string(roles.leader)}, {"supporter", to_string(roles.supporter)}}}};
}

CompensationPlan plan_from_json(const json& j) {
    CompensationPlan plan;
    plan.action_id = j.at("action_id").get<std::string>();
    plan.status = status_from_string(j.at("status").get<std::string>());
    for (const json& a : j.at("adjustments"))
        plan.adjustments.push_back({parse_capability_id(a.at("capability").get<std::string>()),
                                    a.at("original").get<int>(), a.at("adjusted").get<int>()});
    for (const json& t : j.at("transfers")) {
        Transfer transfer;
        transfer.pair.degraded = parse_capability_id(t.at("degraded").get<std::string>());
        transfer.pair.compensator = parse_capability_id(t.at("compensator").get<std::string>());
        transfer.pair.rate = t.at("rate").get<double>();
        transfer.shortfall_moved = t.at("shortfall_moved").get<int>();
        transfer.requirement_raise = t.at("requirement_raise").get<int>();
        plan.transfers.push_back(transfer);
    }
    for (const json& r : j.at("residuals"))
        plan.residuals.push_back(
            {parse_capability_id(r.at("capability").get<std::string>()), r.at("remaining").get<int>()});
    for (const auto& [key, value] : j.at("distributions").items())
        plan.distributions.emplace(parse_capability_id(key), solve_from_json(value));
    return plan;
}

std::string plan_to_text(const CompensationPlan& plan) {
    std::ostringstream out;
    out << "compensation plan for action " << plan.action_id << ": " << to_string(plan.status)
        << "\n";
    for (const VirtualRequirement& vr : plan.adjustments)
        out << "  adjust " << render(vr.capability) << ": " << vr.original << " -> " << vr.adjusted
            << "\n";
    for (const Transfer& t : plan.transfers)
        out << "  transfer " << render(t.pair.degraded) << " -> " << render(t.pair.compensator)
            << ": moved " << t.shortfall_moved << " (raise " << t.requirement_raise << ")\n";
    for (const ResidualShortfall& r : plan.residuals)
        out << "  residual " << render(r.capability) << ": " << r.remaining << "\n";
    Roles roles = infer_roles(plan);
    out << "  roles: leader=" << to_string(roles.leader)
        << " supporter=" << to_string(roles.supporter) << "\n";
    for (const auto& [id, outcome] : plan.distributions) {
        out << "  solve " << render(id) << ": ";
        if (outcome.is_deficit())
            out << "deficit (best achievable " << outcome.deficit().best_achievable << ")";
        else
            out << point_text(outcome.chosen().point) << " delta=" << outcome.chosen().residual_delta
                << " space=" << to_string(outcome.chosen().space);
        out << "\n";
    }
    return out.str();
}

DeltaReport make_delta_report(const AgentProfile& human, const AgentProfile& autonomous,
                              const TeamSpec& spec, const std::vector<Action>& actions,
                              SelectionPolicy policy, const PerformanceFile* performances) {
    const AgentProfile h = stamina_scaled(human);
    const AgentProfile a = stamina_scaled(autonomous);

    DeltaReport report;
    for (const Action& action : actions) {
        ActionReport entry;
        entry.action_id = action.action_id;

        DeltaVector dv;
        dv.action_id = action.action_id;
        for (const auto& [id, requirement] : action.requirements) {
            CapabilityRow row;
            row.capability = id;
            row.requirement = requirement;
            row.kind = spec.kind_for(id);
            row.human_capacity = h.capacity(id);
            row.auto_capacity = a.capacity(id);
            row.human_performance =
                performances ? performances->human.value_or_zero(id) : row.human_capacity;
            row.auto_performance =
                performances ? performances->autonomous.value_or_zero(id) : row.auto_capacity;
            row.team_capability =
                team_capability(row.human_performance, row.auto_performance, row.kind, spec.scale);
            row.delta = capability_delta(requirement, row.team_capability, spec.scale);
            row.solve = solve_distribution(requirement, row.kind, row.auto_capacity,
                                           row.human_capacity, policy, spec.scale);
            if (!row.solve.is_deficit())
                row.space = row.solve.chosen().space;
            else
                entry.any_deficit = true;
            dv.deltas.push_back({id, row.delta});
            entry.rows.push_back(std::move(row));
        }
        entry.fulfillment = classify_fulfillment(dv);
        report.actions.push_back(std::move(entry));
    }
    return report;
}

DeltaReport make_compensation_report(const AgentProfile& human, const AgentProfile& autonomous,
                                     const TeamSpec& spec, const std::vector<Action>& actions,
                                     const std::vector<ConjugatedPair>& pairs,
                                     SelectionPolicy policy) {
    DeltaReport report = make_delta_report(human, autonomous, spec, actions, policy);
    for (std::size_t i = 0; i < actions.size(); ++i) {
        CompensationPlan plan = compensate(actions[i], human, autonomous, spec, pairs, policy);
        report.actions[i].roles = infer_roles(plan);
        report.actions[i].compensation = std::move(plan);
    }
    return report;
}

json report_to_json(const DeltaReport& report) {
    json actions = json::array();
    for (const ActionReport& action : report.actions) {
        json rows = json::array();
        for (const CapabilityRow& row : action.rows) {
            json r{{"capability", render(row.capability)},
                   {"requirement", row.requirement},
                   {"kind", to_string(row.kind)},
                   {"human_capacity", row.human_capacity},
                   {"auto_capacity", row.auto_capacity},
                   {"human_performance", row.human_performance},
                   {"auto_performance", row.auto_performance},
                   {"team_capability", row.team_capability},
                   {"delta", row.delta},
                   {"solve", solve_to_json(row.solve)}};
            r["space"] = row.space ? json(to_string(*row.space)) : json(nullptr);
            rows.push_back(std::move(r));
        }
        json entry{{"action_id", action.action_id},
                   {"fulfillment", to_string(action.fulfillment)},
                   {"any_deficit", action.any_deficit},
                   {"rows", rows}};
        entry["compensation"] =
            action.compensation ? plan_to_json(*action.compensation) : json(nullptr);
        entry["roles"] = action.roles
                             ? json{{"leader", to_string(action.roles->leader)},
                                    {"supporter", to_string(action.roles->supporter)}}
                             : json(nullptr);
        actions.push_back(std::move(entry));
    }
    return json{{"format_version", 1}, {"kind", "delta_report"}, {"actions", actions}};
}

DeltaReport report_from_json(const json& j) {
    try {
        if (j.at("format_version").get<int>() != 1)
            bad_report("unsupported format_version");
        if (j.at("kind").get<std::string>() != "delta_report")
            bad_report("expected kind 'delta_report'");
        DeltaReport report;
        for (const json& entry : j.at("actions")) {
            ActionReport action;
            action.action_id = entry.at("action_id").get<std::string>();
            action.fulfillment = fulfillment_from_string(entry.at("fulfillment").get<std::string>());
            action.any_deficit = entry.at("any_deficit").get<bool>();
            for (const json& r : entry.at("rows")) {
                CapabilityRow row;
                row.capability = parse_capability_id(r.at("capability").get<std::string>());
                row.requirement = r.at("requirement").get<int>();
                row.kind = parse_kind_name(r.at("kind").get<std::string>());
                row.human_capacity = r.at("human_capacity").get<int>();
                row.auto_capacity = r.at("auto_capacity").get<int>();
                row.human_performance = r.at("human_performance").get<int>();
                row.auto_performance = r.at("auto_performance").get<int>();
                row.team_capability = r.at("team_capability").get<int>();
                row.delta = r.at("delta").get<int>();
                row.solve = solve_from_json(r.at("solve"));
                if (!r.at("space").is_null())
                    row.space = space_from_string(r.at("space").get<std::string>());
                action.rows.push_back(std::move(row));
            }
            if (!entry.at("compensation").is_null())
                action.compensation = plan_from_json(entry.at("compensation"));
            if (!entry.at("roles").is_null()) {
                Roles roles;
                roles.leader = agent_kind_from_string(entry.at("roles").at("leader").get<std::string>());
                roles.supporter =
                    agent_kind_from_string(entry.at("roles").at("supporter").get<std::string>());
                action.roles = roles;
            }
            report.actions.push_back(std::move(action));
        }
        return report;
    } catch (const json::exception& err) {
        bad_report(err.what());
    } catch (const std::invalid_argument& err) {
        bad_report(err.what());
    }
}

std::string report_to_text(const DeltaReport& report) {
    std::ostringstream out;
    for (const ActionReport& action : report.actions) {
        out << "action " << action.action_id << ": " << to_string(action.fulfillment);
        if (action.any_deficit)
            out << " [control deficit]";
        out << "\n";
        for (const CapabilityRow& row : action.rows) {
            out << "  " << render(row.capability) << " " << to_string(row.kind) << " r="
                << row.requirement << " capH=" << row.human_capacity
                << " capA=" << row.auto_capacity << " perfH=" << row.human_performance
                << " perfA=" << row.auto_performance << " team=" << row.team_capability
                << " delta=" << row.delta << " ";
            if (row.solve.is_deficit())
                out << "deficit (best achievable " << row.solve.deficit().best_achievable << ")";
            else
                out << "chosen " << point_text(row.solve.chosen().point)
                    << " space=" << to_string(*row.space);
            out << "\n";
        }
        if (action.compensation)
            out << plan_to_text(*action.compensation);
    }
    return out.str();
}

json consensus_to_json(const ConsensusState& state) {
    json log = json::array();
    for (const Proposal& p : state.log) {
        json distributions = json::object();
        for (const auto& [id, point] : p.distributions)
            distributions[render(id)] = point_to_json(point);
        log.push_back(
            {{"round", p.round}, {"proposer", p.proposer}, {"distributions", distributions}});
    }
    json agreed;
    if (state.agreed) {
        agreed = json::object();
        for (const auto& [id, point] : *state.agreed)
            agreed[render(id)] = point_to_json(point);
    } else {
        agreed = nullptr;
    }
    return json{{"status", to_string(state.status)},
                {"rounds_used", state.rounds_used},
                {"agreed", agreed},
                {"log", log}};
}

json sequence_report_to_json(const SequenceReport& report) {
    json records = json::array();
    for (const SequenceRecord& r : report.records) {
        json deltas = json::array();
        for (const Delta& d : r.deltas.deltas)
            deltas.push_back({{"capability", render(d.capability)}, {"value", d.value}});
        json agreed = json::object();
        for (const auto& [id, point] : r.agreed)
            agreed[render(id)] = point_to_json(point);
        json record{{"index", r.index},
                    {"outcome", to_string(r.outcome)},
                    {"stamina", r.stamina}};
        if (r.outcome != StepOutcome::Break) {
            record["action_id"] = r.action_id;
            record["deltas"] = deltas;
            record["fulfillment"] = to_string(r.fulfillment);
            record["arbitration"] = to_string(r.arbitration);
            record["rounds_used"] = r.rounds_used;
            record["agreed"] = agreed;
            record["any_deficit"] = r.any_deficit;
            record["compensation"] = r.compensation ? plan_to_json(*r.compensation) : json(nullptr);
        }
        records.push_back(std::move(record));
    }
    return json{{"format_version", 1}, {"kind", "sequence_report"}, {"records", records}};
}

std::string sequence_report_to_text(const SequenceReport& report) {
    std::ostringstream out;
    for (const SequenceRecord& r : report.records) {
        out << "step " << r.index << ": ";
        if (r.outcome == StepOutcome::Break) {
            out << "break (stamina " << r.stamina << ")\n";
            continue;
        }
        out << "action " << r.action_id << " -> " << to_string(r.outcome) << " (stamina "
            << r.stamina << ", " << to_string(r.arbitration) << " after " << r.rounds_used
            << " round" << (r.rounds_used == 1 ? "" : "s") << ")\n";
        for (const Delta& d : r.deltas.deltas)
            out << "  " << render(d.capability) << " delta=" << d.value << "\n";
        for (const auto& [id, point] : r.agreed)
            out << "  agreed " << render(id) << ": " << point_text(point) << "\n";
        if (r.compensation)
            out << plan_to_text(*r.compensation);
    }
    return out.str();
}

} // namespace capdelta
