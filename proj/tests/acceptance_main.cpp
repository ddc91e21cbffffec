// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// hold. Criteria are exhaustive small-domain laws, oracle equivalences,
// scenario fixtures, seeded property suites, and the CLI contract.

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "capdelta/arbitration.hpp"
#include "capdelta/compensation.hpp"
#include "capdelta/cr_solver.hpp"
#include "capdelta/diagram.hpp"
#include "capdelta/formats.hpp"
#include "capdelta/report.hpp"
#include "capdelta/taxonomy.hpp"

using namespace capdelta;

namespace {

const QuantScale kScale{5};
int g_failed = 0;
std::string g_bin, g_fixtures, g_golden, g_bad;

void verdict(const char* name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!ok && !detail.empty())
        std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok)
        ++g_failed;
}

CapabilityId id(const char* text) { return parse_capability_id(text); }

int run_cmd(const std::string& cmd, std::string& output) {
    output.clear();
    std::string full = cmd + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe)
        return -1;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        output.append(buf, n);
    int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// ---- criterion 1: scalar delta range law ------------------------------

void criterion_1() {
    bool ok = true;
    for (int r = 0; r <= 5 && ok; ++r)
        for (int c = 0; c <= 5 && ok; ++c) {
            int d = capability_delta(r, c, kScale);
            ok = d == r - c && d >= -5 && d <= 5;
        }
    verdict("C1 delta range law: delta = r - c^T within [-5, 5], 36 cases", ok);
}

// ---- criterion 2: summative aggregation law ---------------------------

void criterion_2() {
    bool ok = true;
    for (int a = 0; a <= 5 && ok; ++a)
        for (int h = 0; h <= 5 && ok; ++h)
            ok = team_capability(h, a, AggregationKind::Summative, kScale) == std::min(a + h, 5);
    verdict("C2 summative team capability equals min(a+h, 5), 36 cases", ok);
}

// ---- criterion 3: capability space nesting ----------------------------

void criterion_3() {
    bool ok = true;
    int cases = 0;
    for (int a = 0; a <= 5; ++a)
        for (int h = 0; h <= 5; ++h)
            for (int r = 0; r <= 5; ++r) {
                ++cases;
                SpaceLabel label = classify_point({a, h}, r);
                bool collaborative = std::max(a, h) >= r;
                bool summative_feasible = a + h >= r;
                if (label == SpaceLabel::Collaborative &&
                    !(collaborative && summative_feasible))
                    ok = false;
                if (label == SpaceLabel::SummativeOnly && (collaborative || !summative_feasible))
                    ok = false;
                if (label == SpaceLabel::Insufficient && summative_feasible)
                    ok = false;
            }
    verdict("C3 space nesting and disjointness over 216 (a,h,r) cases",
            ok && cases == 216);
}

// ---- criterion 4: solver vs brute-force oracle -------------------------

int oracle_f(AggregationKind kind, int a, int h) {
    return kind == AggregationKind::Summative ? std::min(a + h, 5) : std::max(a, h);
}

bool oracle_precedes(SelectionPolicy policy, int fx, ControlDistribution x, int fy,
                     ControlDistribution y, int r) {
    if (fx - r != fy - r)
        return fx - r < fy - r;
    if (policy == SelectionPolicy::MinSupport) {
        if (x.auto_perf != y.auto_perf)
            return x.auto_perf < y.auto_perf;
        return x.human_perf > y.human_perf;
    }
    if (x.human_perf != y.human_perf)
        return x.human_perf > y.human_perf;
    return x.auto_perf < y.auto_perf;
}

void criterion_4() {
    bool ok = true;
    int cases = 0;
    std::string detail;
    for (int r = 0; r <= 5; ++r)
        for (int ca = 0; ca <= 5; ++ca)
            for (int ch = 0; ch <= 5; ++ch)
                for (AggregationKind kind :
                     {AggregationKind::Summative, AggregationKind::NonSummative})
                    for (SelectionPolicy policy :
                         {SelectionPolicy::MaxHuman, SelectionPolicy::MinSupport,
                          SelectionPolicy::MinDelta}) {
                        ++cases;
                        bool found = false;
                        ControlDistribution best{};
                        int best_f = 0;
                        int reachable = INT_MIN;
                        for (int a = 0; a <= ca; ++a)
                            for (int h = 0; h <= ch; ++h) {
                                int f = oracle_f(kind, a, h);
                                reachable = std::max(reachable, f);
                                if (f < r)
                                    continue;
                                if (!found ||
                                    oracle_precedes(policy, f, {a, h}, best_f, best, r)) {
                                    best = {a, h};
                                    best_f = f;
                                    found = true;
                                }
                            }
                        SolveOutcome got = solve_distribution(r, kind, ca, ch, policy, kScale);
                        if (got.is_deficit() != !found ||
                            (found && (got.chosen().point != best ||
                                       got.chosen().residual_delta != r - best_f)) ||
                            (!found && got.deficit().best_achievable != reachable)) {
                            ok = false;
                            detail = "mismatch at r=" + std::to_string(r) +
                                     " ca=" + std::to_string(ca) + " ch=" + std::to_string(ch);
                        }
                    }
    verdict("C4 solver agrees with brute-force oracle on all 1296 combinations",
            ok && cases == 1296, detail);
}

// ---- criterion 5: CR diagram reproduction ------------------------------

void criterion_5() {
    bool ok = true;
    std::string detail;
    for (AggregationKind kind : {AggregationKind::Summative, AggregationKind::NonSummative}) {
        auto line = requirement_line(4, kind, 5, 5);
        if (line.empty()) {
            ok = false;
            detail = "empty requirement line";
        }
        for (const ControlDistribution& p : line)
            if (point_delta(p, 4, kind, kScale) != 0) {
                ok = false;
                detail = "nonzero delta on the line";
            }
    }
    try {
        std::string rendered = render_cr_diagram(4, AggregationKind::Summative, 5, 5,
                                                 ControlDistribution{2, 2}, DiagramFormat::Ascii);
        std::string golden = read_file(g_golden + "/cr_r4_summative.txt");
        if (rendered != golden) {
            ok = false;
            detail = "ascii snapshot differs from golden file";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    verdict("C5 r=4 diagram: non-empty zero-delta line (both kinds), golden snapshot", ok,
            detail);
}

// ---- criterion 6: scenario fixtures -------------------------------------

struct Fixtures {
    AgentProfile participant, ur5e, none;
    TeamConfig team;
    TeamSpec spec;
    TaskFile human_only_haul, teamed_haul, teamed_screw;
};

Fixtures load_fixtures() {
    Fixtures f;
    auto profile = [&](const char* name) {
        std::string path = g_fixtures + "/profiles/" + name + ".profile";
        return parse_profile(read_file(path), path).profile;
    };
    f.participant = profile("participant");
    f.ur5e = profile("ur5e");
    f.none = profile("none");
    std::string team_path = g_fixtures + "/team/default.team";
    f.team = parse_team_config(read_file(team_path), team_path);
    f.spec = TeamSpec::from_taxonomy(builtin_imba_subset(), f.team.scale, f.team.overrides);
    auto task = [&](const char* name) {
        std::string path = g_fixtures + "/tasks/" + name + ".task";
        return parse_task(read_file(path), path);
    };
    f.human_only_haul = task("human_only_haul");
    f.teamed_haul = task("teamed_haul");
    f.teamed_screw = task("teamed_screw");
    return f;
}

void criterion_6() {
    bool ok = true;
    std::string detail;
    try {
        Fixtures f = load_fixtures();

        // (a) unassisted haul triggers the pattern with a 3.02 -> 3.03 transfer
        CompensationPlan plan =
            compensate(f.human_only_haul.actions.at(0), f.participant, f.none, f.spec,
                       f.team.pairs, SelectionPolicy::MaxHuman);
        bool transfer_found = false;
        for (const Transfer& t : plan.transfers)
            transfer_found = transfer_found || (t.pair.degraded == id("3.02") &&
                                                t.pair.compensator == id("3.03") &&
                                                t.shortfall_moved > 0);
        if (!transfer_found || plan.status != CompensationStatus::PartiallyCompensated) {
            ok = false;
            detail = "human-only haul: expected a partial 3.02->3.03 compensation";
        }

        // (b) teamed haul: all deltas <= 0 and the human reaches at full capacity
        const Action& haul = f.teamed_haul.actions.at(0);
        PerformanceAssignment h_caps, a_caps;
        for (const auto& [cap, req] : haul.requirements) {
            (void)req;
            h_caps.values[cap] = stamina_scaled(f.participant).capacity(cap);
            a_caps.values[cap] = stamina_scaled(f.ur5e).capacity(cap);
        }
        DeltaVector dv = delta_vector(haul, h_caps, a_caps, f.spec);
        for (const Delta& d : dv.deltas)
            if (d.value > 0) {
                ok = false;
                detail = "teamed haul: positive delta on " + render(d.capability);
            }
        SolveOutcome reach = solve_distribution(haul.requirements.at(id("3.03")),
                                                f.spec.kind_for(id("3.03")),
                                                f.ur5e.capacity(id("3.03")),
                                                f.participant.capacity(id("3.03")),
                                                SelectionPolicy::MaxHuman, kScale);
        if (reach.is_deficit() || reach.chosen().point.human_perf != 3) {
            ok = false;
            detail = "teamed haul: MaxHuman should assign human 3.03 performance 3";
        }

        // (c) teamed screw: the autonomous agent carries the full 3.04 demand
        const Action& screw = f.teamed_screw.actions.at(0);
        int requirement = screw.requirements.at(id("3.04"));
        SolveOutcome pinch = solve_distribution(requirement, f.spec.kind_for(id("3.04")),
                                                f.ur5e.capacity(id("3.04")),
                                                f.participant.capacity(id("3.04")),
                                                SelectionPolicy::MaxHuman, kScale);
        if (pinch.is_deficit() || pinch.chosen().point.auto_perf != requirement ||
            pinch.chosen().point.human_perf != 0) {
            ok = false;
            detail = "teamed screw: autonomous agent should carry the full 3.04 requirement";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    verdict("C6 scenario fixtures: compensation pattern, teamed haul, teamed screw", ok, detail);
}

// ---- criterion 7: compensation laws over randomized instances -----------

void criterion_7() {
    bool ok = true;
    std::string detail;
    TeamSpec spec = TeamSpec::from_taxonomy(builtin_imba_subset(), kScale);
    const std::vector<CapabilityId> pool = {id("1.05"), id("3.01"), id("3.02"), id("3.03"),
                                            id("3.04"), id("5.01"), id("9.05")};
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> level(0, 5);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int cases = 0;

    for (int iteration = 0; iteration < 1000 && ok; ++iteration) {
        ++cases;
        bool unit_rates = iteration % 2 == 0;
        std::vector<CapabilityId> chosen = pool;
        std::shuffle(chosen.begin(), chosen.end(), rng);
        chosen.resize(1 + static_cast<std::size_t>(coin(rng) * 3.99));

        Action action;
        action.action_id = "case";
        AgentProfile human, robot;
        human.agent_id = "h";
        robot.agent_id = "a";
        robot.kind = AgentKind::Autonomous;
        for (const CapabilityId& cap : chosen) {
            action.requirements[cap] = level(rng);
            human.capacities[cap] = level(rng);
            if (coin(rng) < 0.7)
                robot.capacities[cap] = level(rng);
        }
        std::vector<ConjugatedPair> pairs;
        for (const CapabilityId& from : chosen)
            for (const CapabilityId& to : chosen) {
                if (from == to || coin(rng) > 0.4)
                    continue;
                double rates[] = {0.5, 1.0, 2.0};
                pairs.push_back(
                    {from, to, unit_rates ? 1.0 : rates[static_cast<int>(coin(rng) * 2.99)]});
            }

        CompensationPlan plan =
            compensate(action, human, robot, spec, pairs, SelectionPolicy::MaxHuman);

        std::map<CapabilityId, int> team_cap;
        bool any_shortfall = false;
        for (const auto& [cap, req] : action.requirements) {
            team_cap[cap] = team_capability(human.capacity(cap), robot.capacity(cap),
                                            spec.kind_for(cap), kScale);
            any_shortfall = any_shortfall || req > team_cap[cap];
        }

        // no-op law
        if ((plan.status == CompensationStatus::NoOpAllFulfilled) != !any_shortfall ||
            (plan.status == CompensationStatus::NoOpAllFulfilled && !plan.adjustments.empty())) {
            ok = false;
            detail = "no-op law violated";
        }
        // bound law
        for (const VirtualRequirement& vr : plan.adjustments)
            if (vr.adjusted < 0 || vr.adjusted > std::min(kScale.q_max, team_cap.at(vr.capability))) {
                ok = false;
                detail = "adjustment bound violated on " + render(vr.capability);
            }
        // rate-1 conservation law
        if (unit_rates)
            for (const VirtualRequirement& vr : plan.adjustments) {
                if (vr.adjusted >= vr.original)
                    continue;
                int moved = 0;
                for (const Transfer& t : plan.transfers)
                    if (t.pair.degraded == vr.capability) {
                        moved += t.shortfall_moved;
                        if (t.requirement_raise != t.shortfall_moved) {
                            ok = false;
                            detail = "rate-1 raise differs from moved shortfall";
                        }
                    }
                int residual = 0;
                for (const ResidualShortfall& r : plan.residuals)
                    if (r.capability == vr.capability)
                        residual = r.remaining;
                if (vr.original - vr.adjusted != moved + residual) {
                    ok = false;
                    detail = "mass conservation violated on " + render(vr.capability);
                }
            }
        // idempotence
        CompensationPlan second = compensate(apply_plan(action, plan), human, robot, spec, pairs,
                                             SelectionPolicy::MaxHuman);
        if (second.status != CompensationStatus::NoOpAllFulfilled || !second.adjustments.empty()) {
            ok = false;
            detail = "idempotence violated";
        }
        // compensated plans re-solve with no positive delta
        if (plan.status == CompensationStatus::Compensated)
            for (const auto& [cap, outcome] : plan.distributions) {
                (void)cap;
                if (outcome.is_deficit() || outcome.chosen().residual_delta > 0) {
                    ok = false;
                    detail = "compensated plan still under-fulfilled";
                }
            }
    }
    verdict("C7 compensation laws over 1000 randomized instances (seeded)", ok && cases == 1000,
            detail);
}

// ---- criterion 8: arbitration laws ---------------------------------------

void criterion_8() {
    bool ok = true;
    std::string detail;
    TeamSpec spec = TeamSpec::from_taxonomy(builtin_imba_subset(), kScale);
    const CapabilityId arm = id("3.03");

    SimulationConfig noiseless;
    noiseless.seed = 5;
    noiseless.max_rounds = kScale.q_max + 1;

    for (int r = 0; r <= 5 && ok; ++r)
        for (int ca = 0; ca <= 5 && ok; ++ca)
            for (int ch = 0; ch <= 5 && ok; ++ch)
                for (AggregationKind kind :
                     {AggregationKind::Summative, AggregationKind::NonSummative})
                    for (SelectionPolicy policy :
                         {SelectionPolicy::MaxHuman, SelectionPolicy::MinSupport,
                          SelectionPolicy::MinDelta}) {
                        TeamSpec local = spec;
                        local.kinds[arm] = kind;
                        AgentProfile human;
                        human.agent_id = "h";
                        human.capacities[arm] = ch;
                        AgentProfile robot;
                        robot.agent_id = "a";
                        robot.kind = AgentKind::Autonomous;
                        robot.capacities[arm] = ca;
                        Action action;
                        action.action_id = "probe";
                        action.requirements[arm] = r;

                        SolveOutcome solved = solve_distribution(r, kind, ca, ch, policy, kScale);

                        // exact mutual beliefs: consensus in round one, equal to solver
                        ConsensusState exact = arbitrate_with_beliefs(
                            human, robot, action, local, noiseless, policy,
                            exact_belief(robot, action), exact_belief(human, action));
                        if (exact.status != ConsensusStatus::Consensus ||
                            exact.rounds_used != 1) {
                            ok = false;
                            detail = "exact beliefs did not agree in round 1";
                        } else if (!solved.is_deficit() &&
                                   exact.agreed->at(arm) != solved.chosen().point) {
                            ok = false;
                            detail = "exact-belief consensus differs from solver";
                        }

                        // zero beliefs, no noise: consensus within q_max+1 rounds
                        ConsensusState zero =
                            arbitrate(human, robot, action, local, noiseless, policy);
                        if (zero.status != ConsensusStatus::Consensus) {
                            ok = false;
                            detail = "zero beliefs failed to converge at r=" + std::to_string(r) +
                                     " ca=" + std::to_string(ca) + " ch=" + std::to_string(ch);
                        } else if (!solved.is_deficit() &&
                                   zero.agreed->at(arm) != solved.chosen().point) {
                            ok = false;
                            detail = "zero-belief consensus differs from solver";
                        }
                    }

    // seed determinism under noise: double-run byte comparison
    SimulationConfig noisy;
    noisy.seed = 31337;
    noisy.max_rounds = 8;
    noisy.perception_noise = 0.4;
    AgentProfile human;
    human.agent_id = "h";
    human.capacities[arm] = 3;
    AgentProfile robot;
    robot.agent_id = "a";
    robot.kind = AgentKind::Autonomous;
    robot.capacities[arm] = 5;
    Action action;
    action.action_id = "probe";
    action.requirements[arm] = 4;
    ConsensusState first = arbitrate(human, robot, action, spec, noisy, SelectionPolicy::MaxHuman);
    ConsensusState second = arbitrate(human, robot, action, spec, noisy, SelectionPolicy::MaxHuman);
    if (consensus_to_json(first).dump() != consensus_to_json(second).dump()) {
        ok = false;
        detail = "seeded runs differ";
    }
    verdict("C8 arbitration: round-1 exact consensus, zero-belief convergence, determinism", ok,
            detail);
}

// ---- criterion 9: stamina monotonicity -----------------------------------

void criterion_9() {
    bool ok = true;
    std::string detail;
    TeamSpec spec = TeamSpec::from_taxonomy(builtin_imba_subset(), kScale);
    const CapabilityId arm = id("3.03");
    std::mt19937 rng(1701);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> coin(0, 3);

    for (int trial = 0; trial < 120 && ok; ++trial) {
        AgentProfile human;
        human.agent_id = "h";
        human.capacities[arm] = 3;
        human.capacities[id("3.02")] = 2;
        AgentProfile robot;
        robot.agent_id = "a";
        robot.kind = AgentKind::Autonomous;
        robot.capacities[arm] = 5;

        Action action;
        action.action_id = "haul";
        action.requirements[arm] = 3;
        action.requirements[id("3.02")] = 1;

        SimulationConfig config;
        config.seed = trial;
        config.max_rounds = 6;
        config.stamina_drain_per_action = unit(rng) * 0.4;
        config.stamina_recovery_per_break = trial % 2 == 0 ? 1.0 : unit(rng);

        std::vector<SequenceStep> steps;
        int n_steps = 4 + coin(rng) * 3;
        for (int i = 0; i < n_steps; ++i)
            steps.push_back({coin(rng) == 0 && i > 0, action});

        SequenceReport report = run_sequence(human, robot, steps, spec, {}, config,
                                             SelectionPolicy::MaxHuman);
        double prev = 1.0;
        bool after_break = false;
        for (const SequenceRecord& record : report.records) {
            if (record.stamina < 0.0 || record.stamina > 1.0) {
                ok = false;
                detail = "stamina left [0,1]";
            }
            if (record.outcome == StepOutcome::Break) {
                if (config.stamina_recovery_per_break == 1.0 && record.stamina != 1.0) {
                    ok = false;
                    detail = "full-recovery break did not restore stamina";
                }
                after_break = true;
            } else {
                // within a break-free segment effective capacities cannot grow
                if (!after_break) {
                    int prev_eff = static_cast<int>(std::floor(3 * prev + 1e-9));
                    int eff = static_cast<int>(std::floor(3 * record.stamina + 1e-9));
                    if (eff > prev_eff) {
                        ok = false;
                        detail = "effective capacity grew without a break";
                    }
                }
                after_break = false;
            }
            prev = record.stamina;
        }
        // a full-recovery break restores effective capacities to the raw capacities
        if (config.stamina_recovery_per_break == 1.0)
            for (std::size_t i = 0; i + 1 < report.records.size(); ++i)
                if (report.records[i].outcome == StepOutcome::Break) {
                    double s = report.records[i].stamina;
                    if (static_cast<int>(std::floor(3 * s + 1e-9)) != 3) {
                        ok = false;
                        detail = "post-break capacity not restored";
                    }
                }
    }
    verdict("C9 stamina: bounded, non-increasing between breaks, restored by full recovery", ok,
            detail);
}

// ---- criterion 10: format round trips and CLI exit codes ------------------

void criterion_10() {
    bool ok = true;
    std::string detail;
    try {
        for (const char* name : {"participant", "ur5e", "none"}) {
            std::string path = g_fixtures + "/profiles/" + name + ".profile";
            ProfileFile parsed = parse_profile(read_file(path), path);
            if (!(parse_profile(serialize_profile(parsed), "rt") == parsed)) {
                ok = false;
                detail = std::string("profile round trip failed: ") + name;
            }
        }
        std::string team_path = g_fixtures + "/team/default.team";
        TeamConfig team = parse_team_config(read_file(team_path), team_path);
        if (!(parse_team_config(serialize_team_config(team), "rt") == team)) {
            ok = false;
            detail = "team config round trip failed";
        }
        for (const char* name : {"human_only_haul", "teamed_haul", "teamed_screw"}) {
            std::string path = g_fixtures + "/tasks/" + name + ".task";
            TaskFile parsed = parse_task(read_file(path), path);
            if (!(parse_task(serialize_task(parsed), "rt") == parsed)) {
                ok = false;
                detail = std::string("task round trip failed: ") + name;
            }
        }
        // machine report round trip
        Fixtures f = load_fixtures();
        DeltaReport report =
            make_compensation_report(f.participant, f.none, f.spec,
                                     f.human_only_haul.actions, f.team.pairs,
                                     SelectionPolicy::MaxHuman);
        DeltaReport parsed = report_from_json(nlohmann::json::parse(report_to_json(report).dump()));
        if (!(parsed == report)) {
            ok = false;
            detail = "machine report round trip failed";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }

    std::string out;
    int code = run_cmd(g_bin + " validate " + g_fixtures + "/profiles/participant.profile " +
                           g_fixtures + "/profiles/ur5e.profile --team " + g_fixtures +
                           "/team/default.team",
                       out);
    if (code != 0) {
        ok = false;
        detail = "expected exit 0, got " + std::to_string(code);
    }
    code = run_cmd(g_bin + " validate " + g_bad + "/bad_capacity.profile --team " + g_fixtures +
                       "/team/default.team",
                   out);
    if (code != 1) {
        ok = false;
        detail = "expected exit 1, got " + std::to_string(code);
    }
    code = run_cmd(g_bin + " validate " + g_fixtures + "/profiles/participant.profile --team " +
                       g_bad + "/truncated.team",
                   out);
    if (code != 2) {
        ok = false;
        detail = "expected exit 2, got " + std::to_string(code);
    }
    code = run_cmd(g_bin + " compensate --human " + g_fixtures + "/profiles/participant.profile" +
                       " --autonomous " + g_fixtures + "/profiles/none.profile --team " +
                       g_fixtures + "/team/default.team --task " + g_fixtures +
                       "/tasks/human_only_haul.task",
                   out);
    if (code != 3) {
        ok = false;
        detail = "expected exit 3, got " + std::to_string(code);
    }
    verdict("C10 format round trips on the fixture corpus, exit codes 0/1/2/3", ok, detail);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 5) {
        std::cerr << "usage: acceptance <capdelta-binary> <fixtures-dir> <golden-dir> "
                     "<bad-data-dir>\n";
        return 2;
    }
    g_bin = argv[1];
    g_fixtures = argv[2];
    g_golden = argv[3];
    g_bad = argv[4];

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();

    if (g_failed == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cerr << g_failed << " acceptance criteria failed\n";
    return 1;
}
