// capdelta command line: validate inputs, compute delta reports, solve
// control distributions on the CR diagram, run the compensation pattern,
// simulate arbitration over task sequences, and render diagrams.
//
// Exit codes: 0 success, 1 validation violation, 2 parse/IO failure,
// 3 teaming failure (deficit, uncompensatable, dissonance).

#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "capdelta/diagram.hpp"
#include "capdelta/formats.hpp"
#include "capdelta/report.hpp"
#include "capdelta/taxonomy.hpp"

namespace {

using namespace capdelta;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitTeaming = 3;

struct ParsedFile {
    std::string path;
    std::string text;
    Document doc;
};

ParsedFile slurp(const std::string& path) {
    ParsedFile f;
    f.path = path;
    f.text = read_file(path);
    f.doc = parse_document(f.text, path);
    return f;
}

std::string locate(const ParsedFile& file, const std::string& section, const std::string& key) {
    int line = find_entry_line(file.doc, section, key);
    if (line > 0)
        return file.path + ":" + std::to_string(line);
    return file.path;
}

// Formats core-model violations with file/line context.
void report_profile_violations(const ParsedFile& file, const ValidationReport& report,
                               std::vector<std::string>& out) {
    for (const Violation& v : report.violations) {
        std::string where = locate(file, "capacities", v.subject);
        if (where == file.path && v.subject == "mental_stamina")
            where = locate(file, "resources", v.subject);
        out.push_back(where + ": " + v.subject + ": " + v.message);
    }
}

struct Inputs {
    Taxonomy taxonomy;
    TeamConfig team;
    TeamSpec spec;
    ProfileFile human;
    ProfileFile autonomous;
    TaskFile task;
    std::vector<std::string> violations;
};

void validate_profile_inputs(Inputs& in, const ParsedFile& raw, const ProfileFile& file) {
    report_profile_violations(raw, validate_profile(file.profile, in.taxonomy, in.team.scale),
                              in.violations);
    if (!(file.scale == in.team.scale))
        in.violations.push_back(raw.path + ": scale.q_max = " + std::to_string(file.scale.q_max) +
                                " does not match team scale q_max = " +
                                std::to_string(in.team.scale.q_max));
}

void validate_team_inputs(Inputs& in, const ParsedFile& raw) {
    for (const auto& [id, kind] : in.team.overrides) {
        (void)kind;
        if (!in.taxonomy.contains(id))
            in.violations.push_back(locate(raw, "aggregation", render(id)) + ": " + render(id) +
                                    ": unknown capability");
    }
    for (const ConjugatedPair& pair : in.team.pairs) {
        for (const CapabilityId& id : {pair.degraded, pair.compensator}) {
            if (!in.taxonomy.contains(id))
                in.violations.push_back(raw.path + ": pair " + render(pair.degraded) + " -> " +
                                        render(pair.compensator) + ": unknown capability " +
                                        render(id));
        }
    }
}

void validate_task_inputs(Inputs& in, const ParsedFile& raw) {
    for (const Action& action : in.task.actions) {
        for (const auto& [id, requirement] : action.requirements) {
            if (!in.taxonomy.contains(id))
                in.violations.push_back(locate(raw, "action " + action.action_id, render(id)) +
                                        ": " + render(id) + ": unknown capability");
            if (!in.team.scale.contains(requirement))
                in.violations.push_back(locate(raw, "action " + action.action_id, render(id)) +
                                        ": " + render(id) + ": requirement out of range: " +
                                        std::to_string(requirement));
        }
    }
}

// Loads and cross-validates team + profiles (+ optional task). Throws
// ParseError on syntax problems; collects semantic violations.
Inputs load_inputs(const std::string& team_path, const std::string& human_path,
                   const std::string& auto_path, const std::string& task_path) {
    Inputs in;
    in.taxonomy = builtin_imba_subset();

    ParsedFile team_raw = slurp(team_path);
    in.team = parse_team_config(team_raw.text, team_path);
    validate_team_inputs(in, team_raw);

    ParsedFile human_raw = slurp(human_path);
    in.human = parse_profile(human_raw.text, human_path);
    validate_profile_inputs(in, human_raw, in.human);

    ParsedFile auto_raw = slurp(auto_path);
    in.autonomous = parse_profile(auto_raw.text, auto_path);
    validate_profile_inputs(in, auto_raw, in.autonomous);

    if (!task_path.empty()) {
        ParsedFile task_raw = slurp(task_path);
        in.task = parse_task(task_raw.text, task_path);
        validate_task_inputs(in, task_raw);
    }

    if (in.violations.empty()) {
        std::map<CapabilityId, AggregationKind> overrides = in.team.overrides;
        in.spec = TeamSpec::from_taxonomy(in.taxonomy, in.team.scale, overrides);
    }
    return in;
}

int print_violations(const std::vector<std::string>& violations) {
    for (const std::string& v : violations)
        std::cerr << "violation: " << v << "\n";
    return kExitViolation;
}

AggregationKind kind_from_flag(const std::string& value) {
    return parse_kind_name(value); // throws std::invalid_argument on bad names
}

struct GlobalArgs {
    std::string team_path;
    std::string policy_name = "max-human";
    std::string format = "text";
};

SelectionPolicy resolve_policy(const GlobalArgs& args, const TeamConfig* team, bool flag_given) {
    if (!flag_given && team)
        return team->default_policy;
    return parse_policy_name(args.policy_name);
}

int cmd_validate(const GlobalArgs& global, const std::vector<std::string>& profiles,
                 const std::string& task_path) {
    Inputs in;
    in.taxonomy = builtin_imba_subset();
    ParsedFile team_raw = slurp(global.team_path);
    in.team = parse_team_config(team_raw.text, global.team_path);
    validate_team_inputs(in, team_raw);
    for (const std::string& path : profiles) {
        ParsedFile raw = slurp(path);
        ProfileFile file = parse_profile(raw.text, path);
        validate_profile_inputs(in, raw, file);
    }
    if (!task_path.empty()) {
        ParsedFile task_raw = slurp(task_path);
        in.task = parse_task(task_raw.text, task_path);
        validate_task_inputs(in, task_raw);
    }
    if (!in.violations.empty())
        return print_violations(in.violations);
    std::cout << "ok: " << profiles.size() << " profile(s), team config"
              << (task_path.empty() ? "" : ", task") << " valid\n";
    return kExitOk;
}

int cmd_delta(const GlobalArgs& global, bool policy_given, const std::string& human_path,
              const std::string& auto_path, const std::string& task_path,
              const std::string& performances_path, bool parallel) {
    Inputs in = load_inputs(global.team_path, human_path, auto_path, task_path);

    std::optional<PerformanceFile> performances;
    if (!performances_path.empty()) {
        performances = parse_performances(read_file(performances_path), performances_path);
        for (const auto& [perf, profile] :
             {std::pair{&performances->human, &in.human.profile},
              std::pair{&performances->autonomous, &in.autonomous.profile}}) {
            ValidationReport report = validate_performance(*perf, *profile, in.team.scale);
            for (const Violation& v : report.violations)
                in.violations.push_back(performances_path + ": " + v.subject + ": " + v.message);
        }
    }
    if (!in.violations.empty())
        return print_violations(in.violations);

    SelectionPolicy policy = resolve_policy(global, &in.team, policy_given);
    const PerformanceFile* perf_ptr = performances ? &*performances : nullptr;

    DeltaReport report;
    if (parallel) {
        std::vector<std::future<DeltaReport>> futures;
        futures.reserve(in.task.actions.size());
        for (const Action& action : in.task.actions)
            futures.push_back(std::async(std::launch::async, [&, action] {
                return make_delta_report(in.human.profile, in.autonomous.profile, in.spec,
                                         {action}, policy, perf_ptr);
            }));
        for (auto& future : futures) {
            DeltaReport part = future.get();
            report.actions.push_back(std::move(part.actions.front()));
        }
    } else {
        report = make_delta_report(in.human.profile, in.autonomous.profile, in.spec,
                                   in.task.actions, policy, perf_ptr);
    }

    if (global.format == "machine")
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << report_to_text(report);

    bool any_deficit = false;
    for (const ActionReport& action : report.actions)
        any_deficit = any_deficit || action.any_deficit;
    return any_deficit ? kExitTeaming : kExitOk;
}

int cmd_solve(const GlobalArgs& global, int requirement, const std::string& kind_name,
              int cap_auto, int cap_human) {
    SelectionPolicy policy = parse_policy_name(global.policy_name);
    SolveOutcome outcome = solve_distribution(requirement, kind_from_flag(kind_name), cap_auto,
                                              cap_human, policy);
    if (global.format == "machine") {
        std::cout << solve_outcome_to_json(outcome).dump(2) << "\n";
    } else if (outcome.is_deficit()) {
        const ControlDeficit& d = outcome.deficit();
        std::cout << "deficit: best achievable " << d.best_achievable << " (r=" << d.requirement
                  << ", caps a=" << d.cap_auto << " h=" << d.cap_human << ")\n";
    } else {
        const ChosenDistribution& c = outcome.chosen();
        std::cout << "chosen (a=" << c.point.auto_perf << ", h=" << c.point.human_perf
                  << ") delta=" << c.residual_delta << " space=" << to_string(c.space) << "\n";
    }
    return outcome.is_deficit() ? kExitTeaming : kExitOk;
}

int cmd_compensate(const GlobalArgs& global, bool policy_given, const std::string& human_path,
                   const std::string& auto_path, const std::string& task_path) {
    Inputs in = load_inputs(global.team_path, human_path, auto_path, task_path);
    if (!in.violations.empty())
        return print_violations(in.violations);
    SelectionPolicy policy = resolve_policy(global, &in.team, policy_given);

    DeltaReport report = make_compensation_report(in.human.profile, in.autonomous.profile, in.spec,
                                                  in.task.actions, in.team.pairs, policy);
    if (global.format == "machine")
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << report_to_text(report);

    for (const ActionReport& action : report.actions) {
        if (!action.compensation)
            continue;
        CompensationStatus status = action.compensation->status;
        if (status == CompensationStatus::PartiallyCompensated ||
            status == CompensationStatus::Uncompensatable)
            return kExitTeaming;
    }
    return kExitOk;
}

int cmd_simulate(const GlobalArgs& global, bool policy_given, const std::string& scenario_path,
                 bool seed_given, std::uint64_t seed) {
    ParsedFile scenario_raw = slurp(scenario_path);
    ScenarioFile scenario = parse_scenario(scenario_raw.text, scenario_path);

    std::filesystem::path base = std::filesystem::path(scenario_path).parent_path();
    auto resolve = [&](const std::string& p) {
        std::filesystem::path path(p);
        return path.is_absolute() ? path.string() : (base / path).string();
    };

    Inputs in = load_inputs(resolve(scenario.team_path), resolve(scenario.human_path),
                            resolve(scenario.autonomous_path), resolve(scenario.task_path));

    std::vector<SequenceStep> steps;
    std::vector<std::string> names = scenario.sequence;
    if (names.empty())
        for (const Action& action : in.task.actions)
            names.push_back(action.action_id);
    for (const std::string& name : names) {
        if (name == "break") {
            steps.push_back({true, {}});
            continue;
        }
        auto it = std::find_if(in.task.actions.begin(), in.task.actions.end(),
                               [&](const Action& a) { return a.action_id == name; });
        if (it == in.task.actions.end())
            in.violations.push_back(scenario_path + ": sequence step '" + name +
                                    "' names no action in the task file");
        else
            steps.push_back({false, *it});
    }
    if (!in.violations.empty())
        return print_violations(in.violations);

    if (seed_given)
        scenario.config.seed = seed;
    SelectionPolicy policy = resolve_policy(global, &in.team, policy_given);

    SequenceReport report = run_sequence(in.human.profile, in.autonomous.profile, steps, in.spec,
                                         in.team.pairs, scenario.config, policy);
    if (global.format == "machine")
        std::cout << sequence_report_to_json(report).dump(2) << "\n";
    else
        std::cout << sequence_report_to_text(report);
    return report.all_ok() ? kExitOk : kExitTeaming;
}

int cmd_diagram(const GlobalArgs& global, int requirement, const std::string& kind_name,
                int cap_auto, int cap_human, const std::string& chosen_arg,
                const std::string& render_name) {
    AggregationKind kind = kind_from_flag(kind_name);
    std::optional<ControlDistribution> chosen;
    if (!chosen_arg.empty()) {
        std::size_t comma = chosen_arg.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--chosen expects 'a,h'");
        chosen = ControlDistribution{std::stoi(chosen_arg.substr(0, comma)),
                                     std::stoi(chosen_arg.substr(comma + 1))};
    } else {
        SelectionPolicy policy = parse_policy_name(global.policy_name);
        SolveOutcome outcome = solve_distribution(requirement, kind, cap_auto, cap_human, policy);
        if (!outcome.is_deficit())
            chosen = outcome.chosen().point;
    }
    DiagramFormat format = render_name == "svg" ? DiagramFormat::Svg : DiagramFormat::Ascii;
    std::cout << render_cr_diagram(requirement, kind, cap_auto, cap_human, chosen, format);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"capability delta engine for human-autonomy teams"};
    app.require_subcommand(1);

    GlobalArgs global;
    app.add_option("--team", global.team_path, "team config file");
    CLI::Option* policy_opt =
        app.add_option("--policy", global.policy_name, "max-human | min-support | min-delta");
    app.add_option("--format", global.format, "text | machine")
        ->check(CLI::IsMember({"text", "machine"}));

    std::vector<std::string> profile_paths;
    std::string human_path, auto_path, task_path, performances_path, scenario_path;
    std::string kind_name = "non_summative", chosen_arg, render_name = "ascii";
    int requirement = 0, cap_auto = 0, cap_human = 0;
    std::uint64_t seed = 0;
    bool parallel = false;

    CLI::App* validate = app.add_subcommand("validate", "validate profiles and team config");
    validate->fallthrough();
    validate->add_option("profiles", profile_paths, "profile files")->required();
    validate->add_option("--task", task_path, "task file to cross-check");

    CLI::App* delta = app.add_subcommand("delta", "compute capability delta report");
    delta->fallthrough();
    delta->add_option("--human", human_path)->required();
    delta->add_option("--autonomous", auto_path)->required();
    delta->add_option("--task", task_path)->required();
    delta->add_option("--performances", performances_path, "performance assignment file");
    delta->add_flag("--parallel", parallel, "evaluate actions concurrently, output in task order");

    CLI::App* solve = app.add_subcommand("solve", "solve one control distribution");
    solve->fallthrough();
    solve->add_option("--requirement", requirement)->required();
    solve->add_option("--kind", kind_name, "summative | non_summative")->required();
    solve->add_option("--cap-auto", cap_auto)->required();
    solve->add_option("--cap-human", cap_human)->required();

    CLI::App* compensate = app.add_subcommand("compensate", "run the delta compensation pattern");
    compensate->fallthrough();
    compensate->add_option("--human", human_path)->required();
    compensate->add_option("--autonomous", auto_path)->required();
    compensate->add_option("--task", task_path)->required();

    CLI::App* simulate = app.add_subcommand("simulate", "simulate arbitration over a sequence");
    simulate->fallthrough();
    simulate->add_option("--scenario", scenario_path)->required();
    CLI::Option* seed_opt = simulate->add_option("--seed", seed, "override the scenario seed");

    CLI::App* diagram = app.add_subcommand("diagram", "render a CR diagram");
    diagram->fallthrough();
    diagram->add_option("--requirement", requirement)->required();
    diagram->add_option("--kind", kind_name, "summative | non_summative")->required();
    diagram->add_option("--cap-auto", cap_auto)->required();
    diagram->add_option("--cap-human", cap_human)->required();
    diagram->add_option("--chosen", chosen_arg, "mark point 'a,h' instead of solving");
    diagram->add_option("--render", render_name, "ascii | svg")
        ->check(CLI::IsMember({"ascii", "svg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitParse;
    }

    bool policy_given = policy_opt->count() > 0;
    try {
        if (validate->parsed()) {
            if (global.team_path.empty())
                throw std::invalid_argument("validate requires --team");
            return cmd_validate(global, profile_paths, task_path);
        }
        if (delta->parsed()) {
            if (global.team_path.empty())
                throw std::invalid_argument("delta requires --team");
            return cmd_delta(global, policy_given, human_path, auto_path, task_path,
                             performances_path, parallel);
        }
        if (solve->parsed())
            return cmd_solve(global, requirement, kind_name, cap_auto, cap_human);
        if (compensate->parsed()) {
            if (global.team_path.empty())
                throw std::invalid_argument("compensate requires --team");
            return cmd_compensate(global, policy_given, human_path, auto_path, task_path);
        }
        if (simulate->parsed())
            return cmd_simulate(global, policy_given, scenario_path, seed_opt->count() > 0, seed);
        if (diagram->parsed())
            return cmd_diagram(global, requirement, kind_name, cap_auto, cap_human, chosen_arg,
                               render_name);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
