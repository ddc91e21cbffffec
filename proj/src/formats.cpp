#include "capdelta/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace capdelta {

namespace {

std::string location(const std::string& file, int line) {
    if (line <= 0)
        return file;
    return file + ":" + std::to_string(line);
}

std::string trim(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    std::size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& file, int line, const std::string& message) {
    throw ParseError(file, line, message);
}

int to_int(const DocEntry& e, const std::string& file) {
    int value = 0;
    const std::string& s = e.value;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        fail(file, e.line, "expected integer for '" + e.key + "', got '" + s + "'");
    return value;
}

std::uint64_t to_u64(const DocEntry& e, const std::string& file) {
    std::uint64_t value = 0;
    const std::string& s = e.value;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        fail(file, e.line, "expected unsigned integer for '" + e.key + "', got '" + s + "'");
    return value;
}

double to_double(const DocEntry& e, const std::string& file) {
    double value = 0.0;
    const std::string& s = e.value;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        fail(file, e.line, "expected number for '" + e.key + "', got '" + s + "'");
    return value;
}

bool to_bool(const DocEntry& e, const std::string& file) {
    if (e.value == "true")
        return true;
    if (e.value == "false")
        return false;
    fail(file, e.line, "expected 'true' or 'false' for '" + e.key + "', got '" + e.value + "'");
}

CapabilityId key_as_id(const DocEntry& e, const std::string& file) {
    try {
        return parse_capability_id(e.key);
    } catch (const std::invalid_argument& err) {
        fail(file, e.line, err.what());
    }
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

const DocSection* find_section(const Document& doc, const std::string& name) {
    for (const DocSection& s : doc.sections)
        if (s.name == name)
            return &s;
    return nullptr;
}

const DocEntry* find_entry(const DocSection& section, const std::string& key) {
    for (const DocEntry& e : section.entries)
        if (e.key == key)
            return &e;
    return nullptr;
}

const DocEntry& require_entry(const Document& doc, const std::string& section,
                              const std::string& key, const std::string& file) {
    const DocSection* s = find_section(doc, section);
    const DocEntry* e = s ? find_entry(*s, key) : nullptr;
    if (!e) {
        std::string where = section.empty() ? key : section + "." + key;
        fail(file, 0, "missing required field '" + where + "'");
    }
    return *e;
}

void reject_unknown_keys(const DocSection& section, std::initializer_list<const char*> allowed,
                         const std::string& file) {
    for (const DocEntry& e : section.entries) {
        bool known = std::any_of(allowed.begin(), allowed.end(),
                                 [&](const char* k) { return e.key == k; });
        if (!known)
            fail(file, e.line, "unknown key '" + e.key + "' in section [" + section.name + "]");
        bool duplicate = std::count_if(section.entries.begin(), section.entries.end(),
                                       [&](const DocEntry& other) { return other.key == e.key; }) > 1;
        if (duplicate)
            fail(file, e.line, "duplicate key '" + e.key + "'");
    }
}

void check_format_version(const Document& doc, const std::string& file) {
    const DocEntry& version = require_entry(doc, "", "format_version", file);
    int v = to_int(version, file);
    if (v != 1)
        fail(file, version.line, "unsupported format_version " + std::to_string(v));
}

std::map<std::string, bool> read_bool_table(const Document& doc, const std::string& section,
                                            const std::string& file) {
    std::map<std::string, bool> table;
    const DocSection* s = find_section(doc, section);
    if (!s)
        return table;
    for (const DocEntry& e : s->entries) {
        if (table.count(e.key))
            fail(file, e.line, "duplicate resource '" + e.key + "'");
        table[e.key] = to_bool(e, file);
    }
    return table;
}

} // namespace

ParseError::ParseError(std::string file, int line, const std::string& message)
    : std::runtime_error(location(file, line) + ": " + message), file_(std::move(file)),
      line_(line) {}

Document parse_document(const std::string& text, const std::string& filename) {
    Document doc;
    doc.sections.push_back({"", 0, {}});
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                fail(filename, lineno, "unterminated section header");
            std::string name = trim(line.substr(1, line.size() - 2));
            if (name.empty())
                fail(filename, lineno, "empty section name");
            doc.sections.push_back({name, lineno, {}});
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail(filename, lineno, "expected 'key = value', got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            fail(filename, lineno, "empty key");
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        doc.sections.back().entries.push_back({key, value, lineno});
    }
    return doc;
}

int find_entry_line(const Document& doc, const std::string& section, const std::string& key) {
    const DocSection* s = find_section(doc, section);
    if (!s)
        return 0;
    const DocEntry* e = find_entry(*s, key);
    return e ? e->line : 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path, 0, "cannot open file");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

SelectionPolicy parse_policy_name(const std::string& name) {
    if (name == "max-human")
        return SelectionPolicy::MaxHuman;
    if (name == "min-support")
        return SelectionPolicy::MinSupport;
    if (name == "min-delta")
        return SelectionPolicy::MinDelta;
    throw std::invalid_argument("unknown policy name '" + name +
                                "' (expected max-human, min-support or min-delta)");
}

AggregationKind parse_kind_name(const std::string& name) {
    if (name == "summative")
        return AggregationKind::Summative;
    if (name == "non_summative")
        return AggregationKind::NonSummative;
    throw std::invalid_argument("unknown aggregation kind '" + name +
                                "' (expected summative or non_summative)");
}

// ---- profile ----------------------------------------------------------

ProfileFile parse_profile(const std::string& text, const std::string& filename) {
    Document doc = parse_document(text, filename);
    check_format_version(doc, filename);
    for (const DocSection& s : doc.sections) {
        if (s.name.empty() || s.name == "scale" || s.name == "capacities" ||
            s.name == "resources" || s.name == "resources.actuation" ||
            s.name == "resources.environmental" || s.name == "resources.societal")
            continue;
        fail(filename, s.line, "unknown section [" + s.name + "]");
    }

    ProfileFile file;
    reject_unknown_keys(doc.sections.front(), {"format_version", "agent_id", "kind"}, filename);
    file.profile.agent_id = require_entry(doc, "", "agent_id", filename).value;
    const DocEntry& kind = require_entry(doc, "", "kind", filename);
    if (kind.value == "human")
        file.profile.kind = AgentKind::Human;
    else if (kind.value == "autonomous")
        file.profile.kind = AgentKind::Autonomous;
    else
        fail(filename, kind.line, "kind must be 'human' or 'autonomous', got '" + kind.value + "'");

    if (const DocSection* s = find_section(doc, "scale")) {
        reject_unknown_keys(*s, {"q_max"}, filename);
        file.scale.q_max = to_int(require_entry(doc, "scale", "q_max", filename), filename);
        if (file.scale.q_max < 1)
            fail(filename, find_entry_line(doc, "scale", "q_max"), "q_max must be >= 1");
    } else {
        fail(filename, 0, "missing required section [scale]");
    }

    if (const DocSection* s = find_section(doc, "capacities")) {
        for (const DocEntry& e : s->entries) {
            CapabilityId id = key_as_id(e, filename);
            if (file.profile.capacities.count(id))
                fail(filename, e.line, "duplicate capability '" + e.key + "'");
            file.profile.capacities[id] = to_int(e, filename);
        }
    }

    if (const DocSection* s = find_section(doc, "resources")) {
        reject_unknown_keys(*s, {"mental_stamina"}, filename);
        if (const DocEntry* e = find_entry(*s, "mental_stamina"))
            file.profile.resources.mental_stamina = to_double(*e, filename);
    }
    file.profile.resources.actuation = read_bool_table(doc, "resources.actuation", filename);
    file.profile.resources.environmental =
        read_bool_table(doc, "resources.environmental", filename);
    file.profile.resources.societal = read_bool_table(doc, "resources.societal", filename);
    return file;
}

std::string serialize_profile(const ProfileFile& file) {
    std::ostringstream out;
    out << "format_version = 1\n";
    out << "agent_id = " << file.profile.agent_id << "\n";
    out << "kind = " << to_string(file.profile.kind) << "\n";
    out << "\n[scale]\nq_max = " << file.scale.q_max << "\n";
    out << "\n[capacities]\n";
    for (const auto& [id, capacity] : file.profile.capacities)
        out << render(id) << " = " << capacity << "\n";
    out << "\n[resources]\nmental_stamina = "
        << format_double(file.profile.resources.mental_stamina) << "\n";
    auto emit_table = [&](const char* name, const std::map<std::string, bool>& table) {
        if (table.empty())
            return;
        out << "\n[resources." << name << "]\n";
        for (const auto& [key, value] : table)
            out << key << " = " << (value ? "true" : "false") << "\n";
    };
    emit_table("actuation", file.profile.resources.actuation);
    emit_table("environmental", file.profile.resources.environmental);
    emit_table("societal", file.profile.resources.societal);
    return out.str();
}

// ---- team config -------------------------------------------------------

TeamConfig parse_team_config(const std::string& text, const std::string& filename) {
    Document doc = parse_document(text, filename);
    check_format_version(doc, filename);
    for (const DocSection& s : doc.sections) {
        if (s.name.empty() || s.name == "scale" || s.name == "aggregation" || s.name == "pairs")
            continue;
        fail(filename, s.line, "unknown section [" + s.name + "]");
    }

    TeamConfig config;
    reject_unknown_keys(doc.sections.front(), {"format_version", "policy"}, filename);
    if (const DocEntry* e = find_entry(doc.sections.front(), "policy")) {
        try {
            config.default_policy = parse_policy_name(e->value);
        } catch (const std::invalid_argument& err) {
            fail(filename, e->line, err.what());
        }
    }

    if (const DocSection* s = find_section(doc, "scale")) {
        reject_unknown_keys(*s, {"q_max"}, filename);
        config.scale.q_max = to_int(require_entry(doc, "scale", "q_max", filename), filename);
        if (config.scale.q_max < 1)
            fail(filename, find_entry_line(doc, "scale", "q_max"), "q_max must be >= 1");
    } else {
        fail(filename, 0, "missing required section [scale]");
    }

    if (const DocSection* s = find_section(doc, "aggregation")) {
        for (const DocEntry& e : s->entries) {
            CapabilityId id = key_as_id(e, filename);
            if (config.overrides.count(id))
                fail(filename, e.line, "duplicate aggregation override '" + e.key + "'");
            try {
                config.overrides[id] = parse_kind_name(e.value);
            } catch (const std::invalid_argument& err) {
                fail(filename, e.line, err.what());
            }
        }
    }

    if (const DocSection* s = find_section(doc, "pairs")) {
        for (const DocEntry& e : s->entries) {
            std::size_t arrow = e.key.find("->");
            if (arrow == std::string::npos)
                fail(filename, e.line,
                     "expected pair key '<degraded> -> <compensator>', got '" + e.key + "'");
            ConjugatedPair pair;
            try {
                pair.degraded = parse_capability_id(trim(e.key.substr(0, arrow)));
                pair.compensator = parse_capability_id(trim(e.key.substr(arrow + 2)));
            } catch (const std::invalid_argument& err) {
                fail(filename, e.line, err.what());
            }
            if (pair.degraded == pair.compensator)
                fail(filename, e.line, "pair must relate two distinct capabilities");
            pair.rate = to_double(e, filename);
            if (!(pair.rate > 0.0))
                fail(filename, e.line, "pair rate must be > 0");
            bool duplicate = std::any_of(
                config.pairs.begin(), config.pairs.end(), [&](const ConjugatedPair& p) {
                    return p.degraded == pair.degraded && p.compensator == pair.compensator;
                });
            if (duplicate)
                fail(filename, e.line, "duplicate pair '" + e.key + "'");
            config.pairs.push_back(pair);
        }
    }
    return config;
}

std::string serialize_team_config(const TeamConfig& config) {
    std::ostringstream out;
    out << "format_version = 1\n";
    out << "policy = " << to_string(config.default_policy) << "\n";
    out << "\n[scale]\nq_max = " << config.scale.q_max << "\n";
    if (!config.overrides.empty()) {
        out << "\n[aggregation]\n";
        for (const auto& [id, kind] : config.overrides)
            out << render(id) << " = " << to_string(kind) << "\n";
    }
    if (!config.pairs.empty()) {
        out << "\n[pairs]\n";
        for (const ConjugatedPair& pair : config.pairs)
            out << render(pair.degraded) << " -> " << render(pair.compensator) << " = "
                << format_double(pair.rate) << "\n";
    }
    return out.str();
}

// ---- task ----------------------------------------------------------------

TaskFile parse_task(const std::string& text, const std::string& filename) {
    Document doc = parse_document(text, filename);
    check_format_version(doc, filename);
    reject_unknown_keys(doc.sections.front(), {"format_version"}, filename);

    TaskFile task;
    for (const DocSection& s : doc.sections) {
        if (s.name.empty())
            continue;
        if (s.name.rfind("action ", 0) != 0)
            fail(filename, s.line, "unknown section [" + s.name + "] (expected [action <id>])");
        Action action;
        action.action_id = trim(s.name.substr(7));
        if (action.action_id.empty())
            fail(filename, s.line, "action id must not be empty");
        bool duplicate = std::any_of(task.actions.begin(), task.actions.end(),
                                     [&](const Action& a) { return a.action_id == action.action_id; });
        if (duplicate)
            fail(filename, s.line, "duplicate action '" + action.action_id + "'");
        for (const DocEntry& e : s.entries) {
            CapabilityId id = key_as_id(e, filename);
            if (action.requirements.count(id))
                fail(filename, e.line, "duplicate requirement '" + e.key + "'");
            action.requirements[id] = to_int(e, filename);
        }
        task.actions.push_back(std::move(action));
    }
    return task;
}

std::string serialize_task(const TaskFile& task) {
    std::ostringstream out;
    out << "format_version = 1\n";
    for (const Action& action : task.actions) {
        out << "\n[action " << action.action_id << "]\n";
        for (const auto& [id, requirement] : action.requirements)
            out << render(id) << " = " << requirement << "\n";
    }
    return out.str();
}

// ---- scenario --------------------------------------------------------------

ScenarioFile parse_scenario(const std::string& text, const std::string& filename) {
    Document doc = parse_document(text, filename);
    check_format_version(doc, filename);
    for (const DocSection& s : doc.sections) {
        if (s.name.empty() || s.name == "config" || s.name == "sequence")
            continue;
        fail(filename, s.line, "unknown section [" + s.name + "]");
    }

    ScenarioFile scenario;
    reject_unknown_keys(doc.sections.front(),
                        {"format_version", "human", "autonomous", "team", "task"}, filename);
    scenario.human_path = require_entry(doc, "", "human", filename).value;
    scenario.autonomous_path = require_entry(doc, "", "autonomous", filename).value;
    scenario.team_path = require_entry(doc, "", "team", filename).value;
    scenario.task_path = require_entry(doc, "", "task", filename).value;

    if (const DocSection* s = find_section(doc, "config")) {
        reject_unknown_keys(*s,
                            {"seed", "max_rounds", "perception_noise", "stamina_drain_per_action",
                             "stamina_recovery_per_break"},
                            filename);
        if (const DocEntry* e = find_entry(*s, "seed"))
            scenario.config.seed = to_u64(*e, filename);
        if (const DocEntry* e = find_entry(*s, "max_rounds"))
            scenario.config.max_rounds = to_int(*e, filename);
        if (const DocEntry* e = find_entry(*s, "perception_noise"))
            scenario.config.perception_noise = to_double(*e, filename);
        if (const DocEntry* e = find_entry(*s, "stamina_drain_per_action"))
            scenario.config.stamina_drain_per_action = to_double(*e, filename);
        if (const DocEntry* e = find_entry(*s, "stamina_recovery_per_break"))
            scenario.config.stamina_recovery_per_break = to_double(*e, filename);
        try {
            scenario.config.check();
        } catch (const std::invalid_argument& err) {
            fail(filename, s->line, err.what());
        }
    }

    if (const DocSection* s = find_section(doc, "sequence")) {
        for (const DocEntry& e : s->entries) {
            if (e.key != "step")
                fail(filename, e.line, "unknown key '" + e.key + "' in [sequence] (expected step)");
            if (e.value.empty())
                fail(filename, e.line, "step must name an action or 'break'");
            scenario.sequence.push_back(e.value);
        }
    }
    return scenario;
}

std::string serialize_scenario(const ScenarioFile& scenario) {
    std::ostringstream out;
    out << "format_version = 1\n";
    out << "human = " << scenario.human_path << "\n";
    out << "autonomous = " << scenario.autonomous_path << "\n";
    out << "team = " << scenario.team_path << "\n";
    out << "task = " << scenario.task_path << "\n";
    out << "\n[config]\n";
    out << "seed = " << scenario.config.seed << "\n";
    out << "max_rounds = " << scenario.config.max_rounds << "\n";
    out << "perception_noise = " << format_double(scenario.config.perception_noise) << "\n";
    out << "stamina_drain_per_action = " << format_double(scenario.config.stamina_drain_per_action)
        << "\n";
    out << "stamina_recovery_per_break = "
        << format_double(scenario.config.stamina_recovery_per_break) << "\n";
    if (!scenario.sequence.empty()) {
        out << "\n[sequence]\n";
        for (const std::string& step : scenario.sequence)
            out << "step = " << step << "\n";
    }
    return out.str();
}

// ---- performances -----------------------------------------------------------

PerformanceFile parse_performances(const std::string& text, const std::string& filename) {
    Document doc = parse_document(text, filename);
    check_format_version(doc, filename);
    reject_unknown_keys(doc.sections.front(), {"format_version"}, filename);

    PerformanceFile file;
    for (const DocSection& s : doc.sections) {
        if (s.name.empty())
            continue;
        PerformanceAssignment* target = nullptr;
        if (s.name == "human")
            target = &file.human;
        else if (s.name == "autonomous")
            target = &file.autonomous;
        else
            fail(filename, s.line, "unknown section [" + s.name + "]");
        for (const DocEntry& e : s.entries) {
            CapabilityId id = key_as_id(e, filename);
            if (target->values.count(id))
                fail(filename, e.line, "duplicate performance '" + e.key + "'");
            target->values[id] = to_int(e, filename);
        }
    }
    return file;
}

std::string serialize_performances(const PerformanceFile& file) {
    std::ostringstream out;
    out << "format_version = 1\n";
    auto emit = [&](const char* name, const PerformanceAssignment& perf) {
        out << "\n[" << name << "]\n";
        for (const auto& [id, value] : perf.values)
            out << render(id) << " = " << value << "\n";
    };
    emit("human", file.human);
    emit("autonomous", file.autonomous);
    return out.str();
}

} // namespace capdelta
