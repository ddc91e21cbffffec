#pragma once
// Text file formats: sectioned key-value documents for profiles, team
// configs, tasks, scenarios and performance assignments. Hand-editable,
// versioned, parsed with location-bearing errors; unknown keys are rejected.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "capdelta/aggregation.hpp"
#include "capdelta/arbitration.hpp"
#include "capdelta/compensation.hpp"
#include "capdelta/profile.hpp"

namespace capdelta {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, int line, const std::string& message);

    const std::string& file() const { return file_; }
    int line() const { return line_; } // 0 when no line applies

private:
    std::string file_;
    int line_ = 0;
};

// Raw sectioned key-value document. Section "" holds the preamble entries.
struct DocEntry {
    std::string key;
    std::string value;
    int line = 0;
};

struct DocSection {
    std::string name;
    int line = 0;
    std::vector<DocEntry> entries;
};

struct Document {
    std::vector<DocSection> sections; // front() is the unnamed preamble
};

Document parse_document(const std::string& text, const std::string& filename);

// Line of `key` within `section`, or 0 when not found. Lets validation
// messages carry file positions without threading locations through the
// typed structs.
int find_entry_line(const Document& doc, const std::string& section, const std::string& key);

// ---- typed files -----------------------------------------------------

struct ProfileFile {
    AgentProfile profile;
    QuantScale scale;

    bool operator==(const ProfileFile&) const = default;
};

struct TeamConfig {
    QuantScale scale;
    std::map<CapabilityId, AggregationKind> overrides;
    std::vector<ConjugatedPair> pairs;
    SelectionPolicy default_policy = SelectionPolicy::MaxHuman;

    bool operator==(const TeamConfig&) const = default;
};

struct TaskFile {
    std::vector<Action> actions; // file order

    bool operator==(const TaskFile&) const = default;
};

struct ScenarioFile {
    std::string human_path;
    std::string autonomous_path;
    std::string team_path;
    std::string task_path;
    SimulationConfig config;
    std::vector<std::string> sequence; // action ids, or "break"

    bool operator==(const ScenarioFile&) const = default;
};

struct PerformanceFile {
    PerformanceAssignment human;
    PerformanceAssignment autonomous;

    bool operator==(const PerformanceFile&) const = default;
};

ProfileFile parse_profile(const std::string& text, const std::string& filename = "<string>");
std::string serialize_profile(const ProfileFile& file);

TeamConfig parse_team_config(const std::string& text, const std::string& filename = "<string>");
std::string serialize_team_config(const TeamConfig& config);

TaskFile parse_task(const std::string& text, const std::string& filename = "<string>");
std::string serialize_task(const TaskFile& task);

ScenarioFile parse_scenario(const std::string& text, const std::string& filename = "<string>");
std::string serialize_scenario(const ScenarioFile& scenario);

PerformanceFile parse_performances(const std::string& text,
                                   const std::string& filename = "<string>");
std::string serialize_performances(const PerformanceFile& file);

// Whole-file read; throws ParseError when the file cannot be opened.
std::string read_file(const std::string& path);

SelectionPolicy parse_policy_name(const std::string& name); // throws on unknown names
AggregationKind parse_kind_name(const std::string& name);

} // namespace capdelta
