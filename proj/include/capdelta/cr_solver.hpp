#pragma once
// The CR diagram: the discrete grid of possible control distributions
// between the two agents, the requirement line on it, and deterministic
// selection of a feasible distribution (or a control deficit).

#include <compare>
#include <optional>
#include <variant>
#include <vector>

#include "capdelta/aggregation.hpp"
#include "capdelta/quant.hpp"

namespace capdelta {

// A point on the CR diagram: autonomous performance on the horizontal axis,
// human performance on the vertical axis.
struct ControlDistribution {
    int auto_perf = 0;
    int human_perf = 0;

    auto operator<=>(const ControlDistribution&) const = default;
};

enum class SpaceLabel { Collaborative, SummativeOnly, Insufficient };

inline const char* to_string(SpaceLabel s) {
    switch (s) {
    case SpaceLabel::Collaborative: return "collaborative";
    case SpaceLabel::SummativeOnly: return "summative_only";
    default: return "insufficient";
    }
}

// Total orderings over candidate points; ties are always resolved, so the
// solver is deterministic.
enum class SelectionPolicy {
    MaxHuman,   // highest human contribution, then least support
    MinSupport, // least autonomous contribution, then highest human
    MinDelta,   // smallest |delta| first, then MaxHuman ordering
};

inline const char* to_string(SelectionPolicy p) {
    switch (p) {
    case SelectionPolicy::MaxHuman: return "max-human";
    case SelectionPolicy::MinSupport: return "min-support";
    default: return "min-delta";
    }
}

struct ChosenDistribution {
    ControlDistribution point;
    int residual_delta = 0; // r - f(point); 0 on the line, < 0 when over-fulfilling
    SpaceLabel space = SpaceLabel::Insufficient;

    bool operator==(const ChosenDistribution&) const = default;
};

struct ControlDeficit {
    int requirement = 0;
    int cap_auto = 0;
    int cap_human = 0;
    int best_achievable = 0; // max over the grid of f

    bool operator==(const ControlDeficit&) const = default;
};

struct SolveOutcome {
    std::variant<ChosenDistribution, ControlDeficit> value;

    bool operator==(const SolveOutcome&) const = default;

    bool is_deficit() const { return std::holds_alternative<ControlDeficit>(value); }
    const ChosenDistribution& chosen() const { return std::get<ChosenDistribution>(value); }
    const ControlDeficit& deficit() const { return std::get<ControlDeficit>(value); }
};

// All (cap_auto+1) x (cap_human+1) integer points enclosed by the capacities.
std::vector<ControlDistribution> enumerate_grid(int cap_auto, int cap_human);

// Collaborative: max(a,h) >= r (feasible for any capability type).
// SummativeOnly: a+h >= r but max(a,h) < r. Insufficient: a+h < r.
SpaceLabel classify_point(const ControlDistribution& p, int requirement);

// In-capacity points with f(a,h) = r exactly. For summative capabilities the
// line is a+h = r before clamping, so clamped overshoot points are excluded.
std::vector<ControlDistribution> requirement_line(int requirement, AggregationKind kind,
                                                  int cap_auto, int cap_human);

// r - f(a,h), the team-level delta of the point.
int point_delta(const ControlDistribution& p, int requirement, AggregationKind kind,
                const QuantScale& scale);

// Picks a point from the requirement line per policy. If the line misses the
// grid, the feasible point with minimal overshoot is chosen instead; if no
// point reaches the requirement, a deficit is reported (a value, not a fault).
SolveOutcome solve_distribution(int requirement, AggregationKind kind, int cap_auto,
                                int cap_human, SelectionPolicy policy, QuantScale scale = {});

// The solved distribution when one exists, otherwise the policy-preferred
// point among those attaining the best achievable team value.
ControlDistribution best_effort_point(int requirement, AggregationKind kind, int cap_auto,
                                      int cap_human, SelectionPolicy policy,
                                      QuantScale scale = {});

// True when lhs precedes rhs under the policy's tie-break ordering (the
// |delta| component of MinDelta is handled by candidate-set construction).
bool policy_prefers(SelectionPolicy policy, const ControlDistribution& lhs,
                    const ControlDistribution& rhs);

} // namespace capdelta
