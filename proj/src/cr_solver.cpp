#include "capdelta/cr_solver.hpp"

#include <algorithm>
#include <limits>

namespace capdelta {

std::vector<ControlDistribution> enumerate_grid(int cap_auto, int cap_human) {
    std::vector<ControlDistribution> grid;
    grid.reserve(static_cast<std::size_t>(cap_auto + 1) * (cap_human + 1));
    for (int a = 0; a <= cap_auto; ++a)
        for (int h = 0; h <= cap_human; ++h)
            grid.push_back({a, h});
    return grid;
}

SpaceLabel classify_point(const ControlDistribution& p, int requirement) {
    if (std::max(p.auto_perf, p.human_perf) >= requirement)
        return SpaceLabel::Collaborative;
    if (p.auto_perf + p.human_perf >= requirement)
        return SpaceLabel::SummativeOnly;
    return SpaceLabel::Insufficient;
}

std::vector<ControlDistribution> requirement_line(int requirement, AggregationKind kind,
                                                  int cap_auto, int cap_human) {
    std::vector<ControlDistribution> line;
    for (const ControlDistribution& p : enumerate_grid(cap_auto, cap_human)) {
        // Pre-clamp line: a+h = r for summative, max(a,h) = r otherwise.
        int f = kind == AggregationKind::Summative ? p.auto_perf + p.human_perf
                                                   : std::max(p.auto_perf, p.human_perf);
        if (f == requirement)
            line.push_back(p);
    }
    return line;
}

int point_delta(const ControlDistribution& p, int requirement, AggregationKind kind,
                const QuantScale& scale) {
    return requirement - team_capability(p.human_perf, p.auto_perf, kind, scale);
}

bool policy_prefers(SelectionPolicy policy, const ControlDistribution& lhs,
                    const ControlDistribution& rhs) {
    switch (policy) {
    case SelectionPolicy::MinSupport:
        if (lhs.auto_perf != rhs.auto_perf)
            return lhs.auto_perf < rhs.auto_perf;
        return lhs.human_perf > rhs.human_perf;
    case SelectionPolicy::MaxHuman:
    case SelectionPolicy::MinDelta:
    default:
        if (lhs.human_perf != rhs.human_perf)
            return lhs.human_perf > rhs.human_perf;
        return lhs.auto_perf < rhs.auto_perf;
    }
}

namespace {

ControlDistribution pick(SelectionPolicy policy, const std::vector<ControlDistribution>& points) {
    ControlDistribution best = points.front();
    for (const ControlDistribution& p : points)
        if (policy_prefers(policy, p, best))
            best = p;
    return best;
}

} // namespace

SolveOutcome solve_distribution(int requirement, AggregationKind kind, int cap_auto,
                                int cap_human, SelectionPolicy policy, QuantScale scale) {
    scale.require(requirement, "requirement");
    scale.require(cap_auto, "autonomous capacity");
    scale.require(cap_human, "human capacity");

    auto finish = [&](const ControlDistribution& point) {
        ChosenDistribution chosen;
        chosen.point = point;
        chosen.residual_delta = point_delta(point, requirement, kind, scale);
        chosen.space = classify_point(point, requirement);
        return SolveOutcome{chosen};
    };

    std::vector<ControlDistribution> line = requirement_line(requirement, kind, cap_auto, cap_human);
    if (!line.empty())
        return finish(pick(policy, line));

    // Off the line: take the feasible points with minimal overshoot; if none
    // reach the requirement, the team is in a control deficit.
    int best_value = std::numeric_limits<int>::min();
    std::vector<ControlDistribution> closest;
    int min_overshoot = std::numeric_limits<int>::max();
    for (const ControlDistribution& p : enumerate_grid(cap_auto, cap_human)) {
        int f = team_capability(p.human_perf, p.auto_perf, kind, scale);
        best_value = std::max(best_value, f);
        if (f < requirement)
            continue;
        int overshoot = f - requirement;
        if (overshoot < min_overshoot) {
            min_overshoot = overshoot;
            closest.clear();
        }
        if (overshoot == min_overshoot)
            closest.push_back(p);
    }
    if (!closest.empty())
        return finish(pick(policy, closest));

    ControlDeficit deficit;
    deficit.requirement = requirement;
    deficit.cap_auto = cap_auto;
    deficit.cap_human = cap_human;
    deficit.best_achievable = best_value;
    return SolveOutcome{deficit};
}

ControlDistribution best_effort_point(int requirement, AggregationKind kind, int cap_auto,
                                      int cap_human, SelectionPolicy policy, QuantScale scale) {
    SolveOutcome outcome = solve_distribution(requirement, kind, cap_auto, cap_human, policy, scale);
    if (!outcome.is_deficit())
        return outcome.chosen().point;
    int best = outcome.deficit().best_achievable;
    std::vector<ControlDistribution> candidates;
    for (const ControlDistribution& p : enumerate_grid(cap_auto, cap_human))
        if (team_capability(p.human_perf, p.auto_perf, kind, scale) == best)
            candidates.push_back(p);
    return pick(policy, candidates);
}

} // namespace capdelta
