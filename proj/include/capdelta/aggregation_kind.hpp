#pragma once

namespace capdelta {

// How two agents' performances combine into a team capability.
// Summative: clamped integer sum (forces add up). NonSummative: integer
// maximum (the stronger agent bounds the team).
enum class AggregationKind {
    Summative,
    NonSummative,
};

inline const char* to_string(AggregationKind k) {
    return k == AggregationKind::Summative ? "summative" : "non_summative";
}

} // namespace capdelta
