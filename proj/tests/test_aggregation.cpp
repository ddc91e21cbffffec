#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "capdelta/aggregation.hpp"
#include "capdelta/taxonomy.hpp"

using namespace capdelta;

namespace {

const QuantScale kScale{5};

CapabilityId id(const char* text) { return parse_capability_id(text); }

} // namespace

TEST_CASE("team capability examples") {
    CHECK(team_capability(1, 3, AggregationKind::Summative, kScale) == 4);
    CHECK(team_capability(4, 4, AggregationKind::Summative, kScale) == 5); // clamped
    CHECK(team_capability(2, 3, AggregationKind::NonSummative, kScale) == 3);
    CHECK_THROWS_AS(team_capability(6, 0, AggregationKind::Summative, kScale),
                    std::invalid_argument);
    CHECK_THROWS_AS(team_capability(0, -1, AggregationKind::NonSummative, kScale),
                    std::invalid_argument);
}

TEST_CASE("capability delta examples and range law") {
    CHECK(capability_delta(4, 4, kScale) == 0);
    CHECK(capability_delta(0, 3, kScale) == -3);
    CHECK(capability_delta(5, 0, kScale) == 5);
    CHECK_THROWS_AS(capability_delta(6, 0, kScale), std::invalid_argument);

    for (int r = 0; r <= 5; ++r)
        for (int c = 0; c <= 5; ++c) {
            int d = capability_delta(r, c, kScale);
            CHECK(d == r - c);
            CHECK(d >= -5);
            CHECK(d <= 5);
        }
}

TEST_CASE("aggregation kinds: exhaustive grid properties") {
    for (int a = 0; a <= 5; ++a)
        for (int h = 0; h <= 5; ++h) {
            int sum = team_capability(h, a, AggregationKind::Summative, kScale);
            int max = team_capability(h, a, AggregationKind::NonSummative, kScale);
            CHECK(sum == std::min(a + h, 5));
            CHECK(max == std::max(a, h));
            CHECK(sum >= max); // sum dominates max on non-negatives
            // commutativity
            CHECK(sum == team_capability(a, h, AggregationKind::Summative, kScale));
            CHECK(max == team_capability(a, h, AggregationKind::NonSummative, kScale));
            // monotonicity in each argument
            if (h < 5) {
                CHECK(team_capability(h + 1, a, AggregationKind::Summative, kScale) >= sum);
                CHECK(team_capability(h + 1, a, AggregationKind::NonSummative, kScale) >= max);
            }
            if (a < 5) {
                CHECK(team_capability(h, a + 1, AggregationKind::Summative, kScale) >= sum);
                CHECK(team_capability(h, a + 1, AggregationKind::NonSummative, kScale) >= max);
            }
        }
    // delta antitone in team capability, monotone in requirement
    for (int r = 0; r <= 5; ++r)
        for (int c = 0; c < 5; ++c)
            CHECK(capability_delta(r, c + 1, kScale) <= capability_delta(r, c, kScale));
    for (int c = 0; c <= 5; ++c)
        for (int r = 0; r < 5; ++r)
            CHECK(capability_delta(r + 1, c, kScale) >= capability_delta(r, c, kScale));
}

TEST_CASE("team spec defaults and overrides") {
    Taxonomy t = builtin_imba_subset();
    TeamSpec spec = TeamSpec::from_taxonomy(t, kScale);
    CHECK(spec.kind_for(id("5.01")) == AggregationKind::Summative);
    CHECK(spec.kind_for(id("3.03")) == AggregationKind::NonSummative);
    CHECK(spec.kind_for(id("9.05")) == AggregationKind::NonSummative);
    CHECK_THROWS_AS(spec.kind_for(id("7.77")), std::invalid_argument);

    TeamSpec overridden = TeamSpec::from_taxonomy(
        t, kScale, {{id("3.03"), AggregationKind::Summative}});
    CHECK(overridden.kind_for(id("3.03")) == AggregationKind::Summative);

    CHECK_THROWS_AS(
        TeamSpec::from_taxonomy(t, kScale, {{id("7.77"), AggregationKind::Summative}}),
        std::invalid_argument);
}

TEST_CASE("delta vector examples") {
    Taxonomy t = builtin_imba_subset();
    TeamSpec spec = TeamSpec::from_taxonomy(t, kScale);

    Action reach;
    reach.action_id = "reach";
    reach.requirements[id("3.03")] = 3;
    PerformanceAssignment human;
    human.values[id("3.03")] = 3;
    PerformanceAssignment autonomous; // empty: missing keys count as 0

    DeltaVector dv = delta_vector(reach, human, autonomous, spec);
    REQUIRE(dv.deltas.size() == 1);
    CHECK(dv.deltas[0].capability == id("3.03"));
    CHECK(dv.deltas[0].value == 0);

    Action no_trunk;
    no_trunk.action_id = "haul";
    no_trunk.requirements[id("3.02")] = 0;
    for (int h = 0; h <= 5; ++h) {
        PerformanceAssignment perf;
        perf.values[id("3.02")] = h;
        DeltaVector zero_req = delta_vector(no_trunk, perf, autonomous, spec);
        CHECK(zero_req.deltas[0].value <= 0);
    }

    Action empty;
    empty.action_id = "empty";
    DeltaVector nothing = delta_vector(empty, human, autonomous, spec);
    CHECK(nothing.deltas.empty());
    CHECK(classify_fulfillment(nothing) == Fulfillment::Fulfilled);
}

TEST_CASE("delta vector keys equal the action requirement keys") {
    Taxonomy t = builtin_imba_subset();
    TeamSpec spec = TeamSpec::from_taxonomy(t, kScale);
    Action action;
    action.action_id = "a";
    action.requirements[id("3.02")] = 2;
    action.requirements[id("3.03")] = 4;
    action.requirements[id("9.05")] = 1;
    PerformanceAssignment human;
    human.values[id("3.03")] = 1;
    human.values[id("1.05")] = 5; // not part of the action, must not appear
    DeltaVector dv = delta_vector(action, human, {}, spec);
    REQUIRE(dv.deltas.size() == action.requirements.size());
    std::size_t i = 0;
    for (const auto& [key, value] : action.requirements) {
        (void)value;
        CHECK(dv.deltas[i++].capability == key);
    }
}

TEST_CASE("fulfillment classification") {
    auto dv = [](std::vector<int> values) {
        DeltaVector d;
        d.action_id = "x";
        int top = 1;
        for (int v : values)
            d.deltas.push_back({parse_capability_id("3.0" + std::to_string(top++)), v});
        return d;
    };
    CHECK(classify_fulfillment(dv({0, 0})) == Fulfillment::Fulfilled);
    CHECK(classify_fulfillment(dv({-1, 0})) == Fulfillment::OverFulfilled);
    CHECK(classify_fulfillment(dv({2, -3})) == Fulfillment::UnderFulfilled);
    CHECK(classify_fulfillment(dv({})) == Fulfillment::Fulfilled);
}
