#pragma once
// Discretization of real-world magnitudes onto the quantification range.

#include "capdelta/quant.hpp"

namespace capdelta {

enum class DiscretizerKind { Linear, Quadratic };

struct DiscretizerSpec {
    DiscretizerKind kind = DiscretizerKind::Linear;
    double category_width = 1.0; // > 0
    QuantScale scale;

    bool operator==(const DiscretizerSpec&) const = default;
};

// Linear: floor(|quantity| / width). Quadratic: floor(sqrt(|quantity| / width)).
// Result clamped to [0, q_max]. Throws on non-finite quantities or invalid specs.
int discretize(double quantity, const DiscretizerSpec& spec);

} // namespace capdelta
