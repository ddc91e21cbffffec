#pragma once
// Quantification range Q = {0, ..., q_max} shared by capacities,
// performances and requirements.

#include <stdexcept>
#include <string>

namespace capdelta {

struct QuantScale {
    int q_max = 5;

    bool operator==(const QuantScale&) const = default;

    bool contains(int value) const { return value >= 0 && value <= q_max; }

    void check() const {
        if (q_max < 1)
            throw std::invalid_argument("q_max must be >= 1, got " + std::to_string(q_max));
    }

    // Throws when a value lies outside Q; `what` names the offending quantity.
    void require(int value, const char* what) const {
        if (!contains(value))
            throw std::invalid_argument(std::string(what) + " = " + std::to_string(value) +
                                        " outside quantification range [0, " +
                                        std::to_string(q_max) + "]");
    }
};

} // namespace capdelta
