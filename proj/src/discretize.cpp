#include "capdelta/discretize.hpp"

#include <cmath>
#include <stdexcept>

namespace capdelta {

int discretize(double quantity, const DiscretizerSpec& spec) {
    spec.scale.check();
    if (!(spec.category_width > 0.0))
        throw std::invalid_argument("category width must be > 0");
    if (!std::isfinite(quantity))
        throw std::domain_error("quantity must be finite");

    // Tolerance so exact category multiples land in their own category
    // despite decimal representation error.
    const double ratio = std::fabs(quantity) / spec.category_width + 1e-9;
    double value = spec.kind == DiscretizerKind::Linear ? std::floor(ratio)
                                                        : std::floor(std::sqrt(ratio) + 1e-9);
    if (value < 0.0)
        value = 0.0;
    if (value > spec.scale.q_max)
        value = spec.scale.q_max;
    return static_cast<int>(value);
}

} // namespace capdelta
